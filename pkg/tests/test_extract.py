"""URL extraction, suffix-list reduction, whitelist filtering, paradigm
classification and snapshot-fingerprint tests."""

import numpy as np
import pytest

from apktriage.apkcore import open_apk
from apktriage.extract import (
    ImageUndecodable,
    UrlSet,
    classify_paradigm,
    extract_urls,
    filter_whitelist,
    load_suffix_list,
    load_whitelist,
    normalize_url,
    similarity,
    snapshot_fingerprint,
    urlset_from_strings,
)
from apktriage.genscan import detect_generator, load_fingerprints

from apk_builder import build_apk

PSL = load_suffix_list()


class TestPsl:
    @pytest.mark.parametrize("host,expected", [
        ("www.example.com", "example.com"),
        ("example.com", "example.com"),
        ("a.b.example.co.uk", "example.co.uk"),
        ("shop.taobao.com.cn", "taobao.com.cn"),
        ("single", "single"),
    ])
    def test_registrable(self, host, expected):
        assert PSL.registrable(host) == expected

    def test_wildcard_and_exception(self):
        # *.ck is wildcard; !www.ck is the exception
        assert PSL.registrable("shop.anything.ck") == "shop.anything.ck"
        assert PSL.registrable("www.ck") == "www.ck"


class TestNormalize:
    @pytest.mark.parametrize("raw,expected", [
        ("HTTP://Example.COM/Path", "http://example.com/Path"),
        ("https://example.com:443/x", "https://example.com/x"),
        ("http://example.com:80/", "http://example.com/"),
        ("http://example.com:8080/", "http://example.com:8080/"),
        ("http://example.com/a#frag", "http://example.com/a"),
        ("http://example.com/a?q=1", "http://example.com/a?q=1"),
        ("http://example.com/x),", "http://example.com/x"),
    ])
    def test_normalization(self, raw, expected):
        assert normalize_url(raw) == expected

    @pytest.mark.parametrize("raw", ["ftp://x.com/", "not a url", "http://"])
    def test_rejects(self, raw):
        assert normalize_url(raw) is None


class TestUrlExtraction:
    def test_from_strings(self):
        u = urlset_from_strings([
            'fetch("https://api.fraud.example/v1/pay");',
            "backup at http://203.0.113.9:8080/gate",
            "plain ip 198.51.100.7 in config",
        ], PSL)
        assert "https://api.fraud.example/v1/pay" in u.urls
        assert "198.51.100.7" in u.ip_literals
        assert "203.0.113.9" in u.ip_literals
        assert "fraud.example" in u.domains

    def test_from_apk_entries(self):
        apk = open_apk(build_apk(extra_files={
            "assets/config.json": b'{"api": "https://c2.badhost.net/api"}',
            "res/raw/blob.bin": b"\x00\x01http://plain.example/x\x00\x02",
        }))
        u = extract_urls(apk, psl=PSL)
        assert "https://c2.badhost.net/api" in u.urls
        assert "http://plain.example/x" in u.urls
        assert "badhost.net" in u.domains

    def test_invalid_ipv4_rejected(self):
        u = urlset_from_strings(["addr 999.1.2.3 nope"], PSL)
        assert not u.ip_literals


class TestWhitelist:
    def test_curated_list_loads(self):
        wl = load_whitelist()
        assert "facebook.com" in wl or "google.com" in wl

    def test_ranked_file(self, tmp_path):
        p = tmp_path / "top.csv"
        p.write_text("1,google.com\n2,baidu.com\n")
        wl = load_whitelist(p, include_third_party=False)
        assert wl == frozenset({"google.com", "baidu.com"})

    def test_limit(self, tmp_path):
        p = tmp_path / "top.csv"
        p.write_text("".join(f"{i},site{i}.com\n" for i in range(20)))
        wl = load_whitelist(p, limit=5, include_third_party=False)
        assert len(wl) == 5

    def test_filter_and_idempotence(self):
        u = urlset_from_strings([
            "https://www.google.com/gen_204",
            "https://api.fraud.example/pay",
            "http://203.0.113.9/gate",
        ], PSL)
        wl = frozenset({"google.com"})
        once = filter_whitelist(u, wl, PSL)
        assert all("google" not in x for x in once.urls)
        assert "203.0.113.9" in once.ip_literals  # IPs never whitelisted
        assert filter_whitelist(once, wl, PSL) == once


class TestParadigm:
    DB = load_fingerprints()

    def test_native(self):
        apk = open_apk(build_apk(extra_files={"assets/model.bin": bytes(1000)}))
        label = classify_paradigm(apk, None)
        assert label.value == "Native"
        assert label.evidence == ()

    def test_hybrid_by_generator(self):
        apk = open_apk(build_apk(main_activity="io.dcloud.PandoraEntry"))
        match = detect_generator(apk, self.DB)
        label = classify_paradigm(apk, match)
        assert label.value == "Hybrid"
        assert any(e.startswith("generator:") for e in label.evidence)

    def test_hybrid_by_web_assets(self):
        apk = open_apk(build_apk(extra_files={
            "assets/www/app.html": b"<html>" + b"x" * 5000,
            "assets/data.bin": bytes(100)}))
        label = classify_paradigm(apk, None)
        assert label.value == "Hybrid"

    def test_hybrid_by_browser_lib(self):
        apk = open_apk(build_apk(extra_files={
            "lib/armeabi/libxwalkcore.so": b"\x7fELF"}))
        assert classify_paradigm(apk, None).value == "Hybrid"


class TestSnapshot:
    def test_identical_images_similarity_one(self):
        rng = np.random.default_rng(7)
        img = rng.integers(0, 256, size=(64, 48)).astype(float)
        a = snapshot_fingerprint(img)
        b = snapshot_fingerprint(img.copy())
        assert similarity(a, b) == 1.0

    def test_small_brightness_shift_high_similarity(self):
        rng = np.random.default_rng(8)
        img = rng.integers(16, 240, size=(120, 90)).astype(float)
        a = snapshot_fingerprint(img)
        b = snapshot_fingerprint(np.clip(img + 4, 0, 255))
        assert similarity(a, b) >= 0.9

    def test_unrelated_images_low_similarity(self):
        rng = np.random.default_rng(9)
        a = snapshot_fingerprint(rng.integers(0, 256, size=(64, 64)).astype(float))
        b = snapshot_fingerprint(rng.integers(0, 256, size=(64, 64)).astype(float))
        assert similarity(a, b) < 0.9

    def test_symmetry_and_bounds(self):
        rng = np.random.default_rng(10)
        a = snapshot_fingerprint(rng.integers(0, 256, size=(32, 32)).astype(float))
        b = snapshot_fingerprint(rng.integers(0, 256, size=(32, 32)).astype(float))
        assert similarity(a, b) == similarity(b, a)
        assert 0.0 <= similarity(a, b) <= 1.0

    def test_too_small_image(self):
        with pytest.raises(ImageUndecodable):
            snapshot_fingerprint(np.zeros((8, 100)))

    def test_not_2d(self):
        with pytest.raises(ImageUndecodable):
            snapshot_fingerprint(np.zeros((10, 10, 3)))

    def test_scale_invariance(self):
        # 2x nearest-neighbour upscale preserves the dHash
        rng = np.random.default_rng(11)
        img = rng.integers(0, 256, size=(40, 36)).astype(float)
        big = img.repeat(2, axis=0).repeat(2, axis=1)
        assert similarity(snapshot_fingerprint(img),
                          snapshot_fingerprint(big)) >= 0.95


def test_urlset_empty():
    assert UrlSet.empty().urls == frozenset()
