"""Monitoring, lifespan, binding, geolocation and registrant tests."""

from datetime import datetime, timedelta, timezone

import pytest

from apktriage.infrawatch import (
    END_DEAD_BEFORE_FIRST,
    END_OBSERVED_DEATH,
    END_STILL_ALIVE,
    KIND_FIXED,
    KIND_FLEXIBLE_I,
    KIND_FLEXIBLE_II,
    DomainTimeline,
    EmptyTimeline,
    GeoDb,
    Probe,
    Resolution,
    ScriptedProber,
    ScriptedResolver,
    ScriptedWhois,
    TimelineStore,
    WhoisRecord,
    Window,
    binding_segments,
    cctld_country,
    classify_bindings,
    distribution,
    geolocate,
    lifespan,
    registrant_stats,
    schedule,
    ticks,
)


def utc(*args):
    return datetime(*args, tzinfo=timezone.utc)


def simple_timeline(domain, specs):
    """specs: list of (day, ips or None, status or None)."""
    t = DomainTimeline(domain=domain)
    for day, ips, status in specs:
        ts = utc(2021, 1, 1) + timedelta(days=day)
        t.add_resolution(Resolution(ts, None if ips is None else frozenset(ips)))
        if status is not None:
            t.add_probe(Probe(ts, status < 500 and ips is not None,
                              detail=str(status)))
    return t


class TestTimeline:
    def test_strictly_increasing(self):
        t = DomainTimeline(domain="x.com")
        t.add_resolution(Resolution(utc(2021, 1, 1), frozenset({"1.1.1.1"})))
        with pytest.raises(ValueError):
            t.add_resolution(Resolution(utc(2021, 1, 1), frozenset({"1.1.1.1"})))

    def test_alive_requires_resolution(self):
        t = DomainTimeline(domain="x.com")
        with pytest.raises(ValueError):
            t.add_probe(Probe(utc(2021, 1, 1), True, "2xx"))

    def test_store_round_trip(self, tmp_path):
        store = TimelineStore(tmp_path)
        t = DomainTimeline(domain="x.com")
        r = Resolution(utc(2021, 1, 1), frozenset({"1.1.1.1", "2.2.2.2"}))
        t.add_resolution(r)
        store.append_resolution("x.com", r)
        p = Probe(utc(2021, 1, 1, 0, 1), True, "2xx")
        t.add_probe(p)
        store.append_probe("x.com", p)
        store.set_whois("x.com", WhoisRecord("reg", "China", "2020-01-01"))
        loaded = store.load("x.com")
        assert loaded.resolutions == t.resolutions
        assert loaded.probes == t.probes
        assert loaded.whois.registrant == "reg"
        assert store.domains() == ["x.com"]


class TestSchedule:
    def test_cadence_minimum(self):
        w = Window(utc(2021, 1, 1), utc(2021, 1, 5))
        with pytest.raises(ValueError):
            list(ticks(w, timedelta(hours=6)))
        assert len(list(ticks(w, timedelta(days=1)))) == 5

    def test_window_validation(self):
        with pytest.raises(ValueError):
            Window(utc(2021, 1, 2), utc(2021, 1, 1))

    def test_scripted_run(self):
        resolver = ScriptedResolver({"a.com": [["1.1.1.1"]]})
        prober = ScriptedProber({"a.com": [200, 200, 503]})
        w = Window(utc(2021, 1, 1), utc(2021, 1, 3))
        out = schedule(["a.com"], w, timedelta(days=1), resolver, prober)
        t = out["a.com"]
        assert [p.alive for p in t.probes] == [True, True, False]

    def test_nxdomain_is_dead_without_probe(self):
        resolver = ScriptedResolver({"a.com": [None]})
        prober = ScriptedProber({"a.com": [200]})
        w = Window(utc(2021, 1, 1), utc(2021, 1, 1, 1))
        t = schedule(["a.com"], w, timedelta(days=1), resolver, prober)["a.com"]
        assert t.probes[0].alive is False
        assert t.probes[0].detail == "nxdomain"

    def test_gap_recorded_on_outage(self):
        resolver = ScriptedResolver({"a.com": ["gap", ["1.1.1.1"]]})
        prober = ScriptedProber({"a.com": [200]})
        w = Window(utc(2021, 1, 1), utc(2021, 1, 2))
        t = schedule(["a.com"], w, timedelta(days=1), resolver, prober)["a.com"]
        assert len(t.gaps) == 1
        assert len(t.probes) == 1

    def test_resume_skips_covered_ticks(self, tmp_path):
        store = TimelineStore(tmp_path)
        resolver = ScriptedResolver({"a.com": [["1.1.1.1"]]})
        prober = ScriptedProber({"a.com": [200]})
        w1 = Window(utc(2021, 1, 1), utc(2021, 1, 3))
        schedule(["a.com"], w1, timedelta(days=1), resolver, prober, store=store)
        w2 = Window(utc(2021, 1, 1), utc(2021, 1, 5))
        t = schedule(["a.com"], w2, timedelta(days=1),
                     ScriptedResolver({"a.com": [["1.1.1.1"]]}),
                     ScriptedProber({"a.com": [200]}), store=store)["a.com"]
        assert len(t.probes) == 5  # 3 persisted + 2 new, no duplicates

    def test_whois_fetched_once(self, tmp_path):
        store = TimelineStore(tmp_path)
        whois = ScriptedWhois({"a.com": WhoisRecord("r1", "China", "")})
        args = (["a.com"], Window(utc(2021, 1, 1), utc(2021, 1, 1, 1)),
                timedelta(days=1))
        t = schedule(*args, ScriptedResolver({"a.com": [["1.1.1.1"]]}),
                     ScriptedProber({"a.com": [200]}), whois, store)["a.com"]
        assert t.whois.registrant == "r1"


class TestLifespan:
    def test_still_alive_149_days(self):
        # packing 2020-12-06, final inspection 2021-05-04, still alive
        start = utc(2020, 12, 6)
        t = DomainTimeline(domain="x.com")
        for day in range(0, 150, 7):
            ts = utc(2020, 12, 6, 12) + timedelta(days=day)
            t.add_resolution(Resolution(ts, frozenset({"1.1.1.1"})))
            t.add_probe(Probe(ts + timedelta(minutes=1), True, "2xx"))
        final = utc(2021, 5, 4)
        t.add_resolution(Resolution(final, frozenset({"1.1.1.1"})))
        t.add_probe(Probe(final, True, "2xx"))
        rec = lifespan(t, start)
        assert rec.end_kind == END_STILL_ALIVE
        assert rec.days == 149

    def test_observed_death(self):
        t = simple_timeline("x.com", [(0, ["1.1.1.1"], 200),
                                      (10, ["1.1.1.1"], 200),
                                      (20, ["1.1.1.1"], 503)])
        rec = lifespan(t, utc(2021, 1, 1))
        assert rec.end_kind == END_OBSERVED_DEATH
        assert rec.end == utc(2021, 1, 11)  # last Alive probe
        assert rec.days == 10

    def test_dead_before_first_inspection(self):
        t = simple_timeline("x.com", [(5, None, 500), (6, None, 500)])
        rec = lifespan(t, utc(2021, 1, 1))
        assert rec.end_kind == END_DEAD_BEFORE_FIRST
        assert rec.end == utc(2021, 1, 6)  # first inspection
        assert rec.days == 5

    def test_empty_timeline(self):
        with pytest.raises(EmptyTimeline):
            lifespan(DomainTimeline(domain="x.com"), utc(2021, 1, 1))

    def test_end_clamped_to_start(self):
        t = simple_timeline("x.com", [(0, None, 500)])
        rec = lifespan(t, utc(2021, 6, 1))
        assert rec.days == 0


class TestBindings:
    def test_fixed_single_ip(self):
        t = simple_timeline("x.com", [(d, ["9.9.9.9"], 200) for d in range(5)])
        result, summary = classify_bindings([t])
        assert result["x.com"].kind == KIND_FIXED
        assert summary["fixed"] == 1

    def test_same_period_sharing_type1(self):
        # two domains bound to 47.74.14.254 in the same period
        a = simple_timeline("yg19.top", [(0, ["47.74.14.254"], 200),
                                         (5, ["1.2.3.4"], 200)])
        b = simple_timeline("yuereee.top", [(0, ["47.74.14.254"], 200),
                                            (5, ["5.6.7.8"], 200)])
        result, _ = classify_bindings([a, b])
        assert result["yg19.top"].kind == KIND_FLEXIBLE_I
        assert result["yuereee.top"].kind == KIND_FLEXIBLE_I
        assert result["yg19.top"].shared_same_period

    def test_cross_period_reuse_type1(self):
        # 157.240.20.18 used by uk919.com first, facai1788.com later
        a = simple_timeline("uk919.com", [(0, ["157.240.20.18"], 200),
                                          (10, ["9.9.9.1"], 200)])
        b = simple_timeline("facai1788.com", [(20, ["8.8.8.8"], 200),
                                              (30, ["157.240.20.18"], 200)])
        result, _ = classify_bindings([a, b])
        assert result["uk919.com"].kind == KIND_FLEXIBLE_I
        assert result["facai1788.com"].kind == KIND_FLEXIBLE_I
        assert result["uk919.com"].shared_cross_period

    def test_type2_no_sharing(self):
        a = simple_timeline("solo.com", [(0, ["1.1.1.1"], 200),
                                         (5, ["2.2.2.2"], 200)])
        b = simple_timeline("other.com", [(0, ["3.3.3.3"], 200)])
        result, summary = classify_bindings([a, b])
        assert result["solo.com"].kind == KIND_FLEXIBLE_II
        assert summary["type2"] == 1

    def test_segments_run_length(self):
        t = simple_timeline("x.com", [
            (0, ["1.1.1.1"], 200), (1, ["1.1.1.1"], 200),
            (2, ["2.2.2.2"], 200), (3, None, 500),
            (4, ["1.1.1.1"], 200)])
        segs = binding_segments(t)
        assert [sorted(s.ips) for s in segs] == [["1.1.1.1"], ["2.2.2.2"],
                                                ["1.1.1.1"]]
        assert segs[0].days == 1.0

    def test_mean_binding_days_hand_arithmetic(self):
        # flexible domain with segments of 2 and 4 days -> mean 3.0
        t = simple_timeline("x.com", [(0, ["1.1.1.1"], 200),
                                      (2, ["1.1.1.1"], 200),
                                      (3, ["2.2.2.2"], 200),
                                      (7, ["2.2.2.2"], 200)])
        _, summary = classify_bindings([t])
        assert summary["mean_binding_days"] == 3.0


class TestGeo:
    DB = GeoDb([(int(1) << 24, (int(1) << 24) + 255, "Australia"),
                (3232235520, 3232301055, "Private")])

    def test_lookup(self):
        assert self.DB.country("1.0.0.7") == "Australia"
        assert self.DB.country("192.168.1.1") == "Private"
        assert self.DB.country("9.9.9.9") is None
        assert self.DB.country("not-an-ip") is None

    def test_from_csv(self, tmp_path):
        p = tmp_path / "geo.csv"
        p.write_text("# comment\n16777216,16777471,Australia\n"
                     "1.1.1.0,1.1.1.255,Cloud\n")
        db = GeoDb.from_csv(p)
        assert db.country("1.0.0.1") == "Australia"
        assert db.country("1.1.1.1") == "Cloud"

    def test_cctld(self):
        assert cctld_country("casino.example.cn") == "China"
        assert cctld_country("foo.com") is None

    def test_geolocate_and_distribution(self):
        a = simple_timeline("a.cn", [(0, ["1.0.0.1"], 200)])
        b = simple_timeline("b.com", [(0, ["1.0.0.2"], 200)])
        b.whois = WhoisRecord("r", "United States", "")
        domain_counts, ip_counts = geolocate([a, b], self.DB)
        assert domain_counts == {"China": 1, "United States": 1}
        assert ip_counts == {"Australia": 2}
        rows = distribution(domain_counts)
        assert sum(r[1] for r in rows) == 2
        assert abs(sum(r[2] for r in rows) - 100.0) < 0.1


class TestRegistrants:
    def test_table_percentages(self):
        records = [WhoisRecord("Li Ming", "", "")] * 279 + \
                  [WhoisRecord("Wang Fang", "", "")] * 272
        rows = registrant_stats(records, total_domains=1264)
        assert rows[0] == ("Li Ming", 279, 22.07)
        assert rows[1] == ("Wang Fang", 272, 21.52)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            registrant_stats([], 10)
