"""Network-endpoint extraction: URLs, IP literals and registrable domains."""

from __future__ import annotations

import ipaddress
import re
from dataclasses import dataclass
from importlib import resources
from urllib.parse import urlsplit, urlunsplit

from apktriage.apkcore.artifact import ApkArtifact
from apktriage.extract.psl import SuffixList, load_suffix_list

_URL_RE = re.compile(r"https?://[^\s\"'<>\\`{}|^\x00-\x1f]+", re.IGNORECASE)
_IPV4_RE = re.compile(r"(?<![\d.])((?:\d{1,3}\.){3}\d{1,3})(?![\d.])")
_IPV6_RE = re.compile(r"(?<![0-9A-Fa-f:.])((?:[0-9A-Fa-f]{1,4}:){2,7}[0-9A-Fa-f:.]+)")
_TEXT_SUFFIXES = (".html", ".htm", ".js", ".json", ".xml", ".txt", ".css", ".properties", ".cfg")
_STRINGS_RE = re.compile(rb"[\x20-\x7e]{6,}")
_DEFAULT_PORTS = {"http": "80", "https": "443"}


@dataclass(frozen=True)
class UrlSet:
    urls: frozenset[str]
    ip_literals: frozenset[str]
    domains: frozenset[str]

    @staticmethod
    def empty() -> "UrlSet":
        return UrlSet(frozenset(), frozenset(), frozenset())


def normalize_url(raw: str) -> str | None:
    raw = raw.rstrip(".,;:)]}\"'")
    try:
        parts = urlsplit(raw)
    except ValueError:
        return None
    if parts.scheme.lower() not in ("http", "https") or not parts.hostname:
        return None
    scheme = parts.scheme.lower()
    host = parts.hostname.lower()
    port = parts.port
    netloc = host if port is None or str(port) == _DEFAULT_PORTS[scheme] else f"{host}:{port}"
    return urlunsplit((scheme, netloc, parts.path, parts.query, ""))


def _host_of(url: str) -> str:
    return urlsplit(url).hostname or ""


def _is_ip(host: str) -> bool:
    try:
        ipaddress.ip_address(host)
        return True
    except ValueError:
        return False


def _scan_text(text: str, urls: set[str], ips: set[str]) -> None:
    for m in _URL_RE.finditer(text):
        url = normalize_url(m.group(0))
        if url:
            urls.add(url)
    for m in _IPV4_RE.finditer(text):
        try:
            ipaddress.IPv4Address(m.group(1))
        except ValueError:
            continue
        ips.add(m.group(1))
    for m in _IPV6_RE.finditer(text):
        cand = m.group(1).rstrip(":.")
        try:
            ip = ipaddress.IPv6Address(cand)
        except ValueError:
            continue
        ips.add(str(ip))


def urlset_from_strings(strings, psl: SuffixList | None = None) -> UrlSet:
    if psl is None:
        psl = load_suffix_list()
    urls: set[str] = set()
    ips: set[str] = set()
    for s in strings:
        _scan_text(s, urls, ips)
    domains = set()
    for u in urls:
        host = _host_of(u)
        if _is_ip(host):
            ips.add(host)
        else:
            domains.add(psl.registrable(host))
    return UrlSet(frozenset(urls), frozenset(ips), frozenset(domains))


def extract_urls(apk: ApkArtifact, user_content=None,
                 psl: SuffixList | None = None) -> UrlSet:
    """Scan every string source in the APK for http(s) URLs and IP literals.

    Sources: decoded text assets, decrypted user content, and printable
    ASCII runs from all remaining entries. Order-independent.
    """
    strings: list[str] = []
    decrypted = dict(user_content.decrypted) if user_content is not None else {}
    for entry in apk.entries:
        data = decrypted.get(entry.path)
        if data is None:
            try:
                data = apk.read(entry.path)
            except Exception:
                continue
        if entry.path.lower().endswith(_TEXT_SUFFIXES):
            strings.append(data.decode("utf-8", "replace"))
        else:
            strings.extend(m.group(0).decode("ascii") for m in _STRINGS_RE.finditer(data))
    return urlset_from_strings(strings, psl)


def load_whitelist(path=None, limit: int = 10_000,
                   include_third_party: bool = True) -> frozenset[str]:
    """Ranked-domain whitelist: plain or "rank,domain" lines, truncated
    at ``limit``, merged with the curated third-party-service list."""
    domains: set[str] = set()
    if path is not None:
        with open(path, encoding="utf-8") as f:
            for n, line in enumerate(f):
                if n >= limit:
                    break
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                domains.add(line.split(",")[-1].lower())
    if include_third_party:
        text = resources.files("apktriage.data").joinpath("third_party_domains.txt").read_text()
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                domains.add(line.lower())
    return frozenset(domains)


def filter_whitelist(u: UrlSet, whitelist: frozenset[str],
                     psl: SuffixList | None = None) -> UrlSet:
    """Drop whitelisted registrable domains and their URLs. IP literals
    are never whitelisted. Idempotent."""
    if psl is None:
        psl = load_suffix_list()
    kept_urls = set()
    for url in u.urls:
        host = _host_of(url)
        if _is_ip(host):
            kept_urls.add(url)
        elif psl.registrable(host) not in whitelist:
            kept_urls.add(url)
    domains = {psl.registrable(_host_of(url)) for url in kept_urls
               if not _is_ip(_host_of(url))}
    return UrlSet(frozenset(kept_urls), u.ip_literals, frozenset(domains))
