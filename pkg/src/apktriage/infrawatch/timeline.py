"""Per-domain probe/resolution history with append-only JSONL persistence."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path


class EmptyTimeline(Exception):
    pass


@dataclass(frozen=True)
class Resolution:
    ts: datetime
    ips: frozenset[str] | None  # None = NXDOMAIN

    @property
    def nxdomain(self) -> bool:
        return self.ips is None


@dataclass(frozen=True)
class Probe:
    ts: datetime
    alive: bool
    detail: str  # status class when alive, reason when dead


@dataclass(frozen=True)
class WhoisRecord:
    registrant: str = ""
    country: str = ""
    created: str = ""


@dataclass
class DomainTimeline:
    domain: str
    resolutions: list[Resolution] = field(default_factory=list)
    probes: list[Probe] = field(default_factory=list)
    whois: WhoisRecord | None = None
    gaps: list[tuple[datetime, str]] = field(default_factory=list)

    def add_resolution(self, r: Resolution) -> None:
        if self.resolutions and r.ts <= self.resolutions[-1].ts:
            raise ValueError("resolution timestamps must be strictly increasing")
        self.resolutions.append(r)

    def add_probe(self, p: Probe) -> None:
        if self.probes and p.ts <= self.probes[-1].ts:
            raise ValueError("probe timestamps must be strictly increasing")
        if p.alive:
            prior = [r for r in self.resolutions if r.ts <= p.ts and not r.nxdomain]
            if not prior:
                raise ValueError("alive probe requires a prior non-NXDOMAIN resolution")
        self.probes.append(p)

    def last_tick(self) -> datetime | None:
        ts = [r.ts for r in self.resolutions] + [p.ts for p in self.probes] \
            + [g[0] for g in self.gaps]
        return max(ts) if ts else None


def _ts(dt: datetime) -> str:
    return dt.astimezone(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def _parse_ts(s: str) -> datetime:
    return datetime.strptime(s, "%Y-%m-%dT%H:%M:%SZ").replace(tzinfo=timezone.utc)


class TimelineStore:
    """One append-only JSON-lines file per domain, one record per event."""

    def __init__(self, root):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def _path(self, domain: str) -> Path:
        safe = domain.replace("/", "_")
        return self.root / f"{safe}.jsonl"

    def append(self, domain: str, record: dict) -> None:
        with open(self._path(domain), "a", encoding="utf-8") as f:
            f.write(json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n")

    def append_resolution(self, domain: str, r: Resolution) -> None:
        self.append(domain, {"ts": _ts(r.ts), "kind": "resolution",
                             "payload": None if r.ips is None else sorted(r.ips)})

    def append_probe(self, domain: str, p: Probe) -> None:
        self.append(domain, {"ts": _ts(p.ts), "kind": "probe",
                             "payload": {"alive": p.alive, "detail": p.detail}})

    def append_gap(self, domain: str, ts: datetime, reason: str) -> None:
        self.append(domain, {"ts": _ts(ts), "kind": "gap", "payload": reason})

    def set_whois(self, domain: str, w: WhoisRecord) -> None:
        self.append(domain, {"ts": _ts(datetime.now(timezone.utc)), "kind": "whois",
                             "payload": {"registrant": w.registrant,
                                         "country": w.country, "created": w.created}})

    def load(self, domain: str) -> DomainTimeline:
        t = DomainTimeline(domain=domain)
        path = self._path(domain)
        if not path.exists():
            return t
        with open(path, encoding="utf-8") as f:
            for line in f:
                line = line.strip()
                if not line:
                    continue
                rec = json.loads(line)
                ts = _parse_ts(rec["ts"])
                kind = rec["kind"]
                if kind == "resolution":
                    ips = rec["payload"]
                    t.add_resolution(Resolution(ts, None if ips is None else frozenset(ips)))
                elif kind == "probe":
                    t.add_probe(Probe(ts, rec["payload"]["alive"], rec["payload"]["detail"]))
                elif kind == "gap":
                    t.gaps.append((ts, rec["payload"]))
                elif kind == "whois":
                    p = rec["payload"]
                    t.whois = WhoisRecord(p.get("registrant", ""), p.get("country", ""),
                                          p.get("created", ""))
        return t

    def domains(self) -> list[str]:
        return sorted(p.stem for p in self.root.glob("*.jsonl"))
