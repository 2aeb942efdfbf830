"""Routine monitoring: one resolution + probe per domain per cadence tick."""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime, timedelta

from apktriage.infrawatch.backends import BackendUnavailable, Prober, Resolver, WhoisClient
from apktriage.infrawatch.timeline import (
    DomainTimeline,
    Probe,
    Resolution,
    TimelineStore,
)

# a probe is Alive iff DNS resolves and the HTTP status is below this
DEFAULT_DEAD_STATUS = 500


@dataclass(frozen=True)
class Window:
    start: datetime
    end: datetime

    def __post_init__(self):
        if self.start >= self.end:
            raise ValueError("window start must precede end")


def ticks(window: Window, cadence: timedelta):
    if cadence < timedelta(days=1):
        raise ValueError("cadence must be at least one day")
    t = window.start
    while t <= window.end:
        yield t
        t += cadence


def monitor_tick(t: DomainTimeline, ts: datetime, resolver: Resolver, prober: Prober,
                 store: TimelineStore | None = None,
                 dead_status: int = DEFAULT_DEAD_STATUS) -> None:
    """Run one inspection; failures are recorded as gaps, never dropped."""
    try:
        ips = resolver.resolve(t.domain, ts)
    except BackendUnavailable as e:
        t.gaps.append((ts, str(e)))
        if store:
            store.append_gap(t.domain, ts, str(e))
        return
    resolution = Resolution(ts=ts, ips=ips)
    t.add_resolution(resolution)
    if store:
        store.append_resolution(t.domain, resolution)

    if ips is None or not ips:
        probe = Probe(ts=ts, alive=False, detail="nxdomain")
    else:
        try:
            status = prober.probe(t.domain, ts)
        except BackendUnavailable as e:
            t.gaps.append((ts, str(e)))
            if store:
                store.append_gap(t.domain, ts, str(e))
            return
        if status is None:
            probe = Probe(ts=ts, alive=False, detail="unreachable")
        elif status < dead_status:
            probe = Probe(ts=ts, alive=True, detail=f"{status // 100}xx")
        else:
            probe = Probe(ts=ts, alive=False, detail=f"{status // 100}xx")
    t.add_probe(probe)
    if store:
        store.append_probe(t.domain, probe)


def schedule(domains, window: Window, cadence: timedelta,
             resolver: Resolver, prober: Prober,
             whois: WhoisClient | None = None,
             store: TimelineStore | None = None,
             dead_status: int = DEFAULT_DEAD_STATUS) -> dict[str, DomainTimeline]:
    """Monitor every domain across the window. Resumes from persisted
    timelines when a store is supplied: already-covered ticks are skipped."""
    timelines: dict[str, DomainTimeline] = {}
    for domain in sorted(set(domains)):
        t = store.load(domain) if store else DomainTimeline(domain=domain)
        timelines[domain] = t
        if whois is not None and t.whois is None:
            rec = whois.lookup(domain)
            if rec is not None:
                t.whois = rec
                if store:
                    store.set_whois(domain, rec)
        last = t.last_tick()
        for tick in ticks(window, cadence):
            if last is not None and tick <= last:
                continue
            monitor_tick(t, tick, resolver, prober, store, dead_status)
    return timelines
