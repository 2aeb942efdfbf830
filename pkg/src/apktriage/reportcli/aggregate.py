"""Corpus-level aggregation: category distribution, paradigm/generator
usage, and permission averages shaped like a per-category table."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from apktriage.reportcli.taxonomy import TOP_CATEGORIES
from apktriage.util import pct, round_half_up


@dataclass(frozen=True)
class CorpusReport:
    n: int
    category_distribution: dict            # top -> (count, percentage)
    paradigm: dict = field(default_factory=dict)       # hybrid fraction + counts
    generator_usage: dict = field(default_factory=dict)
    permission_averages: dict = field(default_factory=dict)
    notices: tuple[str, ...] = ()


def category_distribution(labels, places: int = 2) -> dict:
    """Per-top counts as percentages of the corpus, 2 decimals.

    Percentages use largest-remainder allocation so the rounded values
    always sum to exactly 100; on ties the plain half-up value survives.
    """
    if not labels:
        raise ValueError("no labels supplied")
    counts = Counter(_top_of(label) for label in labels)
    n = len(labels)
    tops = [top for top in TOP_CATEGORIES if counts[top]]
    unit = 10 ** places
    exact = {top: counts[top] * 100 * unit / n for top in tops}
    floored = {top: int(exact[top]) for top in tops}
    shortfall = 100 * unit - sum(floored.values())
    for top in sorted(tops, key=lambda t: (floored[t] - exact[t], t))[:shortfall]:
        floored[top] += 1
    return {top: (counts[top], floored[top] / unit) for top in tops}


def _top_of(label) -> str:
    if isinstance(label, str):
        return label
    return getattr(label, "top", None) or label["top"]


def permission_aggregate(profiles, places: int = 2):
    """Per-top-category and total means of (dangerous, normal, all)
    permission counts.

    `profiles` maps sample_id -> (PermissionProfile, TaxonomyLabel or top
    name). Empty categories are omitted and listed in the notices.
    """
    if not profiles:
        raise ValueError("no permission profiles supplied")
    buckets: dict[str, list] = {top: [] for top in TOP_CATEGORIES}
    everything = []
    for profile, label in profiles.values():
        top = _top_of(label)
        if top not in buckets:
            raise ValueError(f"unknown top category {top!r}")
        buckets[top].append(profile)
        everything.append(profile)

    def means(items):
        k = len(items)
        return (
            round_half_up(sum(p.dangerous_count for p in items) / k, places),
            round_half_up(sum(p.normal_count for p in items) / k, places),
            round_half_up(sum(p.all_count for p in items) / k, places),
        )

    rows = {top: means(items) for top, items in buckets.items() if items}
    rows["Total"] = means(everything)
    notices = tuple(f"category {top} has no samples; row omitted"
                    for top in TOP_CATEGORIES if not buckets[top])
    return rows, notices


def paradigm_stats(paradigms, places: int = 4) -> dict:
    """Fraction of hybrid apps over classified samples."""
    counts = Counter(p.value if hasattr(p, "value") else p for p in paradigms)
    total = sum(counts.values())
    hybrid = counts.get("Hybrid", 0)
    return {
        "total": total,
        "hybrid": hybrid,
        "native": counts.get("Native", 0),
        "hybrid_fraction": round_half_up(hybrid / total, places) if total else 0.0,
    }


def generator_stats(matches, total: int, places: int = 4) -> dict:
    """Per-generator breakdown plus the overall usage fraction.

    `matches` is an iterable of GeneratorMatch or None (no generator)."""
    counts = Counter(m.generator_id for m in matches if m is not None)
    used = sum(counts.values())
    return {
        "total": total,
        "with_generator": used,
        "usage_fraction": round_half_up(used / total, places) if total else 0.0,
        "per_generator": dict(sorted(counts.items(),
                                     key=lambda kv: (-kv[1], kv[0]))),
    }


def corpus_report(labels, paradigms=(), generator_matches=(),
                  permission_profiles=None) -> CorpusReport:
    dist = category_distribution(labels)
    perm, notices = (permission_aggregate(permission_profiles)
                     if permission_profiles else ({}, ()))
    return CorpusReport(
        n=len(labels),
        category_distribution=dist,
        paradigm=paradigm_stats(paradigms) if paradigms else {},
        generator_usage=(generator_stats(generator_matches, len(labels))
                         if generator_matches else {}),
        permission_averages=perm,
        notices=notices,
    )
