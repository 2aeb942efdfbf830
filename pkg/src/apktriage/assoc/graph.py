"""Bounded-iteration association graph construction.

Every sample seeds a breadth-first expansion over the pairwise-rule
relation, limited to i_max hops; a rule edge is emitted when its inner
endpoint lies strictly within the bound. Groups are the connected
components of the emitted edge set, so the output is independent of
input ordering and seed order.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

from apktriage.assoc.features import SampleFeatures
from apktriage.assoc.rules import AssocConfig, fired_rules


class DuplicateSampleId(Exception):
    pass


@dataclass(frozen=True)
class AssociationGraph:
    nodes: tuple[str, ...]  # sorted sample ids
    edges: tuple[tuple[str, str, tuple[str, ...]], ...]  # (a, b, rules), a < b
    groups: tuple[tuple[str, ...], ...]  # connected components, each sorted

    def adjacency(self) -> dict[str, set[str]]:
        adj: dict[str, set[str]] = {n: set() for n in self.nodes}
        for a, b, _ in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj


def _components(nodes, adj) -> tuple[tuple[str, ...], ...]:
    seen: set[str] = set()
    comps = []
    for n in sorted(nodes):
        if n in seen:
            continue
        comp = {n}
        queue = deque([n])
        seen.add(n)
        while queue:
            u = queue.popleft()
            for v in adj.get(u, ()):
                if v not in seen:
                    seen.add(v)
                    comp.add(v)
                    queue.append(v)
        comps.append(tuple(sorted(comp)))
    comps.sort(key=lambda c: (-len(c), c[0]))
    return tuple(comps)


def build_graph(samples: list[SampleFeatures], cfg: AssocConfig) -> AssociationGraph:
    ids = [s.sample_id for s in samples]
    if len(set(ids)) != len(ids):
        dupes = sorted({i for i in ids if ids.count(i) > 1})
        raise DuplicateSampleId(", ".join(dupes))

    ordered = sorted(samples, key=lambda s: s.sample_id)
    n = len(ordered)
    pair_rules: dict[tuple[str, str], tuple[str, ...]] = {}
    adj: dict[str, set[str]] = {s.sample_id: set() for s in ordered}
    for i in range(n):
        for j in range(i + 1, n):
            rules = fired_rules(ordered[i], ordered[j], cfg)
            if rules:
                a, b = ordered[i].sample_id, ordered[j].sample_id
                pair_rules[(a, b)] = rules
                adj[a].add(b)
                adj[b].add(a)

    emitted: set[tuple[str, str]] = set()
    for seed in adj:
        for u, depth in _bfs_depths(adj, seed, cfg.i_max).items():
            if depth < cfg.i_max:
                for v in adj[u]:
                    emitted.add((u, v) if u < v else (v, u))

    edges = tuple(sorted((a, b, pair_rules[(a, b)]) for (a, b) in emitted))
    emitted_adj: dict[str, set[str]] = {s.sample_id: set() for s in ordered}
    for a, b in emitted:
        emitted_adj[a].add(b)
        emitted_adj[b].add(a)
    groups = _components([s.sample_id for s in ordered], emitted_adj)
    return AssociationGraph(
        nodes=tuple(s.sample_id for s in ordered),
        edges=edges,
        groups=groups,
    )


def _bfs_depths(adj: dict[str, set[str]], seed: str, i_max: int) -> dict[str, int]:
    depths = {seed: 0}
    queue = deque([seed])
    while queue:
        u = queue.popleft()
        if depths[u] >= i_max:
            continue
        for v in adj[u]:
            if v not in depths:
                depths[v] = depths[u] + 1
                queue.append(v)
    return depths


def seed_neighborhood(g: AssociationGraph, seed: str, i_max: int) -> tuple[str, ...]:
    """Samples reachable from a seed within i_max association hops."""
    if seed not in g.nodes:
        raise KeyError(seed)
    depths = _bfs_depths(g.adjacency(), seed, i_max)
    return tuple(sorted(depths))


def graph_to_json(g: AssociationGraph) -> str:
    obj = {
        "nodes": list(g.nodes),
        "edges": [{"a": a, "b": b, "rules": list(rules)} for a, b, rules in g.edges],
        "groups": [list(c) for c in g.groups],
    }
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
