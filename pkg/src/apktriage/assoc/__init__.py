from apktriage.assoc.features import (
    SampleFeatures,
    features_from_json,
    features_to_json,
    read_features_jsonl,
    write_features_jsonl,
)
from apktriage.assoc.graph import (
    AssociationGraph,
    DuplicateSampleId,
    build_graph,
    graph_to_json,
    seed_neighborhood,
)
from apktriage.assoc.rules import (
    AssocConfig,
    assoc_signature,
    assoc_snapshot,
    assoc_url,
    fired_rules,
    overlap,
    shared_ip,
)
from apktriage.assoc.stats import TOP_CATEGORIES, GroupRow, group_stats

__all__ = [
    "SampleFeatures", "features_from_json", "features_to_json",
    "read_features_jsonl", "write_features_jsonl",
    "AssociationGraph", "DuplicateSampleId", "build_graph", "graph_to_json",
    "seed_neighborhood", "AssocConfig", "assoc_signature", "assoc_snapshot",
    "assoc_url", "fired_rules", "overlap", "shared_ip",
    "TOP_CATEGORIES", "GroupRow", "group_stats",
]
