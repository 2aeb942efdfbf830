"""App-generator fingerprint database and detection.

Each fingerprint carries evidence rules (main-activity name, package
prefix, asset path, native library), an optional cipher scheme and the
path prefixes owned by the generator's template. The shipped database
covers the 47 known generators; pass a JSON file with the same schema to
extend or override it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from apktriage.apkcore.artifact import ApkArtifact

RULE_MAIN_ACTIVITY = "main_activity"
RULE_PACKAGE_PREFIX = "package_prefix"
RULE_ASSET_PATH = "asset_path"
RULE_NATIVE_LIB = "native_lib"

_RULE_KINDS = {RULE_MAIN_ACTIVITY, RULE_PACKAGE_PREFIX, RULE_ASSET_PATH, RULE_NATIVE_LIB}


@dataclass(frozen=True)
class EvidenceRule:
    kind: str
    value: str

    def fires(self, apk: ApkArtifact) -> bool:
        if self.kind == RULE_MAIN_ACTIVITY:
            return apk.manifest is not None and apk.manifest.main_activity == self.value
        if self.kind == RULE_PACKAGE_PREFIX:
            return apk.package_name.startswith(self.value)
        if self.kind == RULE_ASSET_PATH:
            return any(e.path == self.value or e.path.startswith(self.value)
                       for e in apk.entries)
        if self.kind == RULE_NATIVE_LIB:
            return any(e.path.startswith("lib/") and e.path.endswith("/" + self.value)
                       for e in apk.entries)
        return False


@dataclass(frozen=True)
class CipherScheme:
    algo: str | None  # RC4 | TEA | AES_CBC | DES_CBC | None
    key_source: dict = field(default_factory=lambda: {"type": "external"})


@dataclass(frozen=True)
class GeneratorFingerprint:
    generator_id: str
    evidence_rules: tuple[EvidenceRule, ...]
    cipher: CipherScheme
    template_paths: tuple[str, ...]
    protected_paths: tuple[str, ...] = ()


@dataclass(frozen=True)
class GeneratorMatch:
    generator_id: str
    matched_rules: tuple[EvidenceRule, ...]
    confidence: float
    runner_up: str | None = None


def _parse_fingerprint(obj: dict) -> GeneratorFingerprint:
    rules = []
    for r in obj["rules"]:
        if r["kind"] not in _RULE_KINDS:
            raise ValueError(f"unknown rule kind {r['kind']!r} in {obj['generator_id']}")
        rules.append(EvidenceRule(r["kind"], r["value"]))
    if not rules:
        raise ValueError(f"fingerprint {obj['generator_id']} has no evidence rules")
    cipher = obj.get("cipher") or {}
    return GeneratorFingerprint(
        generator_id=obj["generator_id"],
        evidence_rules=tuple(rules),
        cipher=CipherScheme(
            algo=cipher.get("algo"),
            key_source=cipher.get("key_source", {"type": "external"}),
        ),
        template_paths=tuple(obj.get("template_paths", ())),
        protected_paths=tuple(obj.get("protected_paths", ())),
    )


def load_fingerprints(path=None) -> list[GeneratorFingerprint]:
    if path is None:
        text = resources.files("apktriage.data").joinpath("generators.json").read_text()
    else:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    raw = json.loads(text)
    fps = [_parse_fingerprint(obj) for obj in raw]
    ids = [fp.generator_id for fp in fps]
    if len(set(ids)) != len(ids):
        raise ValueError("duplicate generator_id in fingerprint database")
    return fps


def detect_generator(apk: ApkArtifact,
                     db: list[GeneratorFingerprint] | None = None) -> GeneratorMatch | None:
    """Best-confidence generator match, or None when no rule fires.

    Deterministic regardless of database order: confidence desc, then
    generator_id ascending; the runner-up is kept for diagnostics.
    """
    if db is None:
        db = load_fingerprints()
    candidates = []
    for fp in db:
        matched = tuple(r for r in fp.evidence_rules if r.fires(apk))
        if matched:
            candidates.append((fp.generator_id, matched, len(matched) / len(fp.evidence_rules)))
    if not candidates:
        return None
    candidates.sort(key=lambda c: (-c[2], c[0]))
    best = candidates[0]
    runner_up = candidates[1][0] if len(candidates) > 1 else None
    return GeneratorMatch(generator_id=best[0], matched_rules=best[1],
                          confidence=best[2], runner_up=runner_up)


def fingerprint_for(generator_id: str,
                    db: list[GeneratorFingerprint] | None = None) -> GeneratorFingerprint:
    if db is None:
        db = load_fingerprints()
    for fp in db:
        if fp.generator_id == generator_id:
            return fp
    raise KeyError(generator_id)
