"""Native vs. hybrid development-paradigm classification."""

from __future__ import annotations

from dataclasses import dataclass

from apktriage.apkcore.artifact import ApkArtifact
from apktriage.genscan.fingerprints import GeneratorMatch

PARADIGM_NATIVE = "Native"
PARADIGM_HYBRID = "Hybrid"

_WEB_SUFFIXES = (".html", ".htm", ".js")
# embedded-browser engines shipped as native libraries
_BROWSER_LIBS = ("libxwalkcore.so", "libmttwebview.so", "libwebviewchromium.so")


@dataclass(frozen=True)
class ParadigmLabel:
    value: str
    evidence: tuple[str, ...]


def classify_paradigm(apk: ApkArtifact, match: GeneratorMatch | None,
                      byte_ratio_threshold: float = 0.3) -> ParadigmLabel:
    """Hybrid iff a generator matched, or HTML/JS bytes dominate the
    assets, or a known embedded-browser framework is bundled."""
    evidence = []
    if match is not None:
        evidence.append(f"generator:{match.generator_id}")

    asset_bytes = web_bytes = 0
    for e in apk.entries:
        if e.path.startswith("assets/"):
            asset_bytes += e.size
            if e.path.lower().endswith(_WEB_SUFFIXES):
                web_bytes += e.size
    if asset_bytes and web_bytes / asset_bytes >= byte_ratio_threshold:
        evidence.append(f"web_asset_ratio:{web_bytes / asset_bytes:.2f}")

    for e in apk.entries:
        if e.path.startswith("lib/") and e.path.rsplit("/", 1)[-1] in _BROWSER_LIBS:
            evidence.append(f"browser_lib:{e.path.rsplit('/', 1)[-1]}")
            break

    value = PARADIGM_HYBRID if evidence else PARADIGM_NATIVE
    return ParadigmLabel(value=value, evidence=tuple(evidence))
