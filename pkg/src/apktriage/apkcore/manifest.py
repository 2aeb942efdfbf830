"""Typed view of the fields the triage pipeline needs from a manifest."""

from __future__ import annotations

from dataclasses import dataclass, field

from apktriage.apkcore.axml import AxmlElement, parse_axml
from apktriage.apkcore.errors import ManifestUndecodable

ACTION_MAIN = "android.intent.action.MAIN"
CATEGORY_LAUNCHER = "android.intent.category.LAUNCHER"


@dataclass(frozen=True)
class ManifestInfo:
    package_name: str
    main_activity: str | None
    permissions: frozenset[str]
    min_sdk: int | None = None
    target_sdk: int | None = None


def _is_launcher(activity: AxmlElement) -> bool:
    for intent in activity.find_all("intent-filter"):
        actions = {a.attr("name") for a in intent.find_all("action")}
        categories = {c.attr("name") for c in intent.find_all("category")}
        if ACTION_MAIN in actions and CATEGORY_LAUNCHER in categories:
            return True
    return False


def _qualify(name: str | None, package: str) -> str | None:
    if name is None:
        return None
    if name.startswith("."):
        return package + name
    if "." not in name:
        return f"{package}.{name}"
    return name


def parse_manifest(axml_bytes: bytes) -> ManifestInfo:
    root = parse_axml(axml_bytes)
    if root.name != "manifest":
        raise ManifestUndecodable(f"root element is <{root.name}>, not <manifest>")
    package = root.attr("package") or ""

    permissions = set()
    for up in root.find_all("uses-permission"):
        name = up.attr("name")
        if name:
            permissions.add(name)

    min_sdk = target_sdk = None
    for sdk in root.find_all("uses-sdk"):
        v = sdk.attr("minSdkVersion")
        if isinstance(v, int):
            min_sdk = v
        v = sdk.attr("targetSdkVersion")
        if isinstance(v, int):
            target_sdk = v

    main_activity = None
    for app in root.find_all("application"):
        for tag in ("activity", "activity-alias"):
            for activity in app.find_all(tag):
                if _is_launcher(activity):
                    candidate = _qualify(activity.attr("name"), package)
                    if main_activity is None:
                        main_activity = candidate

    return ManifestInfo(
        package_name=package,
        main_activity=main_activity,
        permissions=frozenset(permissions),
        min_sdk=min_sdk,
        target_sdk=target_sdk,
    )
