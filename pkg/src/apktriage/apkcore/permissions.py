"""Dangerous-permission counting against a versioned reference list.

The embedded list is the Google protection-level "dangerous" set as of
API 31. Pass a user-supplied file (one permission per line, '#'
comments) to override it when analysing older or newer targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from apktriage.apkcore.manifest import ManifestInfo


@dataclass(frozen=True)
class PermissionProfile:
    dangerous_count: int
    normal_count: int

    @property
    def all_count(self) -> int:
        return self.dangerous_count + self.normal_count


def load_dangerous_db(path=None) -> frozenset[str]:
    if path is None:
        text = resources.files("apktriage.data").joinpath("dangerous_permissions.txt").read_text()
    else:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    perms = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            perms.add(line)
    return frozenset(perms)


def permission_profile(m: ManifestInfo, dangerous_db: frozenset[str]) -> PermissionProfile:
    if not dangerous_db:
        raise ValueError("dangerous-permission database is empty")
    dangerous = len(m.permissions & dangerous_db)
    return PermissionProfile(dangerous_count=dangerous,
                             normal_count=len(m.permissions) - dangerous)
