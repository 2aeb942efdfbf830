"""Split generator template content from user content; decrypt protected assets."""

from __future__ import annotations

from dataclasses import dataclass, field

from apktriage.apkcore.artifact import ApkArtifact
from apktriage.genscan import ciphers
from apktriage.genscan.ciphers import CipherError, DecryptFailed, KeyUnavailable
from apktriage.genscan.fingerprints import (
    GeneratorFingerprint,
    GeneratorMatch,
    fingerprint_for,
)

_PLAINTEXT_MAGICS = (b"PK\x03\x04", b"\x89PNG", b"<", b"\xff\xd8\xff", b"{", b"[")


@dataclass
class UserContent:
    user_entries: list[str]
    template_entries: list[str]
    decrypted: dict[str, bytes] = field(default_factory=dict)
    failed: list[str] = field(default_factory=list)


def looks_plaintext(data: bytes) -> bool:
    """Accept decryption output that starts with a known magic or is
    mostly valid UTF-8 (>= 90% of bytes decodable)."""
    if not data:
        return False
    stripped = data.lstrip()
    if any(stripped.startswith(m) or data.startswith(m) for m in _PLAINTEXT_MAGICS):
        return True
    view = data[:4096]
    valid = len(view.decode("utf-8", "ignore").encode("utf-8"))
    return valid / len(view) >= 0.9


def _resolve_key(apk: ApkArtifact, fp: GeneratorFingerprint, key: bytes | None) -> bytes:
    if key is not None:
        return key
    source = fp.cipher.key_source or {}
    kind = source.get("type")
    if kind == "constant" and source.get("hex"):
        return bytes.fromhex(source["hex"])
    if kind == "entry_offset":
        try:
            blob = apk.read(source["path"])
        except KeyError:
            raise KeyUnavailable(f"key entry {source['path']!r} missing") from None
        off, length = source["offset"], source["length"]
        if len(blob) < off + length:
            raise KeyUnavailable(f"key entry {source['path']!r} too short")
        return blob[off:off + length]
    raise KeyUnavailable(f"no key available for generator {fp.generator_id}")


def decrypt_assets(apk: ApkArtifact, match: GeneratorMatch,
                   key: bytes | None = None,
                   db=None) -> UserContent:
    """Decrypt every entry under the generator's protected paths.

    Entries whose plaintext fails the validation heuristic are left
    encrypted and listed in ``failed``.
    """
    fp = fingerprint_for(match.generator_id, db)
    if fp.cipher.algo is None:
        raise CipherError(f"generator {match.generator_id} declares no cipher")
    resolved = _resolve_key(apk, fp, key)

    content = split_user_content(apk, match, db)
    for entry in apk.entries:
        if not any(entry.path.startswith(p) for p in fp.protected_paths):
            continue
        data = apk.read(entry.path)
        try:
            plain = ciphers.decrypt(fp.cipher.algo, data, resolved)
        except CipherError:
            content.failed.append(entry.path)
            continue
        if looks_plaintext(plain):
            content.decrypted[entry.path] = plain
        else:
            content.failed.append(entry.path)
    return content


def split_user_content(apk: ApkArtifact, match: GeneratorMatch, db=None) -> UserContent:
    """Partition asset entries into user vs. template by path prefix."""
    fp = fingerprint_for(match.generator_id, db)
    user, template = [], []
    for entry in apk.entries:
        if not entry.path.startswith("assets/"):
            continue
        if any(entry.path.startswith(p) for p in fp.template_paths):
            template.append(entry.path)
        else:
            user.append(entry.path)
    return UserContent(user_entries=user, template_entries=template)
