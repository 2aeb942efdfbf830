from apktriage.genscan.ciphers import CipherError, DecryptFailed, KeyUnavailable
from apktriage.genscan.content import UserContent, decrypt_assets, split_user_content
from apktriage.genscan.fingerprints import (
    CipherScheme,
    EvidenceRule,
    GeneratorFingerprint,
    GeneratorMatch,
    detect_generator,
    fingerprint_for,
    load_fingerprints,
)

__all__ = [
    "CipherError", "DecryptFailed", "KeyUnavailable",
    "UserContent", "decrypt_assets", "split_user_content",
    "CipherScheme", "EvidenceRule", "GeneratorFingerprint", "GeneratorMatch",
    "detect_generator", "fingerprint_for", "load_fingerprints",
]
