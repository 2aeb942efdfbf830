"""Snapshot visual fingerprints: 64-bit difference hash over a 9x8 downscale.

The association contract only needs a symmetric, bounded similarity with
a threshold, so a deterministic dHash replaces keypoint matching; swap in
another backend by producing compatible 64-bit fingerprints.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class ImageUndecodable(Exception):
    pass


@dataclass(frozen=True)
class VisualFingerprint:
    hash_bits: int  # 64-bit integer, row-major dHash bits
    source: str = ""

    def __post_init__(self):
        if not 0 <= self.hash_bits < 1 << 64:
            raise ValueError("hash must fit in 64 bits")


def _area_mean_resize(img: np.ndarray, out_h: int, out_w: int) -> np.ndarray:
    h, w = img.shape
    rows = np.linspace(0, h, out_h + 1).round().astype(int)
    cols = np.linspace(0, w, out_w + 1).round().astype(int)
    out = np.empty((out_h, out_w), dtype=np.float64)
    for r in range(out_h):
        for c in range(out_w):
            block = img[rows[r]:max(rows[r + 1], rows[r] + 1),
                        cols[c]:max(cols[c + 1], cols[c] + 1)]
            out[r, c] = block.mean()
    return out


def snapshot_fingerprint(pixels, source: str = "") -> VisualFingerprint:
    """dHash of a grayscale pixel grid (2-D array, min dimension >= 9)."""
    img = np.asarray(pixels, dtype=np.float64)
    if img.ndim != 2:
        raise ImageUndecodable("expected a 2-D grayscale grid")
    if min(img.shape) < 9:
        raise ImageUndecodable("image smaller than 9 pixels in one dimension")
    small = _area_mean_resize(img, 8, 9)
    diff = small[:, 1:] > small[:, :-1]  # 8x8 horizontal gradient signs
    bits = 0
    for v in diff.flatten():
        bits = (bits << 1) | int(v)
    return VisualFingerprint(hash_bits=bits, source=source)


def similarity(a: VisualFingerprint, b: VisualFingerprint) -> float:
    """1 - normalized Hamming distance; symmetric, bounded in [0, 1]."""
    return 1.0 - (a.hash_bits ^ b.hash_bits).bit_count() / 64.0


def load_grayscale(path) -> np.ndarray:
    """Decode a PNG/JPEG snapshot file to a grayscale grid."""
    try:
        from PIL import Image
    except ImportError as e:
        raise ImageUndecodable(f"Pillow not installed: {e}") from None
    try:
        with Image.open(path) as im:
            return np.asarray(im.convert("L"), dtype=np.float64)
    except Exception as e:
        raise ImageUndecodable(str(e)) from None
