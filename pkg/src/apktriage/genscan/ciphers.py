"""Symmetric ciphers used by app generators to protect bundled assets.

RC4, classic TEA (32 cycles, big-endian words), AES-CBC and DES-CBC.
Block modes use PKCS#7 padding and a zero IV unless one is supplied,
which matches how generator runtimes invoke them.

The per-byte/per-block inner loops are the hot kernels: they run under
numba when available (see apktriage.accel) and as plain numpy otherwise.
"""

from __future__ import annotations

import numpy as np

from apktriage.accel import jit_kernel


class CipherError(Exception):
    pass


class KeyUnavailable(CipherError):
    pass


class DecryptFailed(CipherError):
    def __init__(self, entry: str, reason: str = "validation rejected plaintext"):
        super().__init__(f"{entry}: {reason}")
        self.entry = entry


# ---------------------------------------------------------------------------
# RC4

@jit_kernel
def _rc4_crypt(key, data, out):
    s = np.empty(256, dtype=np.int64)
    for i in range(256):
        s[i] = i
    j = 0
    klen = len(key)
    for i in range(256):
        j = (j + s[i] + key[i % klen]) & 0xFF
        t = s[i]
        s[i] = s[j]
        s[j] = t
    i = 0
    j = 0
    for n in range(len(data)):
        i = (i + 1) & 0xFF
        j = (j + s[i]) & 0xFF
        t = s[i]
        s[i] = s[j]
        s[j] = t
        out[n] = data[n] ^ s[(s[i] + s[j]) & 0xFF]


def rc4(data: bytes, key: bytes) -> bytes:
    if not key:
        raise KeyUnavailable("RC4 key is empty")
    d = np.frombuffer(data, dtype=np.uint8).astype(np.int64)
    k = np.frombuffer(key, dtype=np.uint8).astype(np.int64)
    out = np.empty(len(d), dtype=np.int64)
    _rc4_crypt(k, d, out)
    return out.astype(np.uint8).tobytes()


# ---------------------------------------------------------------------------
# TEA (classic variant: 32 cycles, delta 0x9E3779B9, big-endian 32-bit words)

_TEA_DELTA = 0x9E3779B9
_M32 = 0xFFFFFFFF


@jit_kernel
def _tea_blocks(v, k, encrypt):
    k0, k1, k2, k3 = k[0], k[1], k[2], k[3]
    for b in range(0, len(v), 2):
        v0 = v[b]
        v1 = v[b + 1]
        if encrypt:
            s = 0
            for _ in range(32):
                s = (s + _TEA_DELTA) & _M32
                v0 = (v0 + ((((v1 << 4) & _M32) + k0) ^ ((v1 + s) & _M32) ^ ((v1 >> 5) + k1))) & _M32
                v1 = (v1 + ((((v0 << 4) & _M32) + k2) ^ ((v0 + s) & _M32) ^ ((v0 >> 5) + k3))) & _M32
        else:
            s = (_TEA_DELTA * 32) & _M32
            for _ in range(32):
                v1 = (v1 - ((((v0 << 4) & _M32) + k2) ^ ((v0 + s) & _M32) ^ ((v0 >> 5) + k3))) & _M32
                v0 = (v0 - ((((v1 << 4) & _M32) + k0) ^ ((v1 + s) & _M32) ^ ((v1 >> 5) + k1))) & _M32
                s = (s - _TEA_DELTA) & _M32
        v[b] = v0
        v[b + 1] = v1


def _tea_run(data: bytes, key: bytes, encrypt: bool) -> bytes:
    if len(key) != 16:
        raise KeyUnavailable("TEA requires a 128-bit key")
    if len(data) % 8:
        raise CipherError("TEA input must be a multiple of 8 bytes")
    v = np.frombuffer(data, dtype=">u4").astype(np.int64)
    k = np.frombuffer(key, dtype=">u4").astype(np.int64)
    _tea_blocks(v, k, encrypt)
    return v.astype(">u4").tobytes()


def tea_encrypt(data: bytes, key: bytes) -> bytes:
    return _tea_run(_pkcs7_pad(data, 8), key, True)


def tea_decrypt(data: bytes, key: bytes) -> bytes:
    return _pkcs7_unpad(_tea_run(data, key, False), 8)


def tea_encrypt_raw(data: bytes, key: bytes) -> bytes:
    """Unpadded block encryption; input length must be a multiple of 8."""
    return _tea_run(data, key, True)


def tea_decrypt_raw(data: bytes, key: bytes) -> bytes:
    return _tea_run(data, key, False)


# ---------------------------------------------------------------------------
# AES (FIPS-197 tables, CBC mode)

_AES_SBOX = np.array([
    0x63, 0x7c, 0x77, 0x7b, 0xf2, 0x6b, 0x6f, 0xc5, 0x30, 0x01, 0x67, 0x2b, 0xfe, 0xd7, 0xab, 0x76,
    0xca, 0x82, 0xc9, 0x7d, 0xfa, 0x59, 0x47, 0xf0, 0xad, 0xd4, 0xa2, 0xaf, 0x9c, 0xa4, 0x72, 0xc0,
    0xb7, 0xfd, 0x93, 0x26, 0x36, 0x3f, 0xf7, 0xcc, 0x34, 0xa5, 0xe5, 0xf1, 0x71, 0xd8, 0x31, 0x15,
    0x04, 0xc7, 0x23, 0xc3, 0x18, 0x96, 0x05, 0x9a, 0x07, 0x12, 0x80, 0xe2, 0xeb, 0x27, 0xb2, 0x75,
    0x09, 0x83, 0x2c, 0x1a, 0x1b, 0x6e, 0x5a, 0xa0, 0x52, 0x3b, 0xd6, 0xb3, 0x29, 0xe3, 0x2f, 0x84,
    0x53, 0xd1, 0x00, 0xed, 0x20, 0xfc, 0xb1, 0x5b, 0x6a, 0xcb, 0xbe, 0x39, 0x4a, 0x4c, 0x58, 0xcf,
    0xd0, 0xef, 0xaa, 0xfb, 0x43, 0x4d, 0x33, 0x85, 0x45, 0xf9, 0x02, 0x7f, 0x50, 0x3c, 0x9f, 0xa8,
    0x51, 0xa3, 0x40, 0x8f, 0x92, 0x9d, 0x38, 0xf5, 0xbc, 0xb6, 0xda, 0x21, 0x10, 0xff, 0xf3, 0xd2,
    0xcd, 0x0c, 0x13, 0xec, 0x5f, 0x97, 0x44, 0x17, 0xc4, 0xa7, 0x7e, 0x3d, 0x64, 0x5d, 0x19, 0x73,
    0x60, 0x81, 0x4f, 0xdc, 0x22, 0x2a, 0x90, 0x88, 0x46, 0xee, 0xb8, 0x14, 0xde, 0x5e, 0x0b, 0xdb,
    0xe0, 0x32, 0x3a, 0x0a, 0x49, 0x06, 0x24, 0x5c, 0xc2, 0xd3, 0xac, 0x62, 0x91, 0x95, 0xe4, 0x79,
    0xe7, 0xc8, 0x37, 0x6d, 0x8d, 0xd5, 0x4e, 0xa9, 0x6c, 0x56, 0xf4, 0xea, 0x65, 0x7a, 0xae, 0x08,
    0xba, 0x78, 0x25, 0x2e, 0x1c, 0xa6, 0xb4, 0xc6, 0xe8, 0xdd, 0x74, 0x1f, 0x4b, 0xbd, 0x8b, 0x8a,
    0x70, 0x3e, 0xb5, 0x66, 0x48, 0x03, 0xf6, 0x0e, 0x61, 0x35, 0x57, 0xb9, 0x86, 0xc1, 0x1d, 0x9e,
    0xe1, 0xf8, 0x98, 0x11, 0x69, 0xd9, 0x8e, 0x94, 0x9b, 0x1e, 0x87, 0xe9, 0xce, 0x55, 0x28, 0xdf,
    0x8c, 0xa1, 0x89, 0x0d, 0xbf, 0xe6, 0x42, 0x68, 0x41, 0x99, 0x2d, 0x0f, 0xb0, 0x54, 0xbb, 0x16,
], dtype=np.int64)

_AES_INV_SBOX = np.zeros(256, dtype=np.int64)
for _i in range(256):
    _AES_INV_SBOX[_AES_SBOX[_i]] = _i


def _xtime_table():
    t = np.empty(256, dtype=np.int64)
    for x in range(256):
        t[x] = ((x << 1) ^ 0x1B) & 0xFF if x & 0x80 else (x << 1)
    return t


_XT = _xtime_table()


def _gmul_table(c: int) -> np.ndarray:
    t = np.empty(256, dtype=np.int64)
    for x in range(256):
        r, a, b = 0, x, c
        while b:
            if b & 1:
                r ^= a
            a = int(_XT[a])
            b >>= 1
        t[x] = r
    return t


_MUL2 = _gmul_table(2)
_MUL3 = _gmul_table(3)
_MUL9 = _gmul_table(9)
_MUL11 = _gmul_table(11)
_MUL13 = _gmul_table(13)
_MUL14 = _gmul_table(14)

_AES_SHIFT = np.array([0, 5, 10, 15, 4, 9, 14, 3, 8, 13, 2, 7, 12, 1, 6, 11], dtype=np.int64)
_AES_INV_SHIFT = np.array([0, 13, 10, 7, 4, 1, 14, 11, 8, 5, 2, 15, 12, 9, 6, 3], dtype=np.int64)

_RCON = [0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0x1B, 0x36, 0x6C, 0xD8, 0xAB, 0x4D]


def _aes_key_expand(key: bytes) -> np.ndarray:
    nk = len(key) // 4
    nr = nk + 6
    words = [list(key[4 * i: 4 * i + 4]) for i in range(nk)]
    for i in range(nk, 4 * (nr + 1)):
        w = list(words[i - 1])
        if i % nk == 0:
            w = w[1:] + w[:1]
            w = [int(_AES_SBOX[b]) for b in w]
            w[0] ^= _RCON[i // nk - 1]
        elif nk > 6 and i % nk == 4:
            w = [int(_AES_SBOX[b]) for b in w]
        words.append([w[j] ^ words[i - nk][j] for j in range(4)])
    flat = [b for w in words for b in w]
    return np.array(flat, dtype=np.int64)


@jit_kernel
def _aes_cbc(blocks, rk, nr, iv, encrypt,
             sbox, inv_sbox, shift, inv_shift,
             m2, m3, m9, m11, m13, m14):
    n = len(blocks) // 16
    state = np.empty(16, dtype=np.int64)
    tmp = np.empty(16, dtype=np.int64)
    prev = np.empty(16, dtype=np.int64)
    for i in range(16):
        prev[i] = iv[i]
    for b in range(n):
        off = b * 16
        if encrypt:
            for i in range(16):
                state[i] = blocks[off + i] ^ prev[i]
            for i in range(16):
                state[i] ^= rk[i]
            for rnd in range(1, nr + 1):
                for i in range(16):
                    tmp[i] = sbox[state[i]]
                for i in range(16):
                    state[i] = tmp[shift[i]]
                if rnd < nr:
                    for c in range(4):
                        a0 = state[4 * c]
                        a1 = state[4 * c + 1]
                        a2 = state[4 * c + 2]
                        a3 = state[4 * c + 3]
                        state[4 * c] = m2[a0] ^ m3[a1] ^ a2 ^ a3
                        state[4 * c + 1] = a0 ^ m2[a1] ^ m3[a2] ^ a3
                        state[4 * c + 2] = a0 ^ a1 ^ m2[a2] ^ m3[a3]
                        state[4 * c + 3] = m3[a0] ^ a1 ^ a2 ^ m2[a3]
                for i in range(16):
                    state[i] ^= rk[16 * rnd + i]
            for i in range(16):
                blocks[off + i] = state[i]
                prev[i] = state[i]
        else:
            for i in range(16):
                state[i] = blocks[off + i]
                tmp[i] = blocks[off + i]
            for i in range(16):
                state[i] ^= rk[16 * nr + i]
            for rnd in range(nr - 1, -1, -1):
                ts = np.empty(16, dtype=np.int64)
                for i in range(16):
                    ts[i] = state[inv_shift[i]]
                for i in range(16):
                    state[i] = inv_sbox[ts[i]]
                for i in range(16):
                    state[i] ^= rk[16 * rnd + i]
                if rnd > 0:
                    for c in range(4):
                        a0 = state[4 * c]
                        a1 = state[4 * c + 1]
                        a2 = state[4 * c + 2]
                        a3 = state[4 * c + 3]
                        state[4 * c] = m14[a0] ^ m11[a1] ^ m13[a2] ^ m9[a3]
                        state[4 * c + 1] = m9[a0] ^ m14[a1] ^ m11[a2] ^ m13[a3]
                        state[4 * c + 2] = m13[a0] ^ m9[a1] ^ m14[a2] ^ m11[a3]
                        state[4 * c + 3] = m11[a0] ^ m13[a1] ^ m9[a2] ^ m14[a3]
            for i in range(16):
                blocks[off + i] = state[i] ^ prev[i]
                prev[i] = tmp[i]


def _aes_cbc_run(data: bytes, key: bytes, iv: bytes, encrypt: bool) -> bytes:
    if len(key) not in (16, 24, 32):
        raise KeyUnavailable("AES key must be 16, 24 or 32 bytes")
    if len(iv) != 16:
        raise CipherError("AES-CBC IV must be 16 bytes")
    if len(data) % 16:
        raise CipherError("AES-CBC input must be a multiple of 16 bytes")
    rk = _aes_key_expand(key)
    nr = len(key) // 4 + 6
    blocks = np.frombuffer(data, dtype=np.uint8).astype(np.int64)
    ivv = np.frombuffer(iv, dtype=np.uint8).astype(np.int64)
    _aes_cbc(blocks, rk, nr, ivv, encrypt,
             _AES_SBOX, _AES_INV_SBOX, _AES_SHIFT, _AES_INV_SHIFT,
             _MUL2, _MUL3, _MUL9, _MUL11, _MUL13, _MUL14)
    return blocks.astype(np.uint8).tobytes()


def aes_cbc_encrypt(data: bytes, key: bytes, iv: bytes = b"\x00" * 16) -> bytes:
    return _aes_cbc_run(_pkcs7_pad(data, 16), key, iv, True)


def aes_cbc_decrypt(data: bytes, key: bytes, iv: bytes = b"\x00" * 16) -> bytes:
    return _pkcs7_unpad(_aes_cbc_run(data, key, iv, False), 16)


# ---------------------------------------------------------------------------
# DES (FIPS 46-3 tables, CBC mode)

_DES_IP = [58, 50, 42, 34, 26, 18, 10, 2, 60, 52, 44, 36, 28, 20, 12, 4,
           62, 54, 46, 38, 30, 22, 14, 6, 64, 56, 48, 40, 32, 24, 16, 8,
           57, 49, 41, 33, 25, 17, 9, 1, 59, 51, 43, 35, 27, 19, 11, 3,
           61, 53, 45, 37, 29, 21, 13, 5, 63, 55, 47, 39, 31, 23, 15, 7]
_DES_FP = [40, 8, 48, 16, 56, 24, 64, 32, 39, 7, 47, 15, 55, 23, 63, 31,
           38, 6, 46, 14, 54, 22, 62, 30, 37, 5, 45, 13, 53, 21, 61, 29,
           36, 4, 44, 12, 52, 20, 60, 28, 35, 3, 43, 11, 51, 19, 59, 27,
           34, 2, 42, 10, 50, 18, 58, 26, 33, 1, 41, 9, 49, 17, 57, 25]
_DES_E = [32, 1, 2, 3, 4, 5, 4, 5, 6, 7, 8, 9, 8, 9, 10, 11, 12, 13,
          12, 13, 14, 15, 16, 17, 16, 17, 18, 19, 20, 21, 20, 21, 22, 23, 24, 25,
          24, 25, 26, 27, 28, 29, 28, 29, 30, 31, 32, 1]
_DES_P = [16, 7, 20, 21, 29, 12, 28, 17, 1, 15, 23, 26, 5, 18, 31, 10,
          2, 8, 24, 14, 32, 27, 3, 9, 19, 13, 30, 6, 22, 11, 4, 25]
_DES_PC1 = [57, 49, 41, 33, 25, 17, 9, 1, 58, 50, 42, 34, 26, 18,
            10, 2, 59, 51, 43, 35, 27, 19, 11, 3, 60, 52, 44, 36,
            63, 55, 47, 39, 31, 23, 15, 7, 62, 54, 46, 38, 30, 22,
            14, 6, 61, 53, 45, 37, 29, 21, 13, 5, 28, 20, 12, 4]
_DES_PC2 = [14, 17, 11, 24, 1, 5, 3, 28, 15, 6, 21, 10,
            23, 19, 12, 4, 26, 8, 16, 7, 27, 20, 13, 2,
            41, 52, 31, 37, 47, 55, 30, 40, 51, 45, 33, 48,
            44, 49, 39, 56, 34, 53, 46, 42, 50, 36, 29, 32]
_DES_SHIFTS = [1, 1, 2, 2, 2, 2, 2, 2, 1, 2, 2, 2, 2, 2, 2, 1]
_DES_SBOXES = [
    [14, 4, 13, 1, 2, 15, 11, 8, 3, 10, 6, 12, 5, 9, 0, 7,
     0, 15, 7, 4, 14, 2, 13, 1, 10, 6, 12, 11, 9, 5, 3, 8,
     4, 1, 14, 8, 13, 6, 2, 11, 15, 12, 9, 7, 3, 10, 5, 0,
     15, 12, 8, 2, 4, 9, 1, 7, 5, 11, 3, 14, 10, 0, 6, 13],
    [15, 1, 8, 14, 6, 11, 3, 4, 9, 7, 2, 13, 12, 0, 5, 10,
     3, 13, 4, 7, 15, 2, 8, 14, 12, 0, 1, 10, 6, 9, 11, 5,
     0, 14, 7, 11, 10, 4, 13, 1, 5, 8, 12, 6, 9, 3, 2, 15,
     13, 8, 10, 1, 3, 15, 4, 2, 11, 6, 7, 12, 0, 5, 14, 9],
    [10, 0, 9, 14, 6, 3, 15, 5, 1, 13, 12, 7, 11, 4, 2, 8,
     13, 7, 0, 9, 3, 4, 6, 10, 2, 8, 5, 14, 12, 11, 15, 1,
     13, 6, 4, 9, 8, 15, 3, 0, 11, 1, 2, 12, 5, 10, 14, 7,
     1, 10, 13, 0, 6, 9, 8, 7, 4, 15, 14, 3, 11, 5, 2, 12],
    [7, 13, 14, 3, 0, 6, 9, 10, 1, 2, 8, 5, 11, 12, 4, 15,
     13, 8, 11, 5, 6, 15, 0, 3, 4, 7, 2, 12, 1, 10, 14, 9,
     10, 6, 9, 0, 12, 11, 7, 13, 15, 1, 3, 14, 5, 2, 8, 4,
     3, 15, 0, 6, 10, 1, 13, 8, 9, 4, 5, 11, 12, 7, 2, 14],
    [2, 12, 4, 1, 7, 10, 11, 6, 8, 5, 3, 15, 13, 0, 14, 9,
     14, 11, 2, 12, 4, 7, 13, 1, 5, 0, 15, 10, 3, 9, 8, 6,
     4, 2, 1, 11, 10, 13, 7, 8, 15, 9, 12, 5, 6, 3, 0, 14,
     11, 8, 12, 7, 1, 14, 2, 13, 6, 15, 0, 9, 10, 4, 5, 3],
    [12, 1, 10, 15, 9, 2, 6, 8, 0, 13, 3, 4, 14, 7, 5, 11,
     10, 15, 4, 2, 7, 12, 9, 5, 6, 1, 13, 14, 0, 11, 3, 8,
     9, 14, 15, 5, 2, 8, 12, 3, 7, 0, 4, 10, 1, 13, 11, 6,
     4, 3, 2, 12, 9, 5, 15, 10, 11, 14, 1, 7, 6, 0, 8, 13],
    [4, 11, 2, 14, 15, 0, 8, 13, 3, 12, 9, 7, 5, 10, 6, 1,
     13, 0, 11, 7, 4, 9, 1, 10, 14, 3, 5, 12, 2, 15, 8, 6,
     1, 4, 11, 13, 12, 3, 7, 14, 10, 15, 6, 8, 0, 5, 9, 2,
     6, 11, 13, 8, 1, 4, 10, 7, 9, 5, 0, 15, 14, 2, 3, 12],
    [13, 2, 8, 4, 6, 15, 11, 1, 10, 9, 3, 14, 5, 0, 12, 7,
     1, 15, 13, 8, 10, 3, 7, 4, 12, 5, 6, 11, 0, 14, 9, 2,
     7, 11, 4, 1, 9, 12, 14, 2, 0, 6, 10, 13, 15, 3, 5, 8,
     2, 1, 14, 7, 4, 10, 8, 13, 15, 12, 9, 0, 3, 5, 6, 11],
]

# 0-indexed table copies for the kernels
_IP_IDX = np.array([p - 1 for p in _DES_IP], dtype=np.int64)
_FP_IDX = np.array([p - 1 for p in _DES_FP], dtype=np.int64)
_E_IDX = np.array([p - 1 for p in _DES_E], dtype=np.int64)
_P_IDX = np.array([p - 1 for p in _DES_P], dtype=np.int64)
_SBOX_FLAT = np.array([v for box in _DES_SBOXES for v in box], dtype=np.int64)


def _des_round_keys(key: bytes) -> np.ndarray:
    if len(key) != 8:
        raise KeyUnavailable("DES key must be 8 bytes")
    kb = [(key[i // 8] >> (7 - i % 8)) & 1 for i in range(64)]
    cd = [kb[p - 1] for p in _DES_PC1]
    c, d = cd[:28], cd[28:]
    rks = np.empty((16, 48), dtype=np.int64)
    for r, sh in enumerate(_DES_SHIFTS):
        c = c[sh:] + c[:sh]
        d = d[sh:] + d[:sh]
        cd2 = c + d
        for i, p in enumerate(_DES_PC2):
            rks[r, i] = cd2[p - 1]
    return rks


@jit_kernel
def _des_cbc(bits, rks, iv_bits, encrypt, ip, fp, e, pp, sbox):
    nblocks = len(bits) // 64
    prev = np.empty(64, dtype=np.int64)
    for i in range(64):
        prev[i] = iv_bits[i]
    blk = np.empty(64, dtype=np.int64)
    perm = np.empty(64, dtype=np.int64)
    er = np.empty(48, dtype=np.int64)
    fout = np.empty(32, dtype=np.int64)
    for b in range(nblocks):
        off = b * 64
        if encrypt:
            for i in range(64):
                blk[i] = bits[off + i] ^ prev[i]
        else:
            for i in range(64):
                blk[i] = bits[off + i]
        for i in range(64):
            perm[i] = blk[ip[i]]
        left = perm[:32].copy()
        right = perm[32:].copy()
        for r in range(16):
            ridx = r if encrypt else 15 - r
            for i in range(48):
                er[i] = right[e[i]] ^ rks[ridx, i]
            for g in range(8):
                b6 = er[6 * g: 6 * g + 6]
                row = (b6[0] << 1) | b6[5]
                col = (b6[1] << 3) | (b6[2] << 2) | (b6[3] << 1) | b6[4]
                val = sbox[g * 64 + row * 16 + col]
                fout[4 * g] = (val >> 3) & 1
                fout[4 * g + 1] = (val >> 2) & 1
                fout[4 * g + 2] = (val >> 1) & 1
                fout[4 * g + 3] = val & 1
            for i in range(32):
                perm[i] = left[i] ^ fout[pp[i]]
            for i in range(32):
                left[i] = right[i]
                right[i] = perm[i]
        for i in range(32):
            blk[i] = right[i]
            blk[32 + i] = left[i]
        for i in range(64):
            perm[i] = blk[fp[i]]
        if encrypt:
            for i in range(64):
                bits[off + i] = perm[i]
                prev[i] = perm[i]
        else:
            for i in range(64):
                tmp = bits[off + i]
                bits[off + i] = perm[i] ^ prev[i]
                prev[i] = tmp


def _des_cbc_run(data: bytes, key: bytes, iv: bytes, encrypt: bool) -> bytes:
    if len(iv) != 8:
        raise CipherError("DES-CBC IV must be 8 bytes")
    if len(data) % 8:
        raise CipherError("DES-CBC input must be a multiple of 8 bytes")
    rks = _des_round_keys(key)
    raw = np.frombuffer(data, dtype=np.uint8)
    bits = np.unpackbits(raw).astype(np.int64)
    iv_bits = np.unpackbits(np.frombuffer(iv, dtype=np.uint8)).astype(np.int64)
    _des_cbc(bits, rks, iv_bits, encrypt, _IP_IDX, _FP_IDX, _E_IDX, _P_IDX, _SBOX_FLAT)
    return np.packbits(bits.astype(np.uint8)).tobytes()


def des_cbc_encrypt(data: bytes, key: bytes, iv: bytes = b"\x00" * 8) -> bytes:
    return _des_cbc_run(_pkcs7_pad(data, 8), key, iv, True)


def des_cbc_decrypt(data: bytes, key: bytes, iv: bytes = b"\x00" * 8) -> bytes:
    return _pkcs7_unpad(_des_cbc_run(data, key, iv, False), 8)


# ---------------------------------------------------------------------------
# padding + dispatch

def _pkcs7_pad(data: bytes, block: int) -> bytes:
    n = block - len(data) % block
    return data + bytes([n]) * n


def _pkcs7_unpad(data: bytes, block: int) -> bytes:
    if not data or len(data) % block:
        raise CipherError("bad padded length")
    n = data[-1]
    if not 1 <= n <= block or data[-n:] != bytes([n]) * n:
        raise CipherError("bad PKCS#7 padding")
    return data[:-n]


_ENCRYPTORS = {
    "RC4": lambda d, k, iv: rc4(d, k),
    "TEA": lambda d, k, iv: tea_encrypt(d, k),
    "AES_CBC": lambda d, k, iv: aes_cbc_encrypt(d, k, iv or b"\x00" * 16),
    "DES_CBC": lambda d, k, iv: des_cbc_encrypt(d, k, iv or b"\x00" * 8),
}

_DECRYPTORS = {
    "RC4": lambda d, k, iv: rc4(d, k),
    "TEA": lambda d, k, iv: tea_decrypt(d, k),
    "AES_CBC": lambda d, k, iv: aes_cbc_decrypt(d, k, iv or b"\x00" * 16),
    "DES_CBC": lambda d, k, iv: des_cbc_decrypt(d, k, iv or b"\x00" * 8),
}


def encrypt(algo: str, data: bytes, key: bytes, iv: bytes | None = None) -> bytes:
    try:
        fn = _ENCRYPTORS[algo]
    except KeyError:
        raise CipherError(f"unknown cipher {algo!r}") from None
    return fn(data, key, iv)


def decrypt(algo: str, data: bytes, key: bytes, iv: bytes | None = None) -> bytes:
    try:
        fn = _DECRYPTORS[algo]
    except KeyError:
        raise CipherError(f"unknown cipher {algo!r}") from None
    return fn(data, key, iv)
