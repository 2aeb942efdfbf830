"""Benchmark the cipher kernels with and without JIT compilation.

The accelerated path is chosen at import time from the APKTRIAGE_NO_NUMBA
environment variable, so each mode runs in its own subprocess. Run:

    python3 benchmarks/bench_ciphers.py [--size BYTES] [--repeat N]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def run_mode(no_numba: bool, size: int, repeat: int) -> dict:
    env = dict(os.environ, APKTRIAGE_NO_NUMBA="1" if no_numba else "")
    out = subprocess.run(
        [sys.executable, __file__, "--worker", "--size", str(size),
         "--repeat", str(repeat)],
        env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def worker(size: int, repeat: int) -> dict:
    from apktriage.accel import NUMBA_ENABLED
    from apktriage.genscan import ciphers

    key16 = bytes(range(16))
    data = bytes(i * 31 % 251 for i in range(size))
    jobs = {
        "RC4": lambda: ciphers.rc4(data, key16),
        "TEA": lambda: ciphers.tea_encrypt(data, key16),
        "AES_CBC": lambda: ciphers.aes_cbc_encrypt(data, key16),
        "DES_CBC": lambda: ciphers.des_cbc_encrypt(data, key16[:8]),
    }
    results = {"numba": NUMBA_ENABLED, "size": size, "repeat": repeat}
    for name, fn in jobs.items():
        fn()  # warm-up (triggers JIT compilation in accelerated mode)
        best = min(_timed(fn) for _ in range(repeat))
        results[name] = best
    return results


def _timed(fn) -> float:
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--size", type=int, default=262144)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--worker", action="store_true")
    args = ap.parse_args()
    if args.worker:
        print(json.dumps(worker(args.size, args.repeat)))
        return
    accel = run_mode(False, args.size, args.repeat)
    plain = run_mode(True, args.size, args.repeat)
    print(f"payload {args.size} bytes, best of {args.repeat}\n")
    print(f"{'cipher':<8} {'numba (s)':>12} {'fallback (s)':>14} {'speedup':>9}")
    for name in ("RC4", "TEA", "AES_CBC", "DES_CBC"):
        a, p = accel[name], plain[name]
        print(f"{name:<8} {a:>12.4f} {p:>14.4f} {p / a:>8.1f}x")
    if not accel["numba"]:
        print("\nwarning: numba unavailable; both columns ran the fallback")


if __name__ == "__main__":
    main()
