"""Throughput comparison of the compiled and pure-Python cipher kernels.

Runs the same workloads against every kernel that can be imported and prints
one table row per (kernel, operation).  The round-trip result is checked
before any timing is trusted.

Usage: python3 benchmarks/bench_kernels.py [--size-mib N] [--repeat N]
"""

import argparse
import random
import time


def _load_backends():
    from replaykit.mpq import _crypt_py

    backends = []
    try:
        from replaykit.mpq import _crypt
        backends.append(_crypt)
    except ImportError:
        pass
    backends.append(_crypt_py)
    return backends


def _best_of(repeat, fn):
    best = float("inf")
    for _ in range(repeat):
        started = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - started)
    return best


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size-mib", type=float, default=4.0,
                        help="cipher payload size in MiB (default 4)")
    parser.add_argument("--repeat", type=int, default=3,
                        help="timed repetitions; the best one counts (default 3)")
    parser.add_argument("--names", type=int, default=200_000,
                        help="name count for the hashing workload (default 200000)")
    args = parser.parse_args(argv)

    rng = random.Random("bench-kernels")
    payload = rng.randbytes(int(args.size_mib * 1024 * 1024))
    names = [("UNIT\\REPLAY_%06d.SC2REPLAY" % i).encode("ascii")
             for i in range(args.names)]
    key = 0xDEADBEEF

    backends = _load_backends()
    mib = len(payload) / (1024 * 1024)
    print("payload %.1f MiB, %d names, best of %d runs" % (mib, len(names), args.repeat))
    print("%-8s %-12s %12s" % ("kernel", "operation", "throughput"))

    rates = {}
    for impl in backends:
        encrypted = impl.encrypt_block(payload, key)
        if impl.decrypt_block(encrypted, key) != payload:
            raise SystemExit("%s kernel failed its round-trip check" % impl.BACKEND)

        seconds = _best_of(args.repeat, lambda: impl.encrypt_block(payload, key))
        print("%-8s %-12s %9.1f MiB/s" % (impl.BACKEND, "encrypt", mib / seconds))
        seconds = _best_of(args.repeat, lambda: impl.decrypt_block(encrypted, key))
        print("%-8s %-12s %9.1f MiB/s" % (impl.BACKEND, "decrypt", mib / seconds))
        rates[impl.BACKEND, "cipher"] = mib / seconds

        def hash_all():
            for name in names:
                impl.hash_bytes(name, 3)
        seconds = _best_of(args.repeat, hash_all)
        print("%-8s %-12s %9.0f names/s" % (impl.BACKEND, "hash", len(names) / seconds))
        rates[impl.BACKEND, "hash"] = len(names) / seconds

    if len(backends) == 2:
        for op in ("cipher", "hash"):
            ratio = rates["native", op] / rates["pure", op]
            print("native %s is %.0fx the pure kernel" % (op, ratio))
    else:
        print("compiled kernel not built; only the pure kernel was timed")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
