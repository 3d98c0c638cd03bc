#!/usr/bin/env python3
"""Compare the compiled arithmetic kernel with the pure-Python fallback.

Equivalent to ``sl2star bench``; kept as a standalone script so the numbers
are easy to collect without installing entry points.
"""

import argparse

from sl2star._backend import BACKEND
from sl2star.bench import run_benchmark


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="best-of repetitions per measurement")
    args = parser.parse_args()

    print(f"active backend: {BACKEND}")
    results = run_benchmark(repeat=args.repeat)
    for row in results["rows"]:
        line = f"{row['name']:<34} python {row['python'] * 1e3:8.2f} ms"
        if row.get("cython") is not None:
            line += (f"   cython {row['cython'] * 1e3:8.2f} ms"
                     f"   speedup x{row['speedup']:.2f}")
        else:
            line += "   cython unavailable"
        print(line)


if __name__ == "__main__":
    main()
