"""Benchmark the pure-Python kernel against the compiled twin.

Kernel microbenchmarks call both implementations directly on identical
payloads; the end-to-end row times the full normal-ordering pipeline in a
subprocess per backend (the backend is fixed at import time, so a fresh
interpreter is the clean way to switch).
"""

from __future__ import annotations

import os
import subprocess
import sys
import time
from typing import Callable, Dict, Optional

from . import _kernel_py

try:
    from . import _kernel_cy  # type: ignore[attr-defined]
except ImportError:
    _kernel_cy = None


def _dense_series(order: int, scale: int = 1) -> dict:
    return {e: (scale * (e + 1), e + 2) for e in range(order + 1)}


def _bench_s_mul(kernel, n: int = 2000) -> None:
    a = _dense_series(12)
    b = _dense_series(12, -3)
    for _ in range(n):
        kernel.s_mul(a, b, 12)


def _bench_s_mul_sparse(kernel, n: int = 20000) -> None:
    a = {0: (1, 1), 1: (2, 1)}
    b = {1: (4, 3), 3: (-1, 6)}
    for _ in range(n):
        kernel.s_mul(a, b, 8)


def _bench_s_add(kernel, n: int = 20000) -> None:
    a = _dense_series(12)
    b = _dense_series(12, -1)
    for _ in range(n):
        kernel.s_add(a, b)


def _bench_rational(kernel, n: int = 50000) -> None:
    x = (3, 7)
    for _ in range(n):
        y = kernel.qmul(x, (22, 9))
        kernel.qadd(y, (5, 6))


_KERNEL_WORKLOADS: Dict[str, Callable] = {
    "kernel: dense series product": _bench_s_mul,
    "kernel: sparse series product": _bench_s_mul_sparse,
    "kernel: series addition": _bench_s_add,
    "kernel: rational mul+add": _bench_rational,
}

_PIPELINE_SNIPPET = r"""
import time
from sl2star.ncalg import x_algebra, EM, EP, X1, X2, X3
system = x_algebra(8)
words = [(EM, X3, X3, X2, X1, EP), (X3, X2, X3, X2), (EP, X3, X2, EM, X1)]
start = time.perf_counter()
for _ in range(40):
    system._star_cache.clear()
    for w in words:
        system.normal_form(w)
print(time.perf_counter() - start)
"""


def _time_best(fn: Callable, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _pipeline_time(pure: bool, repeat: int) -> Optional[float]:
    env = dict(os.environ)
    if pure:
        env["SL2STAR_PURE_PYTHON"] = "1"
    else:
        env.pop("SL2STAR_PURE_PYTHON", None)
        if _kernel_cy is None:
            return None
    best = float("inf")
    for _ in range(repeat):
        proc = subprocess.run([sys.executable, "-c", _PIPELINE_SNIPPET],
                              capture_output=True, text=True, env=env)
        if proc.returncode != 0:
            raise RuntimeError(f"pipeline benchmark failed: {proc.stderr}")
        best = min(best, float(proc.stdout.strip()))
    return best


def run_benchmark(repeat: int = 3) -> dict:
    rows = []
    for name, fn in _KERNEL_WORKLOADS.items():
        py = _time_best(lambda: fn(_kernel_py), repeat)
        cy = (_time_best(lambda: fn(_kernel_cy), repeat)
              if _kernel_cy is not None else None)
        rows.append({
            "name": name,
            "python": py,
            "cython": cy,
            "speedup": (py / cy) if cy else None,
        })
    py = _pipeline_time(pure=True, repeat=repeat)
    cy = _pipeline_time(pure=False, repeat=repeat)
    rows.append({
        "name": "pipeline: normal ordering",
        "python": py,
        "cython": cy,
        "speedup": (py / cy) if cy else None,
    })
    return {"rows": rows}
