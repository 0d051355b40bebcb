"""Compare the gmpy2 rational backend against the pure-Python Fraction
fallback on the workloads that dominate certification time.

Run both configurations:

    python3 benchmarks/bench_backend.py
    FROBX_PURE_PYTHON=1 python3 benchmarks/bench_backend.py

The backend is chosen at import time (frobx._kernels), so the comparison
needs two interpreter invocations.
"""

import random
import time

from frobx._kernels import BACKEND
from frobx.fields import QQ
from frobx.linalg import Matrix, sparse_rref


def bench_rref(n, density, seed):
    rng = random.Random(seed)
    rows = []
    for _ in range(n):
        row = {}
        for j in range(n):
            if rng.random() < density:
                num = rng.randint(1, 30) * rng.choice([1, -1])
                row[j] = QQ.from_int(num) / QQ.from_int(rng.randint(1, 30))
        if row:
            rows.append(row)
    t0 = time.perf_counter()
    sparse_rref(rows, n, QQ)
    return time.perf_counter() - t0


def bench_certify():
    from frobx.examples import nilcoxeter_extension
    from frobx.extension import is_twisted_frobenius

    pair = nilcoxeter_extension(3, 4)
    t0 = time.perf_counter()
    result = is_twisted_frobenius(pair.emb, pair.alpha, pair.beta)
    assert result.status == "certified"
    return time.perf_counter() - t0


def main():
    print("backend: %s" % BACKEND)
    for n, density in [(40, 0.3), (70, 0.2), (100, 0.12)]:
        t = bench_rref(n, density, seed=n)
        print("rref %3dx%-3d density %.2f: %7.3f s" % (n, n, density, t))
    t = bench_certify()
    print("nilcoxeter (3,4) certification: %7.3f s" % t)


if __name__ == "__main__":
    main()
