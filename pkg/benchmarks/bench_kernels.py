"""Benchmark the numba kernels against the pure-numpy fallbacks.

Run as ``python benchmarks/bench_kernels.py``. The same workloads are timed
on both paths (when numba is available) and the speedup is reported. Set
CYCODES_PURE_NUMPY=1 to check what the package falls back to.
"""

import time

import numpy as np

from cycodes import _kernels
from cycodes._backend import USE_NUMBA, active_backend
from cycodes.codes import CodeSpec, build_trinomial_code
from cycodes.ffield import prime_field


def _time(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_rref(level_order, rows, cols, count, rng):
    level = prime_field(level_order)
    tabs = level.level_tables()
    mats = rng.integers(0, level_order, (count, rows, cols)).astype(np.int64)

    def run(impl):
        piv = np.zeros(cols, dtype=np.int64)
        for M in mats:
            impl(M.copy(), *tabs, piv)

    out = {"numpy": _time(run, _kernels.rref_numpy)}
    if USE_NUMBA:
        _kernels.rref_numba(mats[0].copy(), *tabs, np.zeros(cols, dtype=np.int64))
        out["numba"] = _time(run, _kernels.rref_numba)
    return out


def bench_mulmod(p, degree, count, rng):
    from cycodes.ffield import extend
    ctx = extend(prime_field(p), degree)
    a = rng.integers(0, p, (count, degree)).astype(np.int64)
    b = rng.integers(0, p, (count, degree)).astype(np.int64)

    def run(impl):
        for i in range(count):
            impl(a[i], b[i], ctx._redrows, p)

    out = {"numpy": _time(run, _kernels.mulmod_numpy)}
    if USE_NUMBA:
        _kernels.mulmod_numba(a[0], b[0], ctx._redrows, p)
        out["numba"] = _time(run, _kernels.mulmod_numba)
    return out


def bench_orbit_scan():
    # a real certification workload: one generator against its own shifts
    spec = CodeSpec.create(q=3, n=1, k=2, l=1, N=8, trinomials=[(1, 2)])
    code = build_trinomial_code(spec)
    amb = code.ambient
    level = amb.base_level
    tabs = level.level_tables()
    V = code.trinomial_generators[0]
    vj = np.stack([bb._vec() for bb in V.basis_elements()])
    g = amb.generator._vec()
    amb._coord_setup()
    count = code.coset_count - 1
    args = (np.ascontiguousarray(V.rows), vj, amb._pow_vec(g, 1), g, 1, count,
            amb.p, amb.q_degree, amb.degree_over_q, amb._redrows,
            amb._coord_Tinv, 1, *tabs, 1, 0, 2)

    out = {"numpy": _time(lambda: _kernels.orbit_scan_numpy(*args), repeat=1)}
    if USE_NUMBA:
        _kernels.orbit_scan_numba(*args)
        out["numba"] = _time(lambda: _kernels.orbit_scan_numba(*args))
    return count, out


def _row(name, res, extra=""):
    np_t = res["numpy"]
    if "numba" in res:
        nb_t = res["numba"]
        print(f"{name:<34} numpy {np_t * 1e3:9.2f} ms   numba {nb_t * 1e3:9.2f} ms "
              f"  speedup {np_t / nb_t:6.1f}x {extra}")
    else:
        print(f"{name:<34} numpy {np_t * 1e3:9.2f} ms   (numba unavailable) {extra}")


def main():
    print(f"active backend: {active_backend()}")
    rng = np.random.default_rng(0)
    _row("rref 6x14 over GF(2), 2000 reps", bench_rref(2, 6, 14, 2000, rng))
    _row("rref 4x8 over GF(3), 2000 reps", bench_rref(3, 4, 8, 2000, rng))
    _row("mulmod degree 14 over GF(3), 5000", bench_mulmod(3, 14, 5000, rng))
    _row("mulmod degree 78 over GF(3), 2000", bench_mulmod(3, 78, 2000, rng))
    count, res = bench_orbit_scan()
    _row(f"orbit scan, {count} shifts in GF(3^8)", res)


if __name__ == "__main__":
    main()
