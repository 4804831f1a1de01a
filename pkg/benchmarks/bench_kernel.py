"""Benchmark the pure-Python kernel against the compiled one.

Times the raw term operations (add, mul, exact division, signed permutation)
on random sparse polynomials, then times a small end-to-end relation suite
under each backend via subprocesses with IYANG_KERNEL set.

Run from the repository root:

    python3 benchmarks/bench_kernel.py
"""

import os
import random
import subprocess
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from iyang._kernel import _poly_py

try:
    from iyang._kernel import _poly_cy
except ImportError:
    _poly_cy = None


def random_terms(rng, nvars, nterms, max_exp=4, max_coef=30):
    out = {}
    while len(out) < nterms:
        exps = tuple(rng.randrange(max_exp) for _ in range(nvars + 1))
        a = rng.randrange(-max_coef, max_coef + 1)
        b = rng.randrange(-max_coef, max_coef + 1)
        c = _poly_py.norm3(a, b, rng.randrange(1, 7))
        if c is not None:
            out[exps] = c
    return out


def bench(label, fn, repeats):
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        if best is None or dt < best:
            best = dt
    return best


def bench_ops(mod, polys, repeats=5):
    (p1, p2), (q1, q2), perm, flip = polys
    prod = mod.terms_mul(q1, q2)
    results = {}
    results["add"] = bench("add", lambda: mod.terms_add(p1, p2), repeats)
    results["mul"] = bench("mul", lambda: mod.terms_mul(p1, p2), repeats)
    results["exact_div"] = bench("div", lambda: mod.terms_exact_div(prod, q1), repeats)
    results["permute"] = bench(
        "perm", lambda: mod.terms_signed_permute(p1, perm, flip), repeats
    )
    return results


def bench_suite(backend):
    env = dict(os.environ, IYANG_KERNEL=backend)
    t0 = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "iyang.cli", "verify", "--n", "1", "--d", "2",
         "--rmax", "2", "--deg", "2"],
        env=env,
        stdout=subprocess.DEVNULL,
        stderr=subprocess.DEVNULL,
    )
    dt = time.perf_counter() - t0
    return dt, proc.returncode


def main():
    rng = random.Random(20240817)
    nvars = 6
    p1 = random_terms(rng, nvars, 400)
    p2 = random_terms(rng, nvars, 400)
    q1 = random_terms(rng, nvars, 40)
    q2 = random_terms(rng, nvars, 40)
    perm = list(range(nvars))
    rng.shuffle(perm)
    flip = [rng.randrange(2) for _ in range(nvars)]
    polys = ((p1, p2), (q1, q2), perm, flip)

    backends = [("python", _poly_py)]
    if _poly_cy is not None:
        backends.append(("cython", _poly_cy))
    else:
        print("compiled kernel not built; benchmarking pure Python only")

    # Cross-check the backends agree before timing anything.
    if _poly_cy is not None:
        assert _poly_py.terms_mul(p1, p2) == _poly_cy.terms_mul(p1, p2)
        prod = _poly_py.terms_mul(q1, q2)
        assert _poly_py.terms_exact_div(prod, q1) == _poly_cy.terms_exact_div(prod, q1)
        assert _poly_py.terms_signed_permute(p1, perm, flip) == \
            _poly_cy.terms_signed_permute(p1, perm, flip)
        print("backends agree on random inputs")

    print()
    print(f"raw term ops ({nvars} vars; 400-term operands, 40-term divisor)")
    header = f"{'op':<12}" + "".join(f"{name:>12}" for name, _ in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    rows = {}
    for name, mod in backends:
        rows[name] = bench_ops(mod, polys)
    for op in ["add", "mul", "exact_div", "permute"]:
        line = f"{op:<12}"
        for name, _ in backends:
            line += f"{rows[name][op] * 1e3:>10.2f}ms"
        if len(backends) == 2:
            ratio = rows["python"][op] / rows["cython"][op]
            line += f"{ratio:>9.2f}x"
        print(line)

    print()
    print("end-to-end: verify --n 1 --d 2 --rmax 2 --deg 2 (subprocess)")
    for name, _ in backends:
        key = "py" if name == "python" else "c"
        dt, rc = bench_suite(key)
        status = "ok" if rc == 0 else f"exit {rc}"
        print(f"  {name:<8} {dt:>7.2f}s  ({status})")


if __name__ == "__main__":
    main()
