"""Machine verification of the defining relations on the polynomial module.

Each relation is evaluated as an operator identity: the defect (left side
minus right side) is applied to every vector of an invariant monomial basis
of bounded degree, over every admissible weight, and must vanish exactly.
Failures report the first offending basis vector in degree order.
"""

import json
import multiprocessing
import os
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .errors import ParameterMismatch
from .operators import RepContext

RELATION_IDS = (
    "HH",
    "HTAU0",
    "HTAU-R",
    "H0B",
    "H1B",
    "HRB2",
    "BB-MIXED",
    "SERRE-CIJ0",
    "SERRE-CIJ1",
    "SERRE-TAU",
    "SERRE-TAU-REDUCED",
)


def _require(cond, message):
    if not cond:
        raise ParameterMismatch(message)


def _check_range(ctx, params, *names):
    for name in names:
        val = params[name]
        if name in ("i", "j"):
            _require(1 <= val <= 2 * ctx.n,
                     "%s = %d outside 1..%d" % (name, val, 2 * ctx.n))
        else:
            _require(val >= 0, "%s = %d must be nonnegative" % (name, val))


def _comm(X, Y, e):
    return X(Y(e)) - Y(X(e))


def _acomm(X, Y, e):
    return X(Y(e)) + Y(X(e))


def _comm2(X, Y, Z, e):
    """[X, [Y, Z]] applied to e."""

    def inner(g):
        return Y(Z(g)) - Z(Y(g))

    return X(inner(e)) - inner(X(e))


def build_defect(ctx, relation, params):
    """Return a callable e -> (LHS - RHS) e for the tagged relation."""
    n = ctx.n

    def H(i, r):
        return lambda e: ctx.apply_H(i, r, e)

    def B(i, r):
        return lambda e: ctx.apply_B(i, r, e)

    if relation == "HH":
        _check_range(ctx, params, "i", "j", "r", "s")
        i, j, r, s = params["i"], params["j"], params["r"], params["s"]
        return lambda e: _comm(H(i, r), H(j, s), e)

    if relation == "HTAU0":
        _check_range(ctx, params, "i")
        i = params["i"]
        ti = ctx.tau(i)
        return lambda e: ctx.apply_H(ti, 0, e) + ctx.apply_H(i, 0, e)

    if relation == "HTAU-R":
        _check_range(ctx, params, "i", "r")
        i, r = params["i"], params["r"]
        ti = ctx.tau(i)
        sign = Fraction((-1) ** (r + 1))
        return lambda e: ctx.apply_H(ti, r, e) - ctx.apply_H(i, r, e).scale(sign)

    if relation == "H0B":
        _check_range(ctx, params, "i", "j", "r")
        i, j, r = params["i"], params["j"], params["r"]
        gap = Fraction(ctx.cartan(i, j) - ctx.cartan(ctx.tau(i), j))
        return lambda e: (_comm(H(i, 0), B(j, r), e)
                          - ctx.apply_B(j, r, e).scale(gap))

    if relation == "H1B":
        _check_range(ctx, params, "i", "j", "r")
        i, j, r = params["i"], params["j"], params["r"]
        csum = Fraction(ctx.cartan(i, j) + ctx.cartan(ctx.tau(i), j))
        cdiff = Fraction(ctx.cartan(i, j) - ctx.cartan(ctx.tau(i), j))

        def defect(e):
            out = _comm(H(i, 1), B(j, r), e)
            out = out - ctx.apply_B(j, r + 1, e).scale(csum)
            out = out - _acomm(H(i, 0), B(j, r), e).mul_hbar().scale(cdiff / 2)
            return out

        return defect

    if relation == "HRB2":
        _check_range(ctx, params, "i", "j", "r", "s")
        i, j, r, s = params["i"], params["j"], params["r"], params["s"]
        cij = Fraction(ctx.cartan(i, j))
        ctij = Fraction(ctx.cartan(ctx.tau(i), j))

        def defect(e):
            out = _comm(H(i, r + 2), B(j, s), e)
            out = out - _comm(H(i, r), B(j, s + 2), e)
            out = out - _acomm(H(i, r + 1), B(j, s), e).mul_hbar().scale(
                (cij - ctij) / 2)
            out = out - _acomm(H(i, r), B(j, s + 1), e).mul_hbar().scale(
                (cij + ctij) / 2)
            out = out - _comm(H(i, r), B(j, s), e).mul_hbar(2).scale(
                cij * ctij / 4)
            return out

        return defect

    if relation == "BB-MIXED":
        _check_range(ctx, params, "i", "j", "r", "s")
        i, j, r, s = params["i"], params["j"], params["r"], params["s"]
        cij = Fraction(ctx.cartan(i, j))
        dtau = 1 if ctx.tau(i) == j else 0
        hterm = Fraction(2 * dtau * (-1) ** r)

        def defect(e):
            out = _comm(B(i, r + 1), B(j, s), e)
            out = out - _comm(B(i, r), B(j, s + 1), e)
            out = out - _acomm(B(i, r), B(j, s), e).mul_hbar().scale(cij / 2)
            if hterm:
                out = out + ctx.apply_H(j, r + s + 1, e).scale(hterm)
            return out

        return defect

    if relation == "SERRE-CIJ0":
        _check_range(ctx, params, "i", "j", "r", "s")
        i, j, r, s = params["i"], params["j"], params["r"], params["s"]
        _require(ctx.cartan(i, j) == 0,
                 "needs c_ij = 0, got c_%d%d = %d" % (i, j, ctx.cartan(i, j)))
        dtau = 1 if ctx.tau(i) == j else 0
        hterm = Fraction(dtau * (-1) ** r)

        def defect(e):
            out = _comm(B(i, r), B(j, s), e)
            if hterm:
                out = out - ctx.apply_H(j, r + s, e).scale(hterm)
            return out

        return defect

    if relation == "SERRE-CIJ1":
        _check_range(ctx, params, "i", "j", "k1", "k2", "r")
        i, j = params["i"], params["j"]
        k1, k2, r = params["k1"], params["k2"], params["r"]
        _require(ctx.cartan(i, j) == -1,
                 "needs c_ij = -1, got c_%d%d = %d" % (i, j, ctx.cartan(i, j)))
        _require(ctx.tau(i) != j, "the pair (i, tau(i)) has its own relation")

        def defect(e):
            out = _comm2(B(i, k1), B(i, k2), B(j, r), e)
            out = out + _comm2(B(i, k2), B(i, k1), B(j, r), e)
            return out

        return defect

    if relation == "SERRE-TAU":
        _check_range(ctx, params, "i", "k1", "k2", "r")
        i, k1, k2, r = params["i"], params["k1"], params["k2"], params["r"]
        _require(i in (n, n + 1), "needs i in {n, n+1}, got %d" % i)
        j = ctx.tau(i)

        def defect(e):
            out = _comm2(B(i, k1), B(i, k2), B(j, r), e)
            out = out + _comm2(B(i, k2), B(i, k1), B(j, r), e)
            for a, b in ((k1, k2), (k2, k1)):
                sign = (-1) ** a
                for p in range(a + r + 1):
                    coeff = Fraction(4 * sign, 3 ** (p + 1))
                    out = out - _comm(B(i, b + p), H(j, a + r - p), e).scale(coeff)
            return out

        return defect

    if relation == "SERRE-TAU-REDUCED":
        _check_range(ctx, params, "i")
        i = params["i"]
        _require(i in (n, n + 1), "needs i in {n, n+1}, got %d" % i)
        j = ctx.tau(i)

        def defect(e):
            out = _comm2(B(i, 0), B(i, 0), B(j, 0), e)
            return out - ctx.apply_B(i, 0, e).scale(4)

        return defect

    raise ParameterMismatch("unknown relation id %r" % relation)


def enumerate_tasks(ctx, rmax, serre_max):
    """Deterministic list of (relation, params) covering the whole suite."""
    n2 = 2 * ctx.n
    tasks = []
    for i in range(1, n2 + 1):
        for j in range(i, n2 + 1):
            for r in range(rmax + 1):
                s_start = r if i == j else 0
                for s in range(s_start, rmax + 1):
                    tasks.append(("HH", {"i": i, "j": j, "r": r, "s": s}))
    for i in range(1, n2 + 1):
        tasks.append(("HTAU0", {"i": i}))
    for i in range(1, n2 + 1):
        for r in range(rmax + 1):
            tasks.append(("HTAU-R", {"i": i, "r": r}))
    for rel in ("H0B", "H1B"):
        for i in range(1, n2 + 1):
            for j in range(1, n2 + 1):
                for r in range(rmax + 1):
                    tasks.append((rel, {"i": i, "j": j, "r": r}))
    for rel in ("HRB2", "BB-MIXED"):
        for i in range(1, n2 + 1):
            for j in range(1, n2 + 1):
                for r in range(rmax + 1):
                    for s in range(rmax + 1):
                        tasks.append((rel, {"i": i, "j": j, "r": r, "s": s}))
    for i in range(1, n2 + 1):
        for j in range(1, n2 + 1):
            if ctx.cartan(i, j) != 0:
                continue
            for r in range(rmax + 1):
                for s in range(rmax + 1):
                    tasks.append(("SERRE-CIJ0", {"i": i, "j": j, "r": r, "s": s}))
    for i in range(1, n2 + 1):
        for j in range(1, n2 + 1):
            if ctx.cartan(i, j) != -1 or ctx.tau(i) == j:
                continue
            for k1 in range(serre_max + 1):
                for k2 in range(k1, serre_max + 1):
                    for r in range(serre_max + 1):
                        tasks.append(("SERRE-CIJ1",
                                      {"i": i, "j": j, "k1": k1, "k2": k2, "r": r}))
    for i in (ctx.n, ctx.n + 1):
        for k1 in range(serre_max + 1):
            for k2 in range(k1, serre_max + 1):
                for r in range(serre_max + 1):
                    tasks.append(("SERRE-TAU",
                                  {"i": i, "k1": k1, "k2": k2, "r": r}))
    for i in (ctx.n, ctx.n + 1):
        tasks.append(("SERRE-TAU-REDUCED", {"i": i}))
    return tasks


class TaskResult:
    __slots__ = ("relation", "params", "status", "witness")

    def __init__(self, relation, params, status, witness=None):
        self.relation = relation
        self.params = params
        self.status = status
        self.witness = witness

    def json_entry(self):
        return {"relation": self.relation,
                "params": dict(self.params),
                "status": self.status}

    def __repr__(self):
        tail = "" if self.witness is None else " witness=%s" % (self.witness,)
        return "<%s %s %s%s>" % (self.relation, self.params, self.status, tail)


def verify_task(ctx, relation, params, D):
    """Evaluate one relation on every basis vector; first failure wins."""
    defect = build_defect(ctx, relation, params)
    for v in ctx.weights():
        for e in ctx.basis(v, D):
            diff = defect(e)
            if not diff.is_zero():
                witness = {"component": list(v.entries),
                           "poly": str(e.get(v))}
                return TaskResult(relation, params, "fail", witness)
    return TaskResult(relation, params, "pass")


_worker_ctx = None


def _worker_init(n, d, mutation):
    global _worker_ctx
    _worker_ctx = RepContext(n, d, mutation=mutation)


def _worker_run(args):
    relation, params, D = args
    return verify_task(_worker_ctx, relation, params, D)


def _thread_cap():
    return max(1, int(os.environ.get("IYANG_THREADS", "1")))


def run_suite(n, d, rmax, D, serre_max=2, mutation=None, relations=None,
              progress=None):
    """Run the relation suite; returns (report dict, TaskResult list).

    Tasks are independent; IYANG_THREADS > 1 spreads them over worker
    processes.  Results are reduced in task order either way, so the
    report does not depend on the degree of parallelism.
    """
    ctx = RepContext(n, d, mutation=mutation)
    tasks = enumerate_tasks(ctx, rmax, serre_max)
    if relations is not None:
        wanted = set(relations)
        unknown = wanted - set(RELATION_IDS)
        if unknown:
            raise ParameterMismatch("unknown relation ids: %s"
                                    % ", ".join(sorted(unknown)))
        tasks = [t for t in tasks if t[0] in wanted]
    results = []
    workers = _thread_cap()
    if workers > 1 and len(tasks) > 1:
        mp_ctx = multiprocessing.get_context("fork")
        with ProcessPoolExecutor(max_workers=workers, mp_context=mp_ctx,
                                 initializer=_worker_init,
                                 initargs=(n, d, mutation)) as pool:
            payload = [(rel, params, D) for rel, params in tasks]
            # contiguous chunks keep tasks of one relation family on one
            # worker, so its operator caches stay warm
            chunk = max(1, len(payload) // (4 * workers))
            for idx, res in enumerate(pool.map(_worker_run, payload,
                                               chunksize=chunk)):
                results.append(res)
                if progress is not None:
                    progress(idx + 1, len(tasks), res)
    else:
        for idx, (relation, params) in enumerate(tasks):
            results.append(verify_task(ctx, relation, params, D))
            if progress is not None:
                progress(idx + 1, len(tasks), results[-1])
    passed = sum(1 for r in results if r.status == "pass")
    failed = len(results) - passed
    report = {
        "suite": {"n": n, "d": d, "rmax": rmax, "deg": D},
        "results": [r.json_entry() for r in results],
        "summary": {"pass": passed, "fail": failed},
    }
    return report, results


def report_to_json(report):
    """Canonical byte-stable serialization of a suite report."""
    return json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n"


def check_h_parity(ctx, K=5):
    """h_{tau(i)}(u) = h_i(-u), coefficientwise on every component."""
    for i in range(1, ctx.n + 1):
        ti = ctx.tau(i)
        for v in ctx.weights():
            hs = ctx.h_coeffs(i, v, K)
            ht = ctx.h_coeffs(ti, v, K)
            for r in range(K):
                want = hs[r].scale(Fraction((-1) ** (r + 1)))
                if ht[r] != want:
                    raise AssertionError(
                        "parity fails at i=%d r=%d on %s" % (i, r, v))
    return True


def check_bb_series(ctx, K=5, D=3):
    """The two-variable series identity for pairs with c_ij = 0.

    Coefficientwise it says the commutators C_{a,b} = [B_{i,a}, B_{j,b}]
    telescope: C_{a+1,b} + C_{a,b+1} = 0, with boundary values given by H
    coefficients when j = tau(i) and zero otherwise.
    """
    checked = 0
    for i in range(1, 2 * ctx.n + 1):
        for j in range(1, 2 * ctx.n + 1):
            if ctx.cartan(i, j) != 0:
                continue
            dtau = 1 if ctx.tau(i) == j else 0
            for v in ctx.weights():
                for e in ctx.basis(v, D):
                    cache = {}

                    def C(a, b, e=e, i=i, j=j, cache=cache):
                        key = (a, b)
                        if key not in cache:
                            cache[key] = (
                                ctx.apply_B(i, a, ctx.apply_B(j, b, e))
                                - ctx.apply_B(j, b, ctx.apply_B(i, a, e)))
                        return cache[key]

                    for a in range(K - 1):
                        for b in range(K - 1):
                            if not (C(a + 1, b) + C(a, b + 1)).is_zero():
                                raise AssertionError(
                                    "telescoping fails at (%d,%d) a=%d b=%d on %s"
                                    % (i, j, a, b, v))
                    for b in range(K):
                        want = ctx.apply_H(j, b, e).scale(Fraction(dtau))
                        if C(0, b) != want:
                            raise AssertionError(
                                "boundary C(0,%d) fails at (%d,%d) on %s"
                                % (b, i, j, v))
                    for a in range(K):
                        want = ctx.apply_H(i, a, e).scale(Fraction(-dtau))
                        if C(a, 0) != want:
                            raise AssertionError(
                                "boundary C(%d,0) fails at (%d,%d) on %s"
                                % (a, i, j, v))
                    checked += 1
    return checked
