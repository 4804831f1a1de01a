"""The operators H_{i,r} and B_{i,r} on the weight-graded polynomial module.

H_{i,r} acts on each weight component as multiplication by an explicit
polynomial extracted from a rational generating series; B_{i,r} moves one
index between adjacent blocks of the symmetric partition and can be
computed three independent ways (termwise, via the generating series, or
as a pushforward given by a weighted coset sum).  A RepContext pins (n, d),
caches everything reusable, and carries the optional mutation hooks used
by the self-diagnosis suite.
"""

import math
from fractions import Fraction

from .errors import NotAConstant, ParameterMismatch
from .orbits import WeightVec, blocks_of_matrix, e_theta, parabolic_of_weight
from .poly import Poly
from .ratfunc import RatFunc
from .repspace import PElem, assert_invariance, orbit_sum_basis
from .scalars import GaussRat, I as IMAG, ONE
from .series import SeriesU, ZRatFunc, check_halving_identity, series_log, series_reciprocal_linear
from .symmetry import CosetSpace, ParabolicSubgroup, SymPartition, coset_sum, signed_value, substitute

MUTATIONS = (
    "b-drop-imaginary-unit",
    "b-flip-quarter-shift",
    "h-flip-prefactor-sign",
)


def phi_ratfunc(d, members, z):
    """prod_{m in members} (val(m) - z + hbar) / (val(m) - z) as a RatFunc."""
    hbar = Poly.hbar(d)
    out = RatFunc(Poly.one(d))
    for m in members:
        lin = signed_value(d, m) - z
        out = out * (lin + hbar)
        out = out.over_linear(lin)
    return out


class RepContext:
    """All cached state for operators at a fixed (n, d)."""

    def __init__(self, n, d, mutation=None):
        if mutation is not None and mutation not in MUTATIONS:
            raise ValueError("unknown mutation %r" % mutation)
        if n < 1 or d < 1:
            raise ValueError("need n >= 1 and d >= 1")
        self.n = n
        self.d = d
        self.N = 2 * n + 1
        self.mutation = mutation
        self._h_cache = {}
        self._op_cache = {}
        self._coset_cache = {}
        self._basis_cache = {}

    # -- index bookkeeping --------------------------------------------

    def tau(self, i):
        return self.N - i

    def cartan(self, i, j):
        if not (1 <= i <= 2 * self.n and 1 <= j <= 2 * self.n):
            raise ParameterMismatch("Cartan indices must lie in 1..%d" % (2 * self.n))
        if i == j:
            return 2
        if abs(i - j) == 1:
            return -1
        return 0

    def delta(self, i):
        return (1 if i == self.n else 0) - (1 if i == self.n + 1 else 0)

    def shift_const(self, i, flip_quarter=False):
        """The hbar multiple added to the block variables of row i."""
        num = 2 * (self.n - i) + (-1 if flip_quarter else 1)
        return Poly.hbar(self.d).scale(GaussRat(Fraction(num, 4)))

    def block_interval(self, v, i):
        return (v.bar(i - 1) + 1, v.bar(i))

    def weights(self):
        from .orbits import enum_weights
        return enum_weights(self.n, self.d)

    def basis(self, v, D):
        key = (v.entries, D)
        hit = self._basis_cache.get(key)
        if hit is None:
            hit = [PElem.from_component(v, p, check=False)
                   for p in orbit_sum_basis(v, D)]
            self._basis_cache[key] = hit
        return hit

    # -- the H side ----------------------------------------------------

    def h_coeffs(self, i, v, K):
        """Multiplication polynomials of H_{i,0..K-1} on component v."""
        if not 1 <= i <= 2 * self.n:
            raise ParameterMismatch("H index %d out of range" % i)
        key = (i, v.entries, K)
        hit = self._h_cache.get(key)
        if hit is not None:
            return hit
        d = self.d
        hbar = Poly.hbar(d)
        ci = self.shift_const(i)
        factors = []
        lo, hi = self.block_interval(v, i)
        for t in range(lo, hi + 1):
            alpha = signed_value(d, t) + ci
            fk = [Poly.one(d)]
            power = Poly.one(d)
            for _ in range(K):
                fk.append(hbar * power)
                power = power * (-alpha)
            factors.append(fk)
        lo, hi = self.block_interval(v, self.tau(i))
        for s in range(lo, hi + 1):
            beta = signed_value(d, s) - ci
            fk = [Poly.one(d)]
            power = Poly.one(d)
            for _ in range(K):
                fk.append(-(hbar * power))
                power = power * beta
            factors.append(fk)
        sign = 1 if self.mutation == "h-flip-prefactor-sign" else -1
        pre = [Poly.one(d),
               hbar.scale(GaussRat(Fraction(sign * self.delta(i), 4)))]
        pre += [Poly.zero(d)] * (K - 1)
        factors.append(pre)
        total = [Poly.one(d)] + [Poly.zero(d)] * K
        for fk in factors:
            nxt = [Poly.zero(d) for _ in range(K + 1)]
            for a in range(K + 1):
                if total[a].is_zero():
                    continue
                for b in range(K + 1 - a):
                    if fk[b].is_zero():
                        continue
                    nxt[a + b] = nxt[a + b] + total[a] * fk[b]
            total = nxt
        out = [total[r + 1].exact_div(hbar) for r in range(K)]
        group = parabolic_of_weight(v)
        for p in out:
            assert_invariance(p, group, "H(%d, -) coefficient on %s" % (i, v))
        self._h_cache[key] = out
        return out

    def h0_eigenvalue(self, i, v):
        """H_{i,0} acts on component v by this rational constant."""
        val = Fraction(v[i] - v[i + 1]) - Fraction(self.delta(i), 4)
        if self.mutation == "h-flip-prefactor-sign":
            val += Fraction(self.delta(i), 2)
        return val

    def apply_H(self, i, r, e):
        out = {}
        for w, f in e.components():
            key = ("H", i, r, w.entries, f)
            hit = self._op_cache.get(key)
            if hit is None:
                hit = self.h_coeffs(i, w, r + 1)[r] * f
                self._op_cache[key] = hit
            if not hit.is_zero():
                cur = out.get(w)
                out[w] = hit if cur is None else cur + hit
        return PElem(self.n, self.d, out, check=False)

    # -- the B side ----------------------------------------------------

    def _b_scale(self):
        return ONE if self.mutation == "b-drop-imaginary-unit" else IMAG

    def b_target(self, i, w):
        """Weight of the image component of B_i from component w, or None."""
        if not 1 <= i <= 2 * self.n:
            raise ParameterMismatch("B index %d out of range" % i)
        ent = list(w.entries)
        for pos, step in ((i, 1), (i + 1, -1), (self.N - i, -1), (self.N + 1 - i, 1)):
            ent[pos - 1] += step
        if any(x < 0 for x in ent):
            return None
        return WeightVec(self.n, ent)

    def _apply_B_component(self, i, r, w, f):
        key = ("B", i, r, w.entries, f)
        hit = self._op_cache.get(key, "miss")
        if hit != "miss":
            return hit
        v = self.b_target(i, w)
        if v is None:
            self._op_cache[key] = None
            return None
        d = self.d
        hbar = Poly.hbar(d)
        ci = self.shift_const(i)
        ci_pow = self.shift_const(
            i, flip_quarter=(self.mutation == "b-flip-quarter-shift"))
        lo, hi = self.block_interval(v, i)
        std = SymPartition.standard(v)
        total = RatFunc(Poly.zero(d))
        for j in range(lo, hi + 1):
            vj = signed_value(d, j)
            power = (-vj - ci_pow) ** r
            term = RatFunc(power)
            for s in range(lo, hi + 1):
                if s == j:
                    continue
                lin = signed_value(d, s) - vj
                term = term * (lin + hbar)
                term = term.over_linear(lin)
            moved = std.tau_shift(j, +1)
            term = term * substitute(f, moved, shape=w)
            total = total + term
        poly = total.to_poly()
        assert_invariance(poly, parabolic_of_weight(v),
                          "B(%d,%d) image on %s" % (i, r, v))
        poly = poly.scale(self._b_scale())
        result = None if poly.is_zero() else (v, poly)
        self._op_cache[key] = result
        return result

    def apply_B(self, i, r, e):
        out = {}
        for w, f in e.components():
            res = self._apply_B_component(i, r, w, f)
            if res is None:
                continue
            v, p = res
            cur = out.get(v)
            p2 = p if cur is None else cur + p
            if p2.is_zero():
                out.pop(v, None)
            else:
                out[v] = p2
        return PElem(self.n, self.d, out, check=False)

    def apply_B_series(self, i, e, K):
        """[B_{i,0} e, ..., B_{i,K-1} e] through the generating series."""
        d = self.d
        hbar = Poly.hbar(d)
        ci = self.shift_const(i)
        ci_pow = self.shift_const(
            i, flip_quarter=(self.mutation == "b-flip-quarter-shift"))
        per_weight = {}
        for w, f in e.components():
            v = self.b_target(i, w)
            if v is None:
                continue
            lo, hi = self.block_interval(v, i)
            std = SymPartition.standard(v)
            series = SeriesU.zero(d, K)
            for j in range(lo, hi + 1):
                vj = signed_value(d, j)
                weight = RatFunc(hbar)
                for s in range(lo, hi + 1):
                    if s == j:
                        continue
                    lin = signed_value(d, s) - vj
                    weight = weight * (lin + hbar)
                    weight = weight.over_linear(lin)
                moved = std.tau_shift(j, +1)
                weight = weight * substitute(f, moved, shape=w)
                series = series + series_reciprocal_linear(vj + ci_pow, K) * weight
            cur = per_weight.get(v)
            per_weight[v] = series if cur is None else cur + series
        out = []
        for r in range(K):
            comp = {}
            for v, series in per_weight.items():
                poly = series.coeff(r + 1).to_poly().exact_div(hbar)
                poly = poly.scale(self._b_scale())
                if not poly.is_zero():
                    comp[v] = poly
            out.append(PElem(self.n, self.d, comp, check=False))
        return out

    def _pushforward_space(self, i, v):
        key = (i, v.entries)
        hit = self._coset_cache.get(key)
        if hit is not None:
            return hit
        if i <= self.n:
            ent = list(v.entries)
            ent[i - 1] -= 1
            ent[self.N - i] -= 1
        else:
            ent = list(v.entries)
            ent[self.n] -= 2
        vpp = WeightVec(self.n, ent)
        A = e_theta(i, i + 1, vpp, 1)
        if A.ro() != v:
            raise AssertionError("row sums of the elementary matrix are off")
        _, WA = blocks_of_matrix(A)
        Wv = parabolic_of_weight(v)
        space = CosetSpace(WA, Wv)
        self._coset_cache[key] = space
        return space

    def apply_B_pushforward(self, i, r, e):
        """B_{i,r} computed as an Euler-class weighted coset sum (i <= n+1)."""
        if not 1 <= i <= self.n + 1:
            raise ParameterMismatch(
                "pushforward route only covers 1 <= i <= n+1, got %d" % i)
        d = self.d
        hbar = Poly.hbar(d)
        ci_pow = self.shift_const(
            i, flip_quarter=(self.mutation == "b-flip-quarter-shift"))
        quarter = Poly.hbar(d).scale(GaussRat(Fraction(1, 4)))
        out = {}
        for w, f in e.components():
            v = self.b_target(i, w)
            if v is None:
                continue
            space = self._pushforward_space(i, v)
            if i <= self.n:
                jstar = v.bar(i)
                xstar = signed_value(d, jstar)
                omegas = [signed_value(d, t) - xstar
                          for t in range(v.bar(i - 1) + 1, v.bar(i))]
            else:
                jstar = v.bar(self.n + 1)
                xstar = signed_value(d, jstar)
                anchor = signed_value(d, v.bar(self.n) + 1)
                omegas = [anchor - signed_value(d, t)
                          for t in range(v.bar(self.n) + 2, v.bar(self.n + 1) + 1)]
            power = (-xstar - ci_pow) ** r
            gamma = RatFunc(power * f)
            for om in omegas:
                gamma = gamma * (om + hbar)
                gamma = gamma.over_linear(-om)
            summed = coset_sum(space, gamma)
            poly = summed.to_poly()
            sign = -1 if (v[i] - 1) % 2 else 1
            poly = poly.scale(self._b_scale() * sign)
            if poly.is_zero():
                continue
            cur = out.get(v)
            p2 = poly if cur is None else cur + poly
            if p2.is_zero():
                out.pop(v, None)
            else:
                out[v] = p2
        return PElem(self.n, self.d, out, check=False)

    # -- derived series ------------------------------------------------

    def hhat_coeffs(self, i, v, K):
        """Coefficients of the logarithmic reparametrization of the H series."""
        d = self.d
        hbar = Poly.hbar(d)
        hs = self.h_coeffs(i, v, K)
        S = SeriesU(d, [RatFunc(Poly.one(d))]
                    + [RatFunc(hbar * h) for h in hs])
        L = series_log(S)
        ci = self.shift_const(i)
        ci_pows = [Poly.one(d)]
        for _ in range(K):
            ci_pows.append(ci_pows[-1] * ci)
        out = []
        residual = L
        for r in range(K):
            coeff = residual.coeff(r + 1).to_poly()
            if r % 2 == 0:
                coeff = -coeff
            out.append(coeff.exact_div(hbar))
            basis_coeffs = [RatFunc(Poly.zero(d)) for _ in range(K + 1)]
            for m in range(K - r):
                c = Fraction(math.comb(r + m, m))
                if (r + 1 + m) % 2:
                    c = -c
                basis_coeffs[r + 1 + m] = RatFunc(ci_pows[m].scale(GaussRat(c)))
            E = SeriesU(d, basis_coeffs)
            residual = residual - E * RatFunc(hbar * out[-1])
        for k in range(1, K + 1):
            if not residual.coeff(k).is_zero():
                raise AssertionError("triangular re-expansion left a residue")
        return out

    def hhat(self, i, k, v):
        return self.hhat_coeffs(i, v, k + 1)[k]

    def hhat_top_expected(self, i, k, v):
        """Top x-degree, hbar-free part of hhat(i, k, v) in closed form."""
        d = self.d
        out = Poly.zero(d)
        lo, hi = self.block_interval(v, i)
        for j in range(lo, hi + 1):
            out = out - signed_value(d, j) ** k
        if i <= self.n - 1:
            lo, hi = self.block_interval(v, i + 1)
            for j in range(lo, hi + 1):
                out = out + signed_value(d, j) ** k
        elif i == self.n:
            for j in range(v.bar(self.n) + 1, self.d + 1):
                y = signed_value(d, j)
                out = out + y ** k + (-y) ** k
        else:
            raise ParameterMismatch("closed form recorded for 1 <= i <= n only")
        return out

    # -- halving and negative-part identities ---------------------------

    def _h_series_data(self, i, v):
        """Poles and numerator roots of the rational H series on v."""
        d = self.d
        ci = self.shift_const(i)
        alphas = []
        lo, hi = self.block_interval(v, i)
        for t in range(lo, hi + 1):
            alphas.append(signed_value(d, t) + ci)
        betas = []
        lo, hi = self.block_interval(v, self.tau(i))
        for s in range(lo, hi + 1):
            betas.append(signed_value(d, s) - ci)
        return alphas, betas

    def halving_zratfunc(self, i, v):
        """z * H_{i,v}(z) as an explicit rational function of z."""
        d = self.d
        hbar = Poly.hbar(d)
        alphas, betas = self._h_series_data(i, v)
        num = [Poly.one(d)]

        def mul_linear(coeffs, w):
            # multiply the z-polynomial by (z + w)
            out = [Poly.zero(d) for _ in range(len(coeffs) + 1)]
            for k, c in enumerate(coeffs):
                out[k + 1] = out[k + 1] + c
                out[k] = out[k] + w * c
            return out

        num = mul_linear(num, hbar.scale(GaussRat(Fraction(-self.delta(i), 4))))
        for a in alphas:
            num = mul_linear(num, a + hbar)
        for b in betas:
            num = mul_linear(num, -(b + hbar))
        poles = [-a for a in alphas] + list(betas)
        return ZRatFunc(num, poles)

    def check_halving(self, i, v, K):
        """The two-variable halving identity for z*H_{i,v}; returns True."""
        p = self.halving_zratfunc(i, v)
        const = check_halving_identity(p, K)
        h0 = self.h_coeffs(i, v, 1)[0]
        expect = RatFunc(Poly.hbar(self.d) * h0)
        if const != expect:
            raise AssertionError(
                "halving constant %s != hbar*h0 %s on %s" % (const, expect, v))
        return True

    def negative_part_lhs(self, i, v, K, with_u):
        """Series of (H)^- or (u*H)^- straight from the H coefficients."""
        d = self.d
        hbar = Poly.hbar(d)
        hs = self.h_coeffs(i, v, K + (1 if with_u else 0))
        coeffs = [RatFunc(Poly.zero(d))]
        for k in range(1, K + 1):
            idx = k if with_u else k - 1
            coeffs.append(RatFunc(hbar * hs[idx]))
        return SeriesU(d, coeffs)

    def negative_part_rhs(self, i, v, K, with_u):
        """The same series from the residue expansion of the rational form."""
        d = self.d
        hbar = Poly.hbar(d)
        ci = self.shift_const(i)
        shift = ci + Poly.hbar(d).scale(GaussRat(Fraction(self.delta(i), 4)))
        ti = self.tau(i)
        lo_i, hi_i = self.block_interval(v, i)
        lo_t, hi_t = self.block_interval(v, ti)
        block_i = list(range(lo_i, hi_i + 1))
        block_t = list(range(lo_t, hi_t + 1))
        total = SeriesU.zero(d, K)
        for t in block_i:
            xt = signed_value(d, t)
            rest = [s for s in block_i if s != t]
            res = phi_ratfunc(d, rest, xt) * phi_ratfunc(d, block_t, -xt)
            if with_u:
                res = res * (-(xt + shift)) * hbar
            else:
                res = res * hbar
            total = total + series_reciprocal_linear(xt + ci, K) * res
        for s in block_t:
            xs = signed_value(d, s)
            rest = [t for t in block_t if t != s]
            res = phi_ratfunc(d, block_i, -xs) * phi_ratfunc(d, rest, xs)
            if with_u:
                res = res * (-(xs - shift)) * hbar
            else:
                res = res * (-hbar)
            total = total + series_reciprocal_linear(-xs + ci, K) * res
        return total

    def check_negative_part(self, i, v, K):
        """Both negative-part identities; the plain one needs delta = 0."""
        if self.delta(i) == 0:
            lhs = self.negative_part_lhs(i, v, K, with_u=False)
            rhs = self.negative_part_rhs(i, v, K, with_u=False)
            if lhs != rhs:
                raise AssertionError(
                    "negative part of H mismatches on i=%d, %s" % (i, v))
        lhs = self.negative_part_lhs(i, v, K, with_u=True)
        rhs = self.negative_part_rhs(i, v, K, with_u=True)
        if lhs != rhs:
            raise AssertionError(
                "negative part of u*H mismatches on i=%d, %s" % (i, v))
        return True

    # -- projections ----------------------------------------------------

    def idempotent(self, v, e):
        """Project e onto its weight-v part using only H_{i,0} arithmetic."""
        out = e
        for i in range(1, self.n + 1):
            target = v[i] - v[i + 1]
            quarter = Fraction(1, 4) if i == self.n else Fraction(0)
            for m in range(-2 * self.d, 2 * self.d + 1):
                if m == target:
                    continue
                shifted = self.apply_H(i, 0, out) + out.scale(quarter - m)
                out = shifted.scale(Fraction(1, target - m))
        return out


def lemma53_matrix(n):
    """The integer matrix whose determinant controls the degree pairing."""
    size = n + 1
    M = [[Fraction(0)] * size for _ in range(size)]
    for r in range(1, n):
        M[r - 1][r - 1] = Fraction(-1)
        M[r - 1][r] = Fraction(1)
    M[n - 1][n - 1] = Fraction(-1)
    M[n - 1][n] = Fraction(2)
    for c in range(size):
        M[n][c] = Fraction(1)
    return M


def lemma53_det(n):
    """Exact determinant of the pairing matrix; nonzero for every n >= 1."""
    M = lemma53_matrix(n)
    size = n + 1
    det = Fraction(1)
    for col in range(size):
        pivot = None
        for row in range(col, size):
            if M[row][col] != 0:
                pivot = row
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            M[col], M[pivot] = M[pivot], M[col]
            det = -det
        det *= M[col][col]
        inv = 1 / M[col][col]
        for row in range(col + 1, size):
            factor = M[row][col] * inv
            if factor == 0:
                continue
            M[row] = [a - factor * b for a, b in zip(M[row], M[col])]
    return det


def lemma26_constant(a, d, offset=0):
    """The constant value of the telescoping coset sum; equals (-1)^a (a+1)."""
    if a < 0 or offset < 0:
        raise ValueError("need a >= 0 and offset >= 0")
    if a + offset + 1 > d:
        raise ValueError("need a + offset + 1 <= d, got a=%d offset=%d d=%d"
                         % (a, offset, d))
    t = d - offset - a
    top = d - offset
    W2 = ParabolicSubgroup(d, [(t, top)])
    W1 = ParabolicSubgroup(d, [(t + 1, top)])
    hbar = Poly.hbar(d)
    xt = Poly.var(d, t)
    g = RatFunc(Poly.one(d))
    for j in range(t + 1, top + 1):
        xj = Poly.var(d, j)
        g = g * (hbar - xj + xt)
        g = g.over_linear(xj - xt)
    total = coset_sum(CosetSpace(W1, W2), g)
    p = total.to_poly()
    if not p.is_constant():
        raise NotAConstant("coset sum is %s" % p)
    return p.constant_value()
