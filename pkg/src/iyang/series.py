"""Truncated formal series in u^{-1} and partial-fraction truncation.

A SeriesU holds exact coefficients c_0..c_K of u^0, u^{-1}, .., u^{-K}; all
arithmetic truncates at the smaller order of its operands.  ZRatFunc models a
rational function of one distinguished variable z over the polynomial ring in
x_1..x_d and hbar, with simple linear poles kept as factored data; its
negative part (the sum of residue terms) is computed exactly.
"""

import math
from fractions import Fraction

from .errors import BadConstantTerm, RepeatedPole
from .poly import Poly
from .ratfunc import RatFunc
from .scalars import GaussRat


class SeriesU:
    """Exact truncated series sum_{k=0..K} c_k u^{-k} with RatFunc coefficients."""

    __slots__ = ("c", "order", "nvars")

    def __init__(self, nvars, coeffs):
        if not coeffs:
            raise ValueError("a series needs at least its constant term")
        self.nvars = nvars
        self.c = list(coeffs)
        self.order = len(self.c) - 1

    # -- constructors -------------------------------------------------

    @staticmethod
    def const(nvars, K, value):
        """Constant series; value may be scalar, Poly, or RatFunc."""
        zero = RatFunc(Poly.zero(nvars))
        head = _as_ratfunc(nvars, value)
        return SeriesU(nvars, [head] + [zero] * K)

    @staticmethod
    def zero(nvars, K):
        return SeriesU.const(nvars, K, 0)

    @staticmethod
    def one(nvars, K):
        return SeriesU.const(nvars, K, 1)

    @property
    def const_term(self):
        return self.c[0]

    def coeff(self, k):
        """Coefficient of u^{-k}; k must not exceed the truncation order."""
        if not 0 <= k <= self.order:
            raise ValueError("coefficient u^-%d beyond truncation order %d" % (k, self.order))
        return self.c[k]

    # -- arithmetic ---------------------------------------------------

    def _zeroc(self):
        return RatFunc(Poly.zero(self.nvars))

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussRat, Poly, RatFunc)):
            other = SeriesU.const(self.nvars, self.order, other)
        if not isinstance(other, SeriesU):
            return NotImplemented
        K = min(self.order, other.order)
        return SeriesU(self.nvars, [self.c[k] + other.c[k] for k in range(K + 1)])

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussRat, Poly, RatFunc)):
            other = SeriesU.const(self.nvars, self.order, other)
        if not isinstance(other, SeriesU):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return SeriesU(self.nvars, [-ck for ck in self.c])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRat, Poly, RatFunc)):
            scalar = _as_ratfunc(self.nvars, other)
            return SeriesU(self.nvars, [ck * scalar for ck in self.c])
        if not isinstance(other, SeriesU):
            return NotImplemented
        K = min(self.order, other.order)
        out = []
        for k in range(K + 1):
            acc = self._zeroc()
            for a in range(k + 1):
                if not self.c[a].is_zero() and not other.c[k - a].is_zero():
                    acc = acc + self.c[a] * other.c[k - a]
            out.append(acc)
        return SeriesU(self.nvars, out)

    __rmul__ = __mul__

    def shift_up(self):
        """Multiply by u; requires a zero constant term (no positive powers)."""
        if not self.c[0].is_zero():
            raise ValueError("cannot multiply by u: nonzero constant term")
        return SeriesU(self.nvars, self.c[1:] + [self._zeroc()])

    def shift_down(self):
        """Multiply by u^{-1} (the last coefficient falls off the truncation)."""
        return SeriesU(self.nvars, [self._zeroc()] + self.c[:-1])

    def truncate(self, K):
        if K > self.order:
            raise ValueError("cannot extend a truncated series")
        return SeriesU(self.nvars, self.c[: K + 1])

    def drop_const(self):
        """The strictly negative part: same coefficients with c_0 zeroed."""
        return SeriesU(self.nvars, [self._zeroc()] + self.c[1:])

    # -- predicates ---------------------------------------------------

    def is_zero(self):
        return all(ck.is_zero() for ck in self.c)

    def __eq__(self, other):
        if not isinstance(other, SeriesU):
            return NotImplemented
        K = min(self.order, other.order)
        return all(self.c[k] == other.c[k] for k in range(K + 1))

    def __repr__(self):
        parts = []
        for k, ck in enumerate(self.c):
            if not ck.is_zero():
                parts.append("(%s)u^-%d" % (ck, k))
        return "SeriesU[%s]" % (" + ".join(parts) or "0")


def _as_ratfunc(nvars, value):
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, Poly):
        return RatFunc(value)
    return RatFunc(Poly.const(nvars, value))


def series_reciprocal_linear(p, K):
    """The expansion 1/(u+p) = sum_{k>=0} (-p)^k u^{-k-1}, truncated at K."""
    nvars = p.nvars
    zero = RatFunc(Poly.zero(nvars))
    coeffs = [zero]
    power = Poly.one(nvars)
    for _ in range(K):
        coeffs.append(RatFunc(power))
        power = power * (-p)
    return SeriesU(nvars, coeffs)


def series_log(S):
    """log of a series with constant term 1."""
    if not S.c[0] == RatFunc(Poly.one(S.nvars)):
        raise BadConstantTerm("series_log needs constant term 1, got %s" % S.c[0])
    T = S - 1
    out = SeriesU.zero(S.nvars, S.order)
    power = SeriesU.one(S.nvars, S.order)
    for j in range(1, S.order + 1):
        power = power * T
        if power.is_zero():
            break
        out = out + power * GaussRat(Fraction((-1) ** (j + 1), j))
    return out


def series_exp(S):
    """exp of a series with constant term 0."""
    if not S.c[0].is_zero():
        raise BadConstantTerm("series_exp needs constant term 0, got %s" % S.c[0])
    out = SeriesU.one(S.nvars, S.order)
    power = SeriesU.one(S.nvars, S.order)
    for j in range(1, S.order + 1):
        power = power * S
        if power.is_zero():
            break
        out = out + power * GaussRat(Fraction(1, math.factorial(j)))
    return out


class ZRatFunc:
    """q(z) / prod_i (z - z_i): z-polynomial numerator over simple linear poles.

    ``num`` lists the z-coefficients q_0..q_m as Poly values; ``poles`` lists
    the pole locations z_i as Poly values (linear forms in x and hbar).
    """

    __slots__ = ("num", "poles", "nvars")

    def __init__(self, num, poles):
        if not num:
            raise ValueError("numerator must have at least one coefficient")
        self.num = list(num)
        self.poles = list(poles)
        self.nvars = self.num[0].nvars

    def over_z(self):
        """The function p(z)/z (one extra pole at z = 0)."""
        return ZRatFunc(self.num, self.poles + [Poly.zero(self.nvars)])

    def compose_neg(self):
        """The function p(-z)."""
        num = [(-1) ** k * q for k, q in enumerate(self.num)]
        sign = (-1) ** len(self.poles)
        num = [sign * q for q in num]
        poles = [-z for z in self.poles]
        return ZRatFunc(num, poles)

    def _check_distinct(self):
        for a in range(len(self.poles)):
            for b in range(a + 1, len(self.poles)):
                if (self.poles[a] - self.poles[b]).is_zero():
                    raise RepeatedPole(
                        "poles %s and %s coincide" % (self.poles[a], self.poles[b])
                    )

    def residues(self):
        """[(residue, pole)] with residue = q(z_i)/prod_{j!=i}(z_i-z_j)."""
        self._check_distinct()
        out = []
        for i, zi in enumerate(self.poles):
            qv = Poly.zero(self.nvars)
            power = Poly.one(self.nvars)
            for qk in self.num:
                qv = qv + qk * power
                power = power * zi
            res = RatFunc(qv)
            for j, zj in enumerate(self.poles):
                if j != i:
                    res = res.over_linear(zi - zj)
            out.append((res, zi))
        return out

    def series(self, K):
        """Expansion in z^{-1} down to z^{-K}; needs deg(q) <= number of poles."""
        m = len(self.poles)
        if len(self.num) - 1 > m:
            raise ValueError("numerator degree exceeds pole count; has positive powers")
        geom = SeriesU.one(self.nvars, K)
        for zi in self.poles:
            geom = geom * series_reciprocal_linear(-zi, K)
        out = SeriesU.zero(self.nvars, K)
        for k, qk in enumerate(self.num):
            shifted = geom
            for _ in range(k):
                shifted = shifted.shift_up()
            out = out + shifted * qk
        return out


def truncate_negative(p):
    """The negative part (p(z))° as residue data [(residue, pole)].

    The returned pairs represent sum_i residue_i/(z - pole_i); with simple
    poles this agrees with coefficientwise truncation of the z^{-1}-expansion.
    """
    return p.residues()


def partial_fraction_series(pairs, nvars, K):
    """Expand sum_i res_i/(z - z_i) as a SeriesU in z^{-1}."""
    out = SeriesU.zero(nvars, K)
    for res, zi in pairs:
        out = out + series_reciprocal_linear(-zi, K) * res
    return out


def negative_part_series(p, K):
    """(p(z))° as a SeriesU, via residues."""
    return partial_fraction_series(p.residues(), p.nvars, K)


def check_halving_identity(p, K):
    """Check u(p~(u))° + v(p~(-v))° = (p(u))° - (p(-v))° at truncation K.

    Split by variable: U := u(p~(u))° - (p(u))° must be a constant series,
    V := v(p~(-v))° + (p(-v))° must be the negated constant.  Returns the
    constant on success; raises AssertionError on failure.
    """
    pt = p.over_z()
    pn = p.compose_neg()
    ptn = pt.compose_neg()

    U = negative_part_series(pt, K + 1).shift_up() - negative_part_series(p, K)
    V = negative_part_series(ptn, K + 1).shift_up() + negative_part_series(pn, K)
    for k in range(1, min(U.order, K) + 1):
        if not U.coeff(k).is_zero():
            raise AssertionError("u-side not constant at u^-%d: %s" % (k, U.coeff(k)))
        if not V.coeff(k).is_zero():
            raise AssertionError("v-side not constant at v^-%d: %s" % (k, V.coeff(k)))
    if not (U.const_term + V.const_term).is_zero():
        raise AssertionError(
            "constants fail to cancel: %s vs %s" % (U.const_term, V.const_term)
        )
    return U.const_term
