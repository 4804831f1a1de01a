"""Rational functions whose denominators are products of linear forms.

Denominators are never expanded: they are kept as multisets of canonical
linear factors (integer-coprime coefficients, positive leading coefficient).
Cancellation is exact trial division, which suffices because every
denominator built by this package is a product of linear forms.
"""

from fractions import Fraction

from .errors import DenominatorNotCleared, NotDivisible
from .poly import Poly
from .scalars import GaussRat


class LinFactor:
    """A canonical linear factor with a positive multiplicity."""

    __slots__ = ("poly", "multiplicity")

    def __init__(self, poly, multiplicity=1):
        if multiplicity < 1:
            raise ValueError("multiplicity must be positive")
        self.poly = poly
        self.multiplicity = multiplicity

    def __repr__(self):
        return "LinFactor(%s, %d)" % (self.poly, self.multiplicity)


def canonicalize_linear(p):
    """Split a linear Poly as scalar * canonical-factor.

    Returns (c: GaussRat, f: Poly) with p = c*f, f having coprime integer
    coefficients and positive leading coefficient under the term order.
    """
    if p.is_zero():
        raise ValueError("zero is not a linear factor")
    if p.total_degree() > 1:
        raise ValueError("factor %s is not linear" % p)
    lead = p.leading_coeff()
    unit = p.scale(1 / lead)
    nums, dens = [], []
    for _, c in unit.sorted_terms():
        if c.im != 0:
            raise ValueError("factor %s is not a rational multiple of a real form" % p)
        nums.append(c.re.numerator)
        dens.append(c.re.denominator)
    g = 0
    for a in nums:
        g = _gcd(g, abs(a))
    l = 1
    for b in dens:
        l = l * b // _gcd(l, b)
    f = unit.scale(Fraction(l, g))
    return lead * GaussRat(Fraction(g, l)), f


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _factor_key(f):
    return tuple(sorted(f.terms.items()))


class RatFunc:
    """scale * num / (product of linear factors); immutable by convention."""

    __slots__ = ("num", "_den", "scale", "nvars")

    def __init__(self, num, den=None, scale=None):
        self.num = num
        self.nvars = num.nvars
        if den is None:
            self._den = {}
        elif isinstance(den, dict):
            self._den = den
        else:
            d = {}
            for f, m in den:
                c, canon = canonicalize_linear(f)
                if scale is None:
                    scale = GaussRat(1)
                scale = scale / (c**m if m != 1 else c)
                key = _factor_key(canon)
                if key in d:
                    d[key] = (canon, d[key][1] + m)
                else:
                    d[key] = (canon, m)
            self._den = d
        self.scale = GaussRat(1) if scale is None else scale

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_poly(p):
        return RatFunc(p)

    @staticmethod
    def const(nvars, c):
        return RatFunc(Poly.const(nvars, c))

    @property
    def den(self):
        """Denominator as a canonically sorted list of LinFactor."""
        return [
            LinFactor(f, m) for _, (f, m) in sorted(self._den.items())
        ]

    # -- predicates ---------------------------------------------------

    def is_zero(self):
        return self.num.is_zero() or self.scale.is_zero()

    def is_poly(self):
        return not self._den or self.is_zero()

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction, GaussRat)):
            return RatFunc(Poly.const(self.nvars, other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lcm = dict(self._den)
        for key, (f, m) in other._den.items():
            if key in lcm:
                lcm[key] = (f, max(lcm[key][1], m))
            else:
                lcm[key] = (f, m)
        left = self.num.scale(self.scale)
        right = other.num.scale(other.scale)
        for key, (f, m) in lcm.items():
            m1 = self._den.get(key, (f, 0))[1]
            m2 = other._den.get(key, (f, 0))[1]
            for _ in range(m - m1):
                left = left * f
            for _ in range(m - m2):
                right = right * f
        return RatFunc(left + right, lcm).simplify()

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return RatFunc(self.num, dict(self._den), -self.scale)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            return RatFunc(self.num, dict(self._den), self.scale * other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatFunc(Poly.zero(self.nvars))
        den = dict(self._den)
        for key, (f, m) in other._den.items():
            if key in den:
                den[key] = (f, den[key][1] + m)
            else:
                den[key] = (f, m)
        return RatFunc(
            self.num * other.num, den, self.scale * other.scale
        ).simplify()

    __rmul__ = __mul__

    def over_linear(self, p, mult=1):
        """Divide by a linear polynomial p (added to the denominator)."""
        c, f = canonicalize_linear(p)
        den = dict(self._den)
        key = _factor_key(f)
        if key in den:
            den[key] = (f, den[key][1] + mult)
        else:
            den[key] = (f, mult)
        return RatFunc(self.num, den, self.scale / c**mult).simplify()

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            if not isinstance(other, GaussRat):
                other = GaussRat(other)
            return RatFunc(self.num, dict(self._den), self.scale / other)
        if isinstance(other, Poly):
            if other.is_constant():
                return self / other.constant_value()
            return self.over_linear(other)
        return NotImplemented

    # -- normalization ------------------------------------------------

    def simplify(self):
        """Cancel denominator factors dividing the numerator; fold the scale."""
        if self.is_zero():
            return RatFunc(Poly.zero(self.nvars))
        num = self.num.scale(self.scale)
        den = {}
        for key, (f, m) in self._den.items():
            while m > 0:
                try:
                    num = num.exact_div(f)
                except NotDivisible:
                    break
                m -= 1
            if m > 0:
                den[key] = (f, m)
        return RatFunc(num, den)

    def to_poly(self):
        """The underlying Poly; raises DenominatorNotCleared otherwise."""
        r = self.simplify()
        if r._den:
            raise DenominatorNotCleared(
                "denominator remains: %s" % (r,)
            )
        return r.num

    # -- substitution --------------------------------------------------

    def signed_permute(self, perm, flip):
        """Apply x_k -> +/- x_{perm[k]} to numerator and denominator."""
        num = self.num.signed_permute(perm, flip)
        den = {}
        scale = self.scale
        for _, (f, m) in self._den.items():
            g = f.signed_permute(perm, flip)
            c, canon = canonicalize_linear(g)
            scale = scale / c**m
            key = _factor_key(canon)
            if key in den:
                den[key] = (canon, den[key][1] + m)
            else:
                den[key] = (canon, m)
        return RatFunc(num, den, scale)

    # -- protocol ------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a = self.simplify()
        b = other.simplify()
        if a._den.keys() != b._den.keys():
            return False
        for key in a._den:
            if a._den[key][1] != b._den[key][1]:
                return False
        return a.num == b.num

    def __hash__(self):
        a = self.simplify()
        return hash((a.num, tuple(sorted((k, m) for k, (_, m) in a._den.items()))))

    def __repr__(self):
        return "RatFunc(%s)" % self

    def __str__(self):
        r = self.simplify()
        if not r._den:
            return str(r.num)
        parts = []
        for _, (f, m) in sorted(r._den.items()):
            text = "(%s)" % f
            if m > 1:
                text += "^%d" % m
            parts.append(text)
        return "(%s) / %s" % (r.num, "*".join(parts))


def ratfunc_simplify(f):
    """Cancel every denominator factor that divides the numerator exactly."""
    return f.simplify()
