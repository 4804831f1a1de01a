"""Exact Gaussian-rational scalars.

A GaussRat is a number re + im*sqrt(-1) with both parts exact rationals.
Internally the package's polynomial kernel stores coefficients as integer
triples (a, b, den) meaning (a + b*sqrt(-1))/den with gcd(a, b, den) = 1 and
den > 0; this module provides the friendly wrapper plus conversions.
"""

from fractions import Fraction

from ._kernel import norm3


class GaussRat:
    """An exact Gaussian rational re + im*i, immutable and hashable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRat is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_triple(t):
        """Build from a kernel triple (a, b, den) or None (zero)."""
        if t is None:
            return GaussRat(0, 0)
        a, b, den = t
        return GaussRat(Fraction(a, den), Fraction(b, den))

    def to_triple(self):
        """Kernel triple (a, b, den) with den > 0, or None when zero."""
        den = self.re.denominator * self.im.denominator // _gcd(
            self.re.denominator, self.im.denominator
        )
        return norm3(
            self.re.numerator * (den // self.re.denominator),
            self.im.numerator * (den // self.im.denominator),
            den,
        )

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRat(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRat(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero GaussRat")
        return GaussRat(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (GaussRat(Fraction(1)) / self) ** (-k)
        out = GaussRat(Fraction(1))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self):
        return GaussRat(self.re, -self.im)

    # -- predicates / protocol ----------------------------------------

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def is_rational(self):
        return self.im == 0

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return "GaussRat(%s, %s)" % (self.re, self.im)

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return "%s*i" % self.im if self.im != 1 else "i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        imag = "i" if mag == 1 else "%s*i" % mag
        return "%s %s %s" % (self.re, sign, imag)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _coerce(x):
    if isinstance(x, GaussRat):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussRat(x, 0)
    return NotImplemented


ZERO = GaussRat(0, 0)
ONE = GaussRat(1, 0)
I = GaussRat(0, 1)
