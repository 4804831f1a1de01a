"""Sparse multivariate polynomials in x_1..x_d and hbar over Gaussian rationals.

Terms are kept in a dict mapping exponent tuples (e_1, .., e_d, e_hbar) to
kernel coefficient triples; the heavy loops live in the kernel backend.  The
text format used by the CLI and fixtures writes hbar as ``h`` and the
imaginary unit as ``i``, e.g. ``3/2*i*x1^2*h - x2``.
"""

import re as _re
from fractions import Fraction

from . import _kernel as _k
from .errors import NotDivisible
from .scalars import GaussRat


class Poly:
    """Immutable sparse polynomial; ``nvars`` counts the x-variables only."""

    __slots__ = ("terms", "nvars", "_hash")

    def __init__(self, nvars, terms=None):
        self.terms = terms if terms is not None else {}
        self.nvars = nvars
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(nvars):
        return Poly(nvars)

    @staticmethod
    def one(nvars):
        return Poly.const(nvars, 1)

    @staticmethod
    def const(nvars, c):
        """Constant polynomial; c may be int, Fraction, or GaussRat."""
        if not isinstance(c, GaussRat):
            c = GaussRat(c)
        t = c.to_triple()
        if t is None:
            return Poly(nvars)
        return Poly(nvars, {(0,) * (nvars + 1): t})

    @staticmethod
    def var(nvars, k):
        """The variable x_k, 1-based, 1 <= k <= nvars."""
        if not 1 <= k <= nvars:
            raise ValueError("variable index %d out of range [1, %d]" % (k, nvars))
        exps = [0] * (nvars + 1)
        exps[k - 1] = 1
        return Poly(nvars, {tuple(exps): (1, 0, 1)})

    @staticmethod
    def hbar(nvars):
        exps = [0] * nvars + [1]
        return Poly(nvars, {tuple(exps): (1, 0, 1)})

    @staticmethod
    def signed_var(nvars, m):
        """The signed value of index m in [1, 2d]: x_m if m <= d else -x_{2d+1-m}."""
        d = nvars
        if 1 <= m <= d:
            return Poly.var(d, m)
        if d < m <= 2 * d:
            return -Poly.var(d, 2 * d + 1 - m)
        raise ValueError("signed index %d out of range [1, %d]" % (m, 2 * d))

    # -- arithmetic ---------------------------------------------------

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("mixed variable counts: %d vs %d" % (self.nvars, other.nvars))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check(other)
        return Poly(self.nvars, _k.terms_add(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check(other)
        return Poly(self.nvars, _k.terms_sub(self.terms, other.terms))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        return Poly(self.nvars, _k.terms_mul(self.terms, other.terms))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            return self.scale(other)
        return NotImplemented

    def __neg__(self):
        return Poly(self.nvars, _k.terms_neg(self.terms))

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.one(self.nvars)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def scale(self, c):
        if not isinstance(c, GaussRat):
            c = GaussRat(c)
        return Poly(self.nvars, _k.terms_scale(self.terms, c.to_triple()))

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction, GaussRat)):
            return Poly.const(self.nvars, other)
        return NotImplemented

    # -- structure ----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (
            len(self.terms) == 1 and (0,) * (self.nvars + 1) in self.terms
        )

    def constant_value(self):
        """The coefficient of the constant monomial, as GaussRat."""
        return GaussRat.from_triple(self.terms.get((0,) * (self.nvars + 1)))

    def coeff(self, exps):
        return GaussRat.from_triple(self.terms.get(tuple(exps)))

    def total_degree(self):
        """Degree counting x-variables and hbar together; -1 for zero."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def x_degree(self):
        """Degree in the x-variables only; -1 for zero."""
        if not self.terms:
            return -1
        return max(sum(e[:-1]) for e in self.terms)

    def hbar_degree(self):
        if not self.terms:
            return -1
        return max(e[-1] for e in self.terms)

    def leading_exps(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return _k.terms_leading(self.terms)

    def leading_coeff(self):
        return GaussRat.from_triple(self.terms[self.leading_exps()])

    def x_homogeneous_part(self, k, hbar_exp=0):
        """Terms of x-degree exactly k and hbar-degree exactly hbar_exp."""
        sub = {
            e: c
            for e, c in self.terms.items()
            if sum(e[:-1]) == k and e[-1] == hbar_exp
        }
        return Poly(self.nvars, sub)

    def hbar_coefficients(self):
        """Split into a list c_0..c_m of hbar-free polys with self = sum c_j*hbar^j."""
        m = self.hbar_degree()
        if m < 0:
            return []
        parts = [dict() for _ in range(m + 1)]
        for e, c in self.terms.items():
            parts[e[-1]][e[:-1] + (0,)] = c
        return [Poly(self.nvars, p) for p in parts]

    def signed_permute(self, perm, flip):
        """Substitute x_k -> +/- x_{perm[k]} (0-based arrays over x-slots)."""
        return Poly(self.nvars, _k.terms_signed_permute(self.terms, perm, flip))

    def exact_div(self, q):
        """Exact quotient self / q; raises NotDivisible when none exists."""
        if isinstance(q, (int, Fraction, GaussRat)):
            if not isinstance(q, GaussRat):
                q = GaussRat(q)
            if q.is_zero():
                raise NotDivisible("division by zero")
            return self.scale(1 / q)
        self._check(q)
        if q.is_zero():
            raise NotDivisible("division by zero polynomial")
        out = _k.terms_exact_div(self.terms, q.terms)
        if out is None:
            raise NotDivisible("%s is not divisible by %s" % (self, q))
        return Poly(self.nvars, out)

    def divides(self, p):
        """True when self divides p exactly."""
        if self.is_zero():
            return p.is_zero()
        return _k.terms_exact_div(p.terms, self.terms) is not None

    # -- protocol ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            other = Poly.const(self.nvars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            key = tuple(sorted(self.terms.items()))
            self._hash = hash((self.nvars, key))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        """(exps, GaussRat) pairs in descending graded-lex order."""
        order = sorted(self.terms, key=lambda e: (sum(e), e), reverse=True)
        return [(e, GaussRat.from_triple(self.terms[e])) for e in order]

    def __repr__(self):
        return "Poly(%d, %s)" % (self.nvars, str(self))

    def __str__(self):
        return format_poly(self)


def poly_exact_div(p, q):
    """Exact division p / q; raises NotDivisible when no quotient exists."""
    return p.exact_div(q)


# -- text format -------------------------------------------------------


def _monomial_str(exps):
    factors = []
    for k, e in enumerate(exps[:-1], start=1):
        if e == 1:
            factors.append("x%d" % k)
        elif e > 1:
            factors.append("x%d^%d" % (k, e))
    eh = exps[-1]
    if eh == 1:
        factors.append("h")
    elif eh > 1:
        factors.append("h^%d" % eh)
    return "*".join(factors)


def _frac_str(q):
    return str(q)


def _term_str(rat, is_imag, mono):
    """One signed term; rat is a positive Fraction."""
    parts = []
    if rat != 1 or (not is_imag and not mono):
        parts.append(_frac_str(rat))
    if is_imag:
        parts.append("i")
    if mono:
        parts.append(mono)
    return "*".join(parts)


def format_poly(p):
    if p.is_zero():
        return "0"
    chunks = []
    for exps, c in p.sorted_terms():
        mono = _monomial_str(exps)
        for part, is_imag in ((c.re, False), (c.im, True)):
            if part == 0:
                continue
            text = _term_str(abs(part), is_imag, mono)
            if not chunks:
                chunks.append(("-" if part < 0 else "") + text)
            else:
                chunks.append((" - " if part < 0 else " + ") + text)
    return "".join(chunks)


_TERM_SPLIT = _re.compile(r"(?=[+-])")
_FACTOR_RE = _re.compile(
    r"^(?:(?P<rat>\d+(?:/\d+)?)|(?P<imag>i)|x(?P<xk>\d+)(?:\^(?P<xe>\d+))?"
    r"|h(?:\^(?P<he>\d+))?)$"
)


def parse_poly(text, nvars):
    """Parse the polynomial text grammar; inverse of format_poly."""
    s = "".join(text.split())
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return Poly.zero(nvars)
    out = Poly.zero(nvars)
    pieces = [piece for piece in _TERM_SPLIT.split(s) if piece]
    for piece in pieces:
        sign = 1
        if piece[0] == "+":
            piece = piece[1:]
        elif piece[0] == "-":
            sign = -1
            piece = piece[1:]
        if not piece:
            raise ValueError("dangling sign in %r" % text)
        rat = Fraction(1)
        is_imag = False
        exps = [0] * (nvars + 1)
        for factor in piece.split("*"):
            m = _FACTOR_RE.match(factor)
            if not m:
                raise ValueError("bad factor %r in %r" % (factor, text))
            if m.group("rat"):
                rat *= Fraction(m.group("rat"))
            elif m.group("imag"):
                is_imag = not is_imag
            elif m.group("xk"):
                k = int(m.group("xk"))
                if not 1 <= k <= nvars:
                    raise ValueError(
                        "variable x%d out of range for %d variables" % (k, nvars)
                    )
                exps[k - 1] += int(m.group("xe") or 1)
            else:
                exps[-1] += int(m.group("he") or 1)
        coeff = GaussRat(0, sign * rat) if is_imag else GaussRat(sign * rat, 0)
        out = out + Poly(nvars, {tuple(exps): coeff.to_triple()})
    return out
