"""Elements of the polynomial module and invariant monomial bases.

The module is a direct sum, over admissible weights v, of rings of
W_{[v]^c}-invariant polynomials in x_1..x_d and hbar.  A ModuleElem is one
validated component; a PElem is a finitely supported sum of components and
is the currency the operators trade in.
"""

from fractions import Fraction

from .errors import InvarianceViolation, ShapeMismatch
from .orbits import WeightVec, parabolic_of_weight
from .poly import Poly
from .scalars import GaussRat


def assert_invariance(poly, group, context=""):
    """Raise InvarianceViolation unless every generator of group fixes poly."""
    for gen in group.generators():
        if gen.act(poly) != poly:
            raise InvarianceViolation(
                "%spolynomial is moved by generator %r" % (
                    context + ": " if context else "", gen)
            )


class ModuleElem:
    """A single weight component: an invariant polynomial sitting over v."""

    __slots__ = ("weight", "poly")

    def __init__(self, weight, poly, check=True):
        if not isinstance(weight, WeightVec):
            raise TypeError("weight must be a WeightVec")
        if poly.nvars != weight.d:
            raise ShapeMismatch(
                "polynomial in %d variables over a weight with d = %d"
                % (poly.nvars, weight.d)
            )
        if check:
            assert_invariance(poly, parabolic_of_weight(weight),
                              "component %s" % weight)
        self.weight = weight
        self.poly = poly

    def __repr__(self):
        return "ModuleElem(%s, %s)" % (self.weight, self.poly)


class PElem:
    """A finitely supported sum of weight components; immutable and hashable.

    Zero components are never stored, so the zero element has no components
    at all and equality is plain dict comparison.
    """

    __slots__ = ("n", "d", "_comp", "_hash")

    def __init__(self, n, d, components, check=True):
        comp = {}
        for weight, poly in dict(components).items():
            if not isinstance(weight, WeightVec):
                raise TypeError("keys must be WeightVecs")
            if weight.n != n or weight.d != d:
                raise ShapeMismatch(
                    "component %s does not belong to (n=%d, d=%d)"
                    % (weight, n, d)
                )
            if poly.is_zero():
                continue
            if check:
                ModuleElem(weight, poly)
            comp[weight] = poly
        self.n = n
        self.d = d
        self._comp = comp
        self._hash = None

    @classmethod
    def zero(cls, n, d):
        return cls(n, d, {}, check=False)

    @classmethod
    def from_component(cls, weight, poly, check=True):
        return cls(weight.n, weight.d, {weight: poly}, check=check)

    def components(self):
        return sorted(self._comp.items(), key=lambda kv: kv[0].entries)

    def weights(self):
        return sorted(self._comp, key=lambda w: w.entries)

    def get(self, weight):
        return self._comp.get(weight, Poly.zero(self.d))

    def is_zero(self):
        return not self._comp

    def _combine(self, other, flip):
        if not isinstance(other, PElem):
            return NotImplemented
        if (self.n, self.d) != (other.n, other.d):
            raise ShapeMismatch("elements of different module shapes")
        comp = dict(self._comp)
        for w, p in other._comp.items():
            q = comp.get(w)
            s = (q - p if flip else q + p) if q is not None else (-p if flip else p)
            if s.is_zero():
                comp.pop(w, None)
            else:
                comp[w] = s
        return PElem(self.n, self.d, comp, check=False)

    def __add__(self, other):
        return self._combine(other, False)

    def __sub__(self, other):
        return self._combine(other, True)

    def __neg__(self):
        return PElem(self.n, self.d,
                     {w: -p for w, p in self._comp.items()}, check=False)

    def scale(self, c):
        if isinstance(c, (int, Fraction)):
            c = GaussRat(Fraction(c))
        if c.is_zero():
            return PElem.zero(self.n, self.d)
        return PElem(self.n, self.d,
                     {w: p.scale(c) for w, p in self._comp.items()},
                     check=False)

    def mul_hbar(self, k=1):
        """Multiply every component by hbar^k (central, so invariance holds)."""
        h = Poly.hbar(self.d) ** k
        return PElem(self.n, self.d,
                     {w: p * h for w, p in self._comp.items()}, check=False)

    def __eq__(self, other):
        if not isinstance(other, PElem):
            return NotImplemented
        return (self.n, self.d) == (other.n, other.d) and self._comp == other._comp

    def __hash__(self):
        if self._hash is None:
            items = tuple(sorted(
                (w.entries, p) for w, p in self._comp.items()
            ))
            self._hash = hash((self.n, self.d, items))
        return self._hash

    def __bool__(self):
        return bool(self._comp)

    def __repr__(self):
        if not self._comp:
            return "PElem.zero(%d, %d)" % (self.n, self.d)
        parts = ["(%s: %s)" % (w, p) for w, p in self.components()]
        return "PElem[" + " + ".join(parts) + "]"


def _monomials_upto(d, D):
    """Exponent tuples over x_1..x_d of total degree at most D, hbar-free."""
    out = []

    def rec(prefix, remaining):
        if len(prefix) == d:
            out.append(tuple(prefix) + (0,))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e)

    rec([], D)
    return out


def orbit_sum_basis(weight, D):
    """Monomial-orbit-sum basis of the invariants of x-degree at most D.

    Each basis vector is the group sum of a single monomial, normalized to
    leading coefficient one; zero sums are dropped and duplicates (orbits
    hit more than once) are kept only once.  The list is sorted by leading
    monomial, so the order is deterministic.
    """
    d = weight.d
    group = parabolic_of_weight(weight)
    elements = group.elements()
    seen = {}
    for exps in _monomials_upto(d, D):
        mono = Poly(d, {exps: (1, 0, 1)})
        total = Poly.zero(d)
        for w in elements:
            total = total + w.act(mono)
        if total.is_zero():
            continue
        total = total.scale(GaussRat(Fraction(1)) / total.leading_coeff())
        key = total.leading_exps()
        if key in seen:
            if seen[key] != total:
                raise AssertionError(
                    "distinct orbit sums share a leading monomial")
            continue
        seen[key] = total
    ordered = sorted(seen.items(), key=lambda kv: (sum(kv[0]), kv[0]))
    return [p for _, p in ordered]


def basis_elements(weight, D):
    """orbit_sum_basis wrapped into single-component PElems."""
    return [PElem.from_component(weight, p, check=False)
            for p in orbit_sum_basis(weight, D)]
