"""Brute-force flag enumeration over small finite fields.

Flags are chains V_1 c .. c V_N in F_q^{2d} with V_i = V_{N-i}^perp for the
fixed symplectic form <x, y> = sum_s eps_s x_s y_{2d-1-s} (eps_s = +1 for
s < d, -1 after).  Subspaces are stored as frozensets of point tuples, so
dimensions and intersections are exact set operations.  Everything here is
an oracle for the orbit-matrix combinatorics, not a performance showcase.
"""

import os
from itertools import product

from .errors import IncompatibleFlags, RowColMismatch, TooLarge
from .orbits import OrbitMatrix, WeightVec

_DEFAULT_BUDGET = 200000


def _budget():
    return int(os.environ.get("IYANG_BUDGET", str(_DEFAULT_BUDGET)))


def _check_prime(q):
    if q < 2 or any(q % p == 0 for p in range(2, int(q**0.5) + 1)):
        raise ValueError("q = %d is not prime" % q)


def _vadd(u, v, q):
    return tuple((a + b) % q for a, b in zip(u, v))


def _vscale(u, c, q):
    return tuple((a * c) % q for a in u)


def _pairing(u, v, d, q):
    total = 0
    for s in range(2 * d):
        eps = 1 if s < d else -1
        total += eps * u[s] * v[2 * d - 1 - s]
    return total % q


_perp_cache = {}


def _perp(space, d, q):
    key = (d, q, space)
    hit = _perp_cache.get(key)
    if hit is not None:
        return hit
    ambient = [tuple(v) for v in product(range(q), repeat=2 * d)]
    out = frozenset(
        w for w in ambient if all(_pairing(w, s, d, q) == 0 for s in space)
    )
    _perp_cache[key] = out
    return out


def _extend(space, w, q):
    """The span of space and one extra vector."""
    out = set(space)
    for c in range(1, q):
        cw = _vscale(w, c, q)
        out.update(_vadd(s, cw, q) for s in space)
    return frozenset(out)


def _dim(space, q):
    size = len(space)
    k = 0
    while size > 1:
        if size % q:
            raise AssertionError("subspace size %d is not a power of %d" % (len(space), q))
        size //= q
        k += 1
    return k


def echelon_basis(space, q, d):
    """Row-reduced canonical basis of a subspace (for display and hashing)."""
    rows = [list(v) for v in sorted(space) if any(v)]
    basis = []
    pivots = []
    for col in range(2 * d):
        pivot = None
        for r in rows:
            if all(r[c] == 0 for c in pivots) and r[col] % q:
                pivot = r
                break
        if pivot is None:
            continue
        inv = pow(pivot[col], -1, q)
        pivot = [(x * inv) % q for x in pivot]
        basis = [
            [(x - row[col] * p) % q for x, p in zip(row, pivot)] for row in basis
        ]
        rows = [
            [(x - row[col] * p) % q for x, p in zip(row, pivot)]
            for row in rows
        ]
        basis.append(pivot)
        pivots.append(col)
    return [tuple(b) for b in basis if any(b)]


class FqFlag:
    """An N-step symplectically self-dual flag, stored as point sets."""

    __slots__ = ("q", "n", "d", "spaces", "_hash")

    def __init__(self, q, n, d, spaces):
        self.q = q
        self.n = n
        self.d = d
        self.spaces = tuple(spaces)
        if len(self.spaces) != 2 * n + 1:
            raise ValueError("expected %d spaces" % (2 * n + 1))
        self._hash = None

    @property
    def bases(self):
        return [echelon_basis(s, self.q, self.d) for s in self.spaces]

    def type(self):
        dims = [0] + [_dim(s, self.q) for s in self.spaces]
        return WeightVec(self.n, [dims[k + 1] - dims[k] for k in range(2 * self.n + 1)])

    def __eq__(self, other):
        if not isinstance(other, FqFlag):
            return NotImplemented
        return (
            self.q == other.q
            and self.n == other.n
            and self.d == other.d
            and self.spaces == other.spaces
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.q, self.n, self.d, self.spaces))
        return self._hash

    def __repr__(self):
        return "FqFlag(q=%d, type=%s)" % (self.q, self.type())


def _isotropic_extensions(space, steps, d, q):
    """All isotropic overspaces exactly `steps` dimensions larger."""
    layer = {space}
    for _ in range(steps):
        nxt = set()
        for S in layer:
            room = _perp(S, d, q) - S
            for w in room:
                nxt.add(_extend(S, w, q))
        layer = nxt
    return layer


def standard_flag(n, d, q, wtype):
    """The flag whose steps are spans of initial unit vectors."""
    _check_prime(q)
    zero = frozenset({(0,) * (2 * d)})
    units = []
    for k in range(2 * d):
        e = [0] * (2 * d)
        e[k] = 1
        units.append(tuple(e))
    spans = [zero]
    for k in range(2 * d):
        spans.append(_extend(spans[-1], units[k], q))
    N = 2 * n + 1
    spaces = []
    for i in range(1, N + 1):
        spaces.append(spans[wtype.bar(i)])
    flag = FqFlag(q, n, d, spaces)
    _validate_flag(flag)
    return flag


def _validate_flag(flag):
    N = 2 * flag.n + 1
    for i in range(1, N):
        if not flag.spaces[i - 1] <= flag.spaces[i]:
            raise AssertionError("steps are not nested")
    for i in range(1, N):
        if flag.spaces[N - i - 1] != _perp(flag.spaces[i - 1], flag.d, flag.q):
            raise AssertionError("self-duality V_{N-i} = V_i^perp fails")


_flags_cache = {}


def enum_flags(n, d, q, wtype):
    """All flags of the given type; memoized per (n, d, q, type)."""
    _check_prime(q)
    key = (n, d, q, wtype.entries)
    hit = _flags_cache.get(key)
    if hit is not None:
        return hit
    budget = _budget()
    if q ** (2 * d) > budget:
        raise TooLarge("ambient space F_%d^%d exceeds the budget" % (q, 2 * d))
    zero = frozenset({(0,) * (2 * d)})
    chains = [[zero]]
    for i in range(1, n + 1):
        target = wtype.bar(i)
        nxt = []
        for chain in chains:
            for S in _isotropic_extensions(chain[-1], target - _dim(chain[-1], q), d, q):
                nxt.append(chain + [S])
            if len(nxt) > budget:
                raise TooLarge("flag enumeration exceeds the budget")
        chains = nxt
    out = []
    for chain in chains:
        isotropic_part = chain[1:]
        upper = [
            _perp(isotropic_part[n - j], d, q) for j in range(1, n + 1)
        ]
        full = frozenset(
            tuple(v) for v in product(range(q), repeat=2 * d)
        )
        spaces = isotropic_part + upper + [full]
        flag = FqFlag(q, n, d, spaces)
        out.append(flag)
    if out:
        _validate_flag(out[0])
    _flags_cache[key] = out
    return out


_relpos_cache = {}


def relpos(F, G):
    """The relative-position matrix of an (ordered) pair of flags."""
    if not isinstance(F, FqFlag) or not isinstance(G, FqFlag):
        raise IncompatibleFlags("relpos needs two flags")
    if (F.q, F.n, F.d) != (G.q, G.n, G.d):
        raise IncompatibleFlags(
            "flags live over different spaces: %r vs %r" % (F, G)
        )
    key = (F, G)
    hit = _relpos_cache.get(key)
    if hit is not None:
        return hit
    N = 2 * F.n + 1
    q = F.q
    D = [[0] * (N + 1) for _ in range(N + 1)]
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            D[i][j] = _dim(F.spaces[i - 1] & G.spaces[j - 1], q)
    rows = [
        [
            D[i][j] - D[i - 1][j] - D[i][j - 1] + D[i - 1][j - 1]
            for j in range(1, N + 1)
        ]
        for i in range(1, N + 1)
    ]
    A = OrbitMatrix(F.n, rows)
    _relpos_cache[key] = A
    return A


def oracle_compose_set(A, B, q):
    """{relpos(F, F'') : relpos(F, F') = A, relpos(F', F'') = B} by brute force.

    The first flag is fixed to the standard flag of type ro(A); the symplectic
    group acts transitively on flags of a type, so this loses nothing.
    """
    if A.n != B.n or A.d != B.d:
        raise RowColMismatch("matrices live in different Xi_d")
    if A.co() != B.ro():
        raise RowColMismatch("co(A) = %s but ro(B) = %s" % (A.co(), B.ro()))
    _check_prime(q)
    n, d = A.n, A.d
    F = standard_flag(n, d, q, A.ro())
    mids = [G for G in enum_flags(n, d, q, A.co()) if relpos(F, G) == A]
    finals = enum_flags(n, d, q, B.co())
    seen = set()
    for G in mids:
        for H in finals:
            if relpos(G, H) == B:
                seen.add(relpos(F, H))
    return sorted(seen)
