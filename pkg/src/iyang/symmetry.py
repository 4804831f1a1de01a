"""Signed indices, tau-symmetric partitions, the type-C Weyl group, cosets.

Indices 1..2d come in mirror pairs m <-> m' = 2d+1-m with values
val(m) = x_m for m <= d and val(m) = -x_{2d+1-m} otherwise.  Partitions of
{1..2d} into N = 2n+1 blocks are kept tau-symmetric (block j mirrors block
N+1-j); reading a polynomial "through" a partition substitutes the first d
listed signed values into its slots.
"""

from itertools import permutations, product

from .errors import (
    MirrorViolation,
    NotASubgroup,
    NotInvariantUnderW1,
    ShapeMismatch,
    ShiftOutOfRange,
)
from .poly import Poly
from .ratfunc import RatFunc


def mirror_index(m, d):
    """The paired index m' = 2d+1-m."""
    if not 1 <= m <= 2 * d:
        raise ValueError("index %d out of range [1, %d]" % (m, 2 * d))
    return 2 * d + 1 - m


def val_slot(m, d):
    """(slot, sign) with val(m) = sign * x_slot and 1 <= slot <= d."""
    if 1 <= m <= d:
        return m, 1
    if d < m <= 2 * d:
        return 2 * d + 1 - m, -1
    raise ValueError("index %d out of range [1, %d]" % (m, 2 * d))


def signed_value(d, m):
    """val(m) as a Poly in d variables."""
    return Poly.signed_var(d, m)


class SymPartition:
    """A tau-symmetric ordered partition of {1..2d} into N = 2n+1 blocks."""

    __slots__ = ("blocks", "n", "d", "_hash")

    def __init__(self, n, d, blocks):
        N = 2 * n + 1
        blocks = tuple(frozenset(b) for b in blocks)
        if len(blocks) != N:
            raise ValueError("expected %d blocks, got %d" % (N, len(blocks)))
        seen = set()
        for b in blocks:
            for m in b:
                if not 1 <= m <= 2 * d or m in seen:
                    raise ValueError("blocks must partition 1..%d" % (2 * d))
                seen.add(m)
        if len(seen) != 2 * d:
            raise ValueError("blocks must cover 1..%d" % (2 * d))
        for j in range(N):
            mirrored = {mirror_index(m, d) for m in blocks[j]}
            if mirrored != set(blocks[N - 1 - j]):
                raise MirrorViolation(
                    "block %d is not the mirror of block %d" % (j + 1, N - j)
                )
        self.blocks = blocks
        self.n = n
        self.d = d
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def standard(v):
        """Consecutive intervals of sizes v_1..v_N."""
        bounds = [0]
        for size in v.entries:
            bounds.append(bounds[-1] + size)
        blocks = [
            range(bounds[j] + 1, bounds[j + 1] + 1) for j in range(len(v.entries))
        ]
        return SymPartition(v.n, v.d, blocks)

    def shape(self):
        return tuple(len(b) for b in self.blocks)

    def block_of(self, m):
        """1-based index of the block containing m."""
        for j, b in enumerate(self.blocks, start=1):
            if m in b:
                return j
        raise ValueError("index %d not in partition" % m)

    # -- listing ------------------------------------------------------

    def listing(self):
        """Blocks concatenated in order, ascending within each block."""
        out = []
        for b in self.blocks:
            out.extend(sorted(b))
        for k in range(len(out)):
            if out[2 * self.d - 1 - k] != mirror_index(out[k], self.d):
                raise MirrorViolation(
                    "listing positions %d and %d are not mirrors" % (k + 1, 2 * self.d - k)
                )
        return out

    def tau_shift(self, m, direction):
        """Move m one block forward (+1) or back (-1), and its mirror oppositely."""
        s = self.block_of(m)
        N = 2 * self.n + 1
        if direction not in (1, -1):
            raise ValueError("direction must be +1 or -1")
        t = s + direction
        if not 1 <= t <= N:
            raise ShiftOutOfRange(
                "cannot shift index %d out of block %d (direction %+d)" % (m, s, direction)
            )
        mm = mirror_index(m, self.d)
        blocks = [set(b) for b in self.blocks]
        blocks[s - 1].discard(m)
        blocks[t - 1].add(m)
        blocks[N - s].discard(mm)
        blocks[N - t].add(mm)
        return SymPartition(self.n, self.d, blocks)

    # -- protocol ------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SymPartition):
            return NotImplemented
        return (
            self.n == other.n and self.d == other.d and self.blocks == other.blocks
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                (self.n, self.d, tuple(tuple(sorted(b)) for b in self.blocks))
            )
        return self._hash

    def __repr__(self):
        return "SymPartition(%s)" % format_partition(self)


def format_partition(I):
    """Render blocks as ``{1,2}|{3,4}|{5,6}`` (empty block = ``{}``)."""
    return "|".join(
        "{%s}" % ",".join(str(m) for m in sorted(b)) for b in I.blocks
    )


def parse_partition(text, n, d):
    """Inverse of format_partition."""
    chunks = text.strip().split("|")
    blocks = []
    for chunk in chunks:
        chunk = chunk.strip()
        if not (chunk.startswith("{") and chunk.endswith("}")):
            raise ValueError("bad block %r" % chunk)
        body = chunk[1:-1].strip()
        blocks.append(
            set() if not body else {int(p) for p in body.split(",")}
        )
    return SymPartition(n, d, blocks)


def substitute(f, I, shape=None):
    """Read f through the partition: slot y_k <- val(listing(I)_k).

    ``shape`` is the component shape f is declared on; when given it must
    match shape(I) or ShapeMismatch is raised.
    """
    if shape is not None:
        shape = getattr(shape, "entries", shape)
    if shape is not None and tuple(shape) != I.shape():
        raise ShapeMismatch(
            "partition shape %s does not match declared shape %s"
            % (I.shape(), tuple(shape))
        )
    d = I.d
    if f.nvars != d:
        raise ShapeMismatch(
            "polynomial has %d slots but partition has d=%d" % (f.nvars, d)
        )
    lst = I.listing()
    perm = [0] * d
    flip = [0] * d
    for k in range(d):
        slot, sign = val_slot(lst[k], d)
        perm[k] = slot - 1
        flip[k] = 1 if sign < 0 else 0
    return f.signed_permute(perm, flip)


class WeylElem:
    """A signed permutation of d letters, acting by x_j -> sign_j * x_{perm(j)}."""

    __slots__ = ("perm", "signs", "d", "_hash")

    def __init__(self, perm, signs):
        self.perm = tuple(perm)
        self.signs = tuple(signs)
        self.d = len(self.perm)
        if sorted(self.perm) != list(range(self.d)):
            raise ValueError("perm is not a bijection of 0..%d" % (self.d - 1))
        if len(self.signs) != self.d or any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be a vector over {+1, -1}")
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def identity(d):
        return WeylElem(range(d), [1] * d)

    @staticmethod
    def transposition(d, a, b):
        """Swap letters a and b (1-based)."""
        perm = list(range(d))
        perm[a - 1], perm[b - 1] = perm[b - 1], perm[a - 1]
        return WeylElem(perm, [1] * d)

    @staticmethod
    def iota(d, m):
        """Negate letter m (1-based)."""
        signs = [1] * d
        signs[m - 1] = -1
        return WeylElem(range(d), signs)

    # -- group structure ----------------------------------------------

    def mult(self, other):
        """self * other, acting as (self*other)(f) = self(other(f))."""
        if self.d != other.d:
            raise ValueError("mixed ranks")
        perm = [self.perm[other.perm[j]] for j in range(self.d)]
        signs = [other.signs[j] * self.signs[other.perm[j]] for j in range(self.d)]
        return WeylElem(perm, signs)

    def inverse(self):
        perm = [0] * self.d
        signs = [1] * self.d
        for j in range(self.d):
            perm[self.perm[j]] = j
        for j in range(self.d):
            signs[j] = self.signs[perm[j]]
        return WeylElem(perm, signs)

    def is_identity(self):
        return self.perm == tuple(range(self.d)) and all(
            s == 1 for s in self.signs
        )

    # -- action --------------------------------------------------------

    def act(self, f):
        """Apply to a Poly or RatFunc."""
        flip = tuple(1 if s < 0 else 0 for s in self.signs)
        return f.signed_permute(self.perm, flip)

    # -- protocol ------------------------------------------------------

    def sort_key(self):
        return (self.perm, tuple(0 if s == 1 else 1 for s in self.signs))

    def __eq__(self, other):
        if not isinstance(other, WeylElem):
            return NotImplemented
        return self.perm == other.perm and self.signs == other.signs

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.perm, self.signs))
        return self._hash

    def __repr__(self):
        return "WeylElem(perm=%s, signs=%s)" % (self.perm, self.signs)


def weyl_act(w, f):
    """Module-level convenience for WeylElem.act."""
    return w.act(f)


class ParabolicSubgroup:
    """A product of symmetric groups on intervals and one hyperoctahedral block.

    ``sym_blocks`` are disjoint intervals (lo, hi) of [1, d] carrying plain
    symmetric groups; ``hyp_block`` (or None) carries signed permutations.
    Trivial (length < 2) symmetric intervals are dropped on construction.
    """

    __slots__ = ("d", "sym_blocks", "hyp_block", "_hash")

    def __init__(self, d, sym_blocks=(), hyp_block=None):
        cleaned = []
        used = set()
        for lo, hi in sym_blocks:
            if lo > hi:
                continue
            if not (1 <= lo and hi <= d):
                raise ValueError("interval [%d,%d] outside [1,%d]" % (lo, hi, d))
            span = set(range(lo, hi + 1))
            if span & used:
                raise ValueError("overlapping intervals")
            used |= span
            if hi > lo:
                cleaned.append((lo, hi))
        if hyp_block is not None:
            lo, hi = hyp_block
            if lo > hi:
                hyp_block = None
            else:
                if not (1 <= lo and hi <= d):
                    raise ValueError("interval [%d,%d] outside [1,%d]" % (lo, hi, d))
                span = set(range(lo, hi + 1))
                if span & used:
                    raise ValueError("overlapping intervals")
                used |= span
        self.d = d
        self.sym_blocks = tuple(sorted(cleaned))
        self.hyp_block = hyp_block
        self._hash = None

    # -- structure -----------------------------------------------------

    def order(self):
        size = 1
        for lo, hi in self.sym_blocks:
            size *= _factorial(hi - lo + 1)
        if self.hyp_block:
            k = self.hyp_block[1] - self.hyp_block[0] + 1
            size *= 2**k * _factorial(k)
        return size

    def generators(self):
        """Adjacent transpositions per block plus one sign flip on the hyp block."""
        out = []
        for lo, hi in self.sym_blocks:
            for a in range(lo, hi):
                out.append(WeylElem.transposition(self.d, a, a + 1))
        if self.hyp_block:
            lo, hi = self.hyp_block
            for a in range(lo, hi):
                out.append(WeylElem.transposition(self.d, a, a + 1))
            out.append(WeylElem.iota(self.d, hi))
        return out

    def elements(self):
        """All group elements (blockwise direct product)."""
        parts = []
        for lo, hi in self.sym_blocks:
            letters = list(range(lo - 1, hi))
            parts.append(
                [list(zip(letters, p)) for p in permutations(letters)]
            )
        hyp_signs = None
        if self.hyp_block:
            lo, hi = self.hyp_block
            letters = list(range(lo - 1, hi))
            combos = []
            for p in permutations(letters):
                for signs in product((1, -1), repeat=len(letters)):
                    combos.append((list(zip(letters, p)), list(zip(letters, signs))))
            parts.append(combos)
            hyp_signs = len(parts) - 1
        out = []
        for choice in product(*parts) if parts else [()]:
            perm = list(range(self.d))
            signs = [1] * self.d
            for idx, piece in enumerate(choice):
                if hyp_signs is not None and idx == hyp_signs:
                    assignment, sgn = piece
                    for src, dst in assignment:
                        perm[src] = dst
                    for src, s in sgn:
                        signs[src] = s
                else:
                    for src, dst in piece:
                        perm[src] = dst
            out.append(WeylElem(perm, signs))
        return out

    def contains(self, w):
        """Structural membership test."""
        if w.d != self.d:
            return False
        sym_span = {}
        for blk in self.sym_blocks:
            for j in range(blk[0] - 1, blk[1]):
                sym_span[j] = blk
        hyp_span = set()
        if self.hyp_block:
            hyp_span = set(range(self.hyp_block[0] - 1, self.hyp_block[1]))
        for j in range(self.d):
            if j in sym_span:
                if w.perm[j] not in range(sym_span[j][0] - 1, sym_span[j][1]):
                    return False
                if w.signs[j] != 1:
                    return False
            elif j in hyp_span:
                if w.perm[j] not in hyp_span:
                    return False
            else:
                if w.perm[j] != j or w.signs[j] != 1:
                    return False
        return True

    def is_subgroup_of(self, other):
        """Blockwise containment check."""
        if self.d != other.d:
            return False

        def covered(lo, hi, allow_sym):
            if allow_sym:
                for lo2, hi2 in other.sym_blocks:
                    if lo2 <= lo and hi <= hi2:
                        return True
            if other.hyp_block:
                lo2, hi2 = other.hyp_block
                if lo2 <= lo and hi <= hi2:
                    return True
            return False

        for lo, hi in self.sym_blocks:
            if not covered(lo, hi, True):
                return False
        if self.hyp_block:
            lo, hi = self.hyp_block
            if not other.hyp_block:
                return False
            lo2, hi2 = other.hyp_block
            if not (lo2 <= lo and hi <= hi2):
                return False
        return True

    # -- protocol ------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, ParabolicSubgroup):
            return NotImplemented
        return (
            self.d == other.d
            and self.sym_blocks == other.sym_blocks
            and self.hyp_block == other.hyp_block
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.d, self.sym_blocks, self.hyp_block))
        return self._hash

    def __repr__(self):
        parts = ["S[%d,%d]" % blk for blk in self.sym_blocks]
        if self.hyp_block:
            parts.append("Hyp[%d,%d]" % self.hyp_block)
        return "ParabolicSubgroup(d=%d: %s)" % (self.d, " x ".join(parts) or "1")


def _factorial(k):
    out = 1
    for j in range(2, k + 1):
        out *= j
    return out


def coset_reps(W1, W2):
    """Canonical representatives of the left cosets W2/W1 (W1 must sit in W2)."""
    if not W1.is_subgroup_of(W2):
        raise NotASubgroup("%r is not contained in %r" % (W1, W2))
    sub = W1.elements()
    seen = set()
    reps = []
    for sigma in sorted(W2.elements()):
        if sigma in seen:
            continue
        reps.append(sigma)
        for h in sub:
            seen.add(sigma.mult(h))
    expected = W2.order() // W1.order()
    if len(reps) != expected:
        raise AssertionError(
            "coset count %d != index %d" % (len(reps), expected)
        )
    return reps


class CosetSpace:
    """The quotient W2/W1 with its canonical representatives precomputed."""

    __slots__ = ("W1", "W2", "reps")

    def __init__(self, W1, W2):
        self.W1 = W1
        self.W2 = W2
        self.reps = coset_reps(W1, W2)

    def __len__(self):
        return len(self.reps)


def is_invariant(f, W):
    """True when every generator of W fixes f (Poly or RatFunc)."""
    return all(g.act(f) == f for g in W.generators())


def coset_sum(space, g):
    """Sum sigma(g) over coset representatives of W2/W1.

    Requires g to be W1-invariant (otherwise the sum depends on the chosen
    representatives); the result is checked to be W2-invariant.
    """
    if isinstance(g, Poly):
        g = RatFunc(g)
    if not is_invariant(g, space.W1):
        raise NotInvariantUnderW1("summand is not fixed by the subgroup")
    total = RatFunc(Poly.zero(g.nvars))
    for sigma in space.reps:
        total = total + sigma.act(g)
    if not is_invariant(total, space.W2):
        raise AssertionError("coset sum failed to be invariant under the big group")
    return total
