"""Weights, theta-symmetric orbit matrices, the closure order, and composition.

Weights v live in Lambda_{c,d} (palindromic, total 2d, even center).  Orbit
matrices live in Xi_d: N x N matrices over the naturals, invariant under the
half-turn a_{ij} = a_{N+1-i,N+1-j}, total 2d.  Composition M(A,B) and the
unique maximum A o B follow the three-case constraint analysis for
A = E^theta_{h,h+1}(v,a).
"""

from .errors import IndexOutOfRange, NoUniqueMax, RowColMismatch
from .symmetry import ParabolicSubgroup, SymPartition


class WeightVec:
    """A weight in Lambda_{c,d}: palindromic entries, sum 2d, even center."""

    __slots__ = ("n", "d", "entries", "_hash")

    def __init__(self, n, entries):
        N = 2 * n + 1
        entries = tuple(int(e) for e in entries)
        if len(entries) != N:
            raise ValueError("expected %d entries, got %d" % (N, len(entries)))
        if any(e < 0 for e in entries):
            raise ValueError("negative weight entry in %s" % (entries,))
        for i in range(N):
            if entries[i] != entries[N - 1 - i]:
                raise ValueError("weight %s is not palindromic" % (entries,))
        total = sum(entries)
        if total % 2:
            raise ValueError("weight total %d is odd" % total)
        if entries[n] % 2:
            raise ValueError("center entry %d is odd" % entries[n])
        self.n = n
        self.d = total // 2
        self.entries = entries
        self._hash = None

    @staticmethod
    def try_make(n, entries):
        """WeightVec or None when the entries are not a valid weight."""
        try:
            return WeightVec(n, entries)
        except ValueError:
            return None

    @property
    def N(self):
        return 2 * self.n + 1

    def __getitem__(self, i):
        """1-based entry access v_i."""
        if not 1 <= i <= self.N:
            raise IndexError("weight index %d out of [1, %d]" % (i, self.N))
        return self.entries[i - 1]

    def bar(self, i):
        """Prefix sum v_1 + .. + v_i (bar(0) = 0)."""
        if not 0 <= i <= self.N:
            raise IndexError("prefix index %d out of [0, %d]" % (i, self.N))
        return sum(self.entries[:i])

    def __eq__(self, other):
        if not isinstance(other, WeightVec):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.entries))
        return self._hash

    def __lt__(self, other):
        return self.entries < other.entries

    def __repr__(self):
        return "WeightVec(%s)" % (self.entries,)

    def __str__(self):
        return ",".join(str(e) for e in self.entries)


def parse_weight(text, n):
    """Parse "1,0,1" into a WeightVec."""
    return WeightVec(n, [int(p) for p in text.split(",")])


def enum_weights(n, d):
    """All weights of Lambda_{c,d}, sorted by entry tuple."""
    if n < 1 or d < 1:
        raise ValueError("need n, d >= 1")
    out = []

    # v_1..v_n use up at most d in total; the center takes twice the rest.
    def rec2(prefix, used, slots):
        if slots == 0:
            entries = prefix + [2 * (d - used)] + prefix[::-1]
            out.append(WeightVec(n, entries))
            return
        for vi in range(d - used + 1):
            rec2(prefix + [vi], used + vi, slots - 1)

    rec2([], 0, n)
    out.sort()
    return out


def blocks_of_weight(v):
    """The standard consecutive-interval partition [v] of {1..2d}."""
    return SymPartition.standard(v)


def parabolic_of_weight(v):
    """W_{[v]^c}: symmetric factors on [v]_1..[v]_n, hyperoctahedral tail."""
    sym = [(v.bar(i - 1) + 1, v.bar(i)) for i in range(1, v.n + 1)]
    hyp = (v.bar(v.n) + 1, v.d)
    if hyp[0] > hyp[1]:
        hyp = None
    return ParabolicSubgroup(v.d, sym, hyp)


class OrbitMatrix:
    """An element of Xi_d: theta-symmetric natural matrix with total 2d."""

    __slots__ = ("n", "d", "entries", "_ro", "_co", "_hash")

    def __init__(self, n, entries):
        N = 2 * n + 1
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if len(rows) != N or any(len(r) != N for r in rows):
            raise ValueError("expected a %dx%d matrix" % (N, N))
        if any(x < 0 for r in rows for x in r):
            raise ValueError("negative matrix entry")
        for i in range(N):
            for j in range(N):
                if rows[i][j] != rows[N - 1 - i][N - 1 - j]:
                    raise ValueError("matrix is not theta-symmetric")
        total = sum(x for r in rows for x in r)
        if total % 2:
            raise ValueError("matrix total %d is odd" % total)
        if rows[n][n] % 2:
            raise ValueError("center entry %d is odd" % rows[n][n])
        self.n = n
        self.d = total // 2
        self.entries = rows
        self._ro = None
        self._co = None
        self._hash = None

    @property
    def N(self):
        return 2 * self.n + 1

    def __getitem__(self, ij):
        """1-based entry access a_{ij}."""
        i, j = ij
        if not (1 <= i <= self.N and 1 <= j <= self.N):
            raise IndexOutOfRange(
                "cell (%d, %d) outside [1, %d]^2" % (i, j, self.N)
            )
        return self.entries[i - 1][j - 1]

    def ro(self):
        if self._ro is None:
            self._ro = WeightVec(self.n, [sum(r) for r in self.entries])
        return self._ro

    def co(self):
        if self._co is None:
            self._co = WeightVec(
                self.n, [sum(r[j] for r in self.entries) for j in range(self.N)]
            )
        return self._co

    def is_diagonal(self):
        return all(
            self.entries[i][j] == 0
            for i in range(self.N)
            for j in range(self.N)
            if i != j
        )

    def transpose(self):
        N = self.N
        return OrbitMatrix(
            self.n, [[self.entries[j][i] for j in range(N)] for i in range(N)]
        )

    def __eq__(self, other):
        if not isinstance(other, OrbitMatrix):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.entries))
        return self._hash

    def __lt__(self, other):
        return self.entries < other.entries

    def __repr__(self):
        return "OrbitMatrix(%s)" % (self.entries,)


def format_matrix(A):
    """The file format: first line "n d", then the rows."""
    lines = ["%d %d" % (A.n, A.d)]
    for row in A.entries:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("first line must be 'n d'")
    n, d = int(head[0]), int(head[1])
    N = 2 * n + 1
    if len(lines) != 1 + N:
        raise ValueError("expected %d matrix rows, got %d" % (N, len(lines) - 1))
    rows = [[int(x) for x in ln.split()] for ln in lines[1:]]
    A = OrbitMatrix(n, rows)
    if A.d != d:
        raise ValueError("declared d=%d but entries sum to 2*%d" % (d, A.d))
    return A


def matrix_cell_intervals(A):
    """The consecutive intervals [A]_{ij} in row-major reading order."""
    out = {}
    pos = 0
    N = A.N
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            a = A[i, j]
            out[(i, j)] = (pos + 1, pos + a)
            pos += a
    return out


def blocks_of_matrix(A):
    """Row-major cell intervals plus the first-half interval data [A]^c.

    Returns (intervals, parabolic): intervals maps (i, j) to [lo, hi] inside
    [1, 2d]; the parabolic collects the cells before the center (all inside
    [1, d]) as symmetric factors and the center's first half [.., d] as the
    hyperoctahedral factor.
    """
    intervals = matrix_cell_intervals(A)
    n = A.n
    sym = []
    for (i, j), (lo, hi) in intervals.items():
        if (i, j) < (n + 1, n + 1) and lo <= hi:
            sym.append((lo, hi))
    c_lo, c_hi = intervals[(n + 1, n + 1)]
    hyp = None
    if c_lo <= c_hi:
        hyp = (c_lo, min(c_hi, A.d))
    return intervals, ParabolicSubgroup(A.d, sym, hyp)


def parabolic_of_matrix(A):
    return blocks_of_matrix(A)[1]


def leq_order(A, B):
    """The closure order: prefix-suffix sums dominate, same row/col sums."""
    if A.n != B.n or A.d != B.d:
        return False
    if A.ro() != B.ro() or A.co() != B.co():
        return False
    N = A.N
    for i in range(1, N):
        for j in range(i + 1, N + 1):
            a = sum(A[r, s] for r in range(1, i + 1) for s in range(j, N + 1))
            b = sum(B[r, s] for r in range(1, i + 1) for s in range(j, N + 1))
            if a > b:
                return False
    return True


def _e_theta_cells(N, i, j):
    """Cells of E^theta_{ij} with multiplicity (center cell doubles)."""
    cells = {}
    for ci, cj in ((i, j), (N + 1 - i, N + 1 - j)):
        cells[(ci, cj)] = cells.get((ci, cj), 0) + 1
    return cells


def e_theta(i, j, v, a):
    """The matrix E^theta_{ij}(v, a) = diag(v) + a*E^theta_{ij}."""
    N = v.N
    if not (1 <= i <= N and 1 <= j <= N):
        raise IndexOutOfRange("cell (%d, %d) outside [1, %d]^2" % (i, j, N))
    if a < 0:
        raise ValueError("multiplicity a must be nonnegative")
    rows = [[0] * N for _ in range(N)]
    for k in range(N):
        rows[k][k] = v.entries[k]
    if a:
        for (ci, cj), mult in _e_theta_cells(N, i, j).items():
            rows[ci - 1][cj - 1] += a * mult
    return OrbitMatrix(v.n, rows)


def detect_elementary(A):
    """Recognize A = E^theta_{h,h+1}(v, a); returns (h, a, v) or None.

    Diagonal matrices are reported as (None, 0, ro(A)).
    """
    N = A.N
    off = [
        (i, j)
        for i in range(1, N + 1)
        for j in range(1, N + 1)
        if i != j and A[i, j] != 0
    ]
    if not off:
        return None, 0, A.ro()
    if len(off) != 2:
        return None
    for h in range(1, N):
        cells = _e_theta_cells(N, h, h + 1)
        vals = {A[c] for c in cells}
        if len(vals) != 1:
            continue
        a = vals.pop()
        if a == 0:
            continue
        expected = {c: a * m for c, m in cells.items()}
        ok = all(
            A[i, j] == expected.get((i, j), 0)
            for i in range(1, N + 1)
            for j in range(1, N + 1)
            if i != j
        )
        if not ok:
            continue
        diag = [A.entries[k][k] for k in range(N)]
        v = WeightVec.try_make(A.n, diag)
        if v is None:
            continue
        return h, a, v
    return None


def _add_cells(base_rows, cells, coeff):
    for (ci, cj), m in cells.items():
        base_rows[ci - 1][cj - 1] += coeff * m


def _compositions(total, slots):
    """All nonnegative integer vectors of the given length and sum."""
    if slots == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


def _build_candidate(B, h, s):
    """B + sum_j s_j (E^theta_{hj} - E^theta_{h+1,j}), or None if negative."""
    N = B.N
    rows = [list(r) for r in B.entries]
    for j in range(1, N + 1):
        if s[j - 1] == 0:
            continue
        _add_cells(rows, _e_theta_cells(N, h, j), s[j - 1])
        _add_cells(rows, _e_theta_cells(N, h + 1, j), -s[j - 1])
    if any(x < 0 for r in rows for x in r):
        return None
    return OrbitMatrix(B.n, rows)


def compose_set(A, B):
    """The set M(A, B) for A = E^theta_{h,h+1}(v, a), as a sorted list."""
    if A.n != B.n or A.d != B.d:
        raise RowColMismatch("matrices live in different Xi_d")
    if A.co() != B.ro():
        raise RowColMismatch("co(A) = %s but ro(B) = %s" % (A.co(), B.ro()))
    det = detect_elementary(A)
    if det is None:
        raise ValueError("A is not of the form E^theta_{h,h+1}(v, a)")
    h, a, _ = det
    if a == 0:
        return [B]
    N = A.N
    n = A.n
    out = set()
    if h == n:
        for s in _compositions(a, N):
            ok = True
            for j in range(1, N + 1):
                if s[j - 1] + s[N - j] > B[n + 1, j]:
                    ok = False
                    break
            if not ok:
                continue
            C = _build_candidate(B, h, s)
            if C is not None:
                out.add(C)
    else:
        for s in _compositions(a, N):
            if all(s[j - 1] <= B[h + 1, j] for j in range(1, N + 1)):
                C = _build_candidate(B, h, s)
                if C is not None:
                    out.add(C)
        if h == n + 1:
            # the proof's separate analysis for this case: constraints read off
            # row n (mirrored), which theta-symmetry makes identical
            alt = set()
            for s in _compositions(a, N):
                if all(s[j - 1] <= B[n, N + 1 - j] for j in range(1, N + 1)):
                    C = _build_candidate(B, h, s)
                    if C is not None:
                        alt.add(C)
            if alt != out:
                raise AssertionError(
                    "composition constraints disagree between the two readings"
                )
    return sorted(out)


def compose_max(A, B):
    """The unique maximum A o B of M(A, B) under the closure order."""
    members = compose_set(A, B)
    maxima = [
        C
        for C in members
        if all(leq_order(D, C) for D in members)
    ]
    if len(maxima) != 1:
        raise NoUniqueMax(
            "%d dominating elements in a %d-element composition set"
            % (len(maxima), len(members))
        )
    return maxima[0]


def enum_xi(n, d, ro=None, co=None):
    """All of Xi_d (optionally restricted to given row/column types), sorted."""
    N = 2 * n + 1
    center = (n + 1, n + 1)
    pairs = []
    seen = set()
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            if (i, j) in seen or (i, j) == center:
                continue
            m = (N + 1 - i, N + 1 - j)
            seen.add((i, j))
            seen.add(m)
            pairs.append((i, j))
    out = []
    for comp in _compositions(d, len(pairs) + 1):
        rows = [[0] * N for _ in range(N)]
        for (i, j), t in zip(pairs, comp[:-1]):
            rows[i - 1][j - 1] += t
            rows[N - i][N - j] += t
        rows[n][n] += 2 * comp[-1]
        A = OrbitMatrix(n, rows)
        if ro is not None and A.ro() != ro:
            continue
        if co is not None and A.co() != co:
            continue
        out.append(A)
    out.sort()
    return out


def rightlex_pivot(C):
    """(h, l): the right-lexicographically last above-diagonal nonzero cell."""
    best = None
    for i in range(1, C.N + 1):
        for j in range(i + 1, C.N + 1):
            if C[i, j] != 0:
                if best is None or (j, i) > (best[1], best[0]):
                    best = (i, j)
    return best


def factorize_elementary(C):
    """Split a nondiagonal C as (A, B) with compose_max(A, B) = C.

    Returns (A, B) built from the pivot (h, l): B removes the pivot entry to
    the row below, A is the elementary matrix restoring it.
    """
    pivot = rightlex_pivot(C)
    if pivot is None:
        raise ValueError("C is diagonal; nothing to factorize")
    h, l = pivot
    c = C[h, l]
    N = C.N
    rows = [list(r) for r in C.entries]
    _add_cells(rows, _e_theta_cells(N, h + 1, l), c)
    _add_cells(rows, _e_theta_cells(N, h, l), -c)
    B = OrbitMatrix(C.n, rows)
    v = C.ro().entries
    adjusted = list(v)
    adjusted[h - 1] -= c
    adjusted[N - h] -= c
    A = e_theta(h, h + 1, WeightVec(C.n, adjusted), c)
    return A, B
