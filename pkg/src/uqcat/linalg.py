"""Dense exact linear algebra over CycNum scalars.

Matrices are lists of row lists.  Pivoting is deterministic: rows are
consumed top-down and the pivot is the first nonzero column, so identical
inputs give identical echelon forms on every run.
"""

from __future__ import annotations

from typing import Hashable, Optional, Sequence

from .cyclotomic import CycNum


def _is_zero(x: CycNum) -> bool:
    return x.is_zero()


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    zero = CycNum.zero()
    out = [[zero for _ in range(m)] for _ in range(n)]
    for i in range(n):
        ai = a[i]
        row = out[i]
        for t in range(k):
            c = ai[t]
            if c.is_zero():
                continue
            bt = b[t]
            for j in range(m):
                if not bt[j].is_zero():
                    row[j] = row[j] + c * bt[j]
    return out


def mat_vec(a, v):
    zero = CycNum.zero()
    out = []
    for row in a:
        acc = zero
        for c, x in zip(row, v):
            if not c.is_zero() and not x.is_zero():
                acc = acc + c * x
        out.append(acc)
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[c * x for x in row] for row in a]


def identity(n):
    one, zero = CycNum.one(), CycNum.zero()
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def zeros(n, m):
    zero = CycNum.zero()
    return [[zero for _ in range(m)] for _ in range(n)]


def kron(a, b):
    """Kronecker product, index (i,j) -> i*len(b)+j."""
    n, m = len(a), len(a[0]) if a else 0
    p, q = len(b), len(b[0]) if b else 0
    zero = CycNum.zero()
    out = [[zero for _ in range(m * q)] for _ in range(n * p)]
    for i in range(n):
        for j in range(m):
            c = a[i][j]
            if c.is_zero():
                continue
            for k in range(p):
                for l in range(q):
                    if not b[k][l].is_zero():
                        out[i * p + k][j * q + l] = c * b[k][l]
    return out


def rref(matrix):
    """Reduced row echelon form.

    Returns (rows, pivot_columns); zero rows are dropped.
    """
    rows = [list(r) for r in matrix]
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if not rows[i][c].is_zero():
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inv()
        rows[r] = [inv * x for x in rows[r]]
        for i in range(m):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return rows[:r], pivots


def rank(matrix) -> int:
    if not matrix:
        return 0
    return len(rref(matrix)[0])


def nullspace(matrix):
    """Basis of the right kernel {x : A x = 0}, one vector per free column."""
    if not matrix:
        return []
    n = len(matrix[0])
    rows, pivots = rref(matrix)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    one, zero = CycNum.one(), CycNum.zero()
    for f in free:
        vec = [zero] * n
        vec[f] = one
        for i, p in enumerate(pivots):
            vec[p] = -rows[i][f]
        basis.append(vec)
    return basis


def solve(matrix, rhs):
    """One solution of A x = b, or None if inconsistent."""
    if not matrix:
        return None if any(not x.is_zero() for x in rhs) else []
    n = len(matrix[0])
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = rref(aug)
    zero = CycNum.zero()
    for row in rows:
        if all(row[c].is_zero() for c in range(n)) and not row[n].is_zero():
            return None
    x = [zero] * n
    for i, p in enumerate(pivots):
        if p == n:
            return None
        x[p] = rows[i][n]
    return x


def invert(matrix):
    """Matrix inverse; returns None when singular."""
    n = len(matrix)
    aug = [list(row) + list(idr) for row, idr in zip(matrix, identity(n))]
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in rows[:n]]


def is_invertible(matrix) -> bool:
    n = len(matrix)
    return n == 0 or rank(matrix) == n


class SpanTracker:
    """Incremental row space with coordinate and kernel bookkeeping.

    Vectors are sparse dicts ``key -> CycNum`` over an ordered key universe.
    ``insert(key0, vec)`` reduces ``vec`` against the reduced rows collected
    so far; a nonzero remainder becomes a new basis row (its raw, unreduced
    form is remembered as the basis representative).  When the remainder is
    zero the tracked combination of inserted raw vectors is reported as a
    kernel element.
    """

    def __init__(self, key_order: Sequence[Hashable]):
        self.key_pos = {k: i for i, k in enumerate(key_order)}
        self.keys = list(key_order)
        self.raw_rows: list[dict] = []      # unreduced basis representatives
        self.raw_labels: list[Hashable] = []
        self.red_rows: list[dict] = []      # reduced (echelon) forms
        self.red_pivots: list[Hashable] = []
        self.conv: list[list[CycNum]] = []  # red_rows[j] = sum conv[j][i] raw_rows[i]

    def rank(self) -> int:
        return len(self.raw_rows)

    def _leading(self, vec: dict) -> Optional[Hashable]:
        best = None
        bestpos = None
        for k, v in vec.items():
            if v.is_zero():
                continue
            pos = self.key_pos[k]
            if bestpos is None or pos < bestpos:
                best, bestpos = k, pos
        return best

    def _reduce(self, vec: dict):
        """Reduce vec against reduced rows; returns (remainder, coeffs)."""
        vec = {k: v for k, v in vec.items() if not v.is_zero()}
        coeffs = [CycNum.zero() for _ in self.red_rows]
        for j, row in enumerate(self.red_rows):
            piv = self.red_pivots[j]
            c = vec.get(piv)
            if c is None or c.is_zero():
                continue
            coeffs[j] = c
            for k, v in row.items():
                newv = vec.get(k, CycNum.zero()) - c * v
                if newv.is_zero():
                    vec.pop(k, None)
                else:
                    vec[k] = newv
        return vec, coeffs

    def coords_in_raw(self, coeffs) -> list[CycNum]:
        out = [CycNum.zero() for _ in self.raw_rows]
        for j, c in enumerate(coeffs):
            if c.is_zero():
                continue
            for i, a in enumerate(self.conv[j]):
                if not a.is_zero():
                    out[i] = out[i] + c * a
        return out

    def insert(self, label: Hashable, vec: dict):
        """Insert a raw vector.

        Returns ("new", coords) when the vector enlarged the span (coords
        express it over the raw basis, ending with coefficient 1 on itself),
        or ("dep", coords) when vec = sum coords[i] * raw_rows[i].
        """
        rem, coeffs = self._reduce(vec)
        raw_coords = self.coords_in_raw(coeffs)
        if not rem:
            return "dep", raw_coords
        piv = self._leading(rem)
        scale = rem[piv].inv()
        red = {k: scale * v for k, v in rem.items()}
        self.raw_rows.append({k: v for k, v in vec.items() if not v.is_zero()})
        self.raw_labels.append(label)
        self.red_rows.append(red)
        self.red_pivots.append(piv)
        conv_row = [(-scale) * c for c in raw_coords] + [scale]
        for prev in self.conv:
            prev.append(CycNum.zero())
        self.conv.append(conv_row)
        raw_coords = [CycNum.zero()] * (len(self.raw_rows) - 1) + [CycNum.one()]
        return "new", raw_coords

    def express(self, vec: dict):
        """Coordinates of vec over the raw basis rows, or None if outside."""
        rem, coeffs = self._reduce(vec)
        if rem:
            return None
        return self.coords_in_raw(coeffs)
