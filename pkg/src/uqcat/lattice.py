"""Lattices in a rational quadratic space: duals, evenness, discriminant forms.

A lattice is a list of independent basis vectors inside Q^r equipped with a
symmetric rational bilinear form G.  Irrational classical data like sqrt(2p)*Z
is encoded rationally by putting the normalization into G (ambient form (2p)
with basis vector 1).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .cyclotomic import CycNum, exp_pi_i, format_fraction
from .grading import Bicharacter, Degree, GradingGroup


def _frac_matrix(rows) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in rows]


def _frac_mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n):
        for t in range(k):
            c = a[i][t]
            if c:
                for j in range(m):
                    out[i][j] += c * b[t][j]
    return out


def _frac_transpose(a):
    return [list(col) for col in zip(*a)]


def _frac_invert(a):
    n = len(a)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            return None
        aug[c], aug[piv] = aug[piv], aug[c]
        s = aug[c][c]
        aug[c] = [x / s for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def _frac_rank(a):
    rows = [list(r) for r in a]
    m = len(rows)
    n = len(rows[0]) if m else 0
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        s = rows[r][c]
        rows[r] = [x / s for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def _frac_det(a):
    n = len(a)
    rows = [list(r) for r in a]
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        det *= rows[c][c]
        inv = rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] / inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return det


def smith_normal_form(matrix: Sequence[Sequence[int]]):
    """Smith normal form over Z with transforms: U * M * V = S.

    Pivot selection is smallest-absolute-value-first, leftmost on ties, so
    the result is reproducible.  Returns (U, S, V) with S diagonal and
    d_1 | d_2 | ... nonnegative.
    """
    a = [[int(x) for x in row] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_op(i, j, q):  # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in range(m):
            a[r][i] -= q * a[r][j]
        for r in range(n):
            v[r][i] -= q * v[r][j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in range(m):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        for r in range(n):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    t = 0
    while t < min(m, n):
        # smallest nonzero pivot in the trailing block, leftmost/topmost ties
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = abs(a[i][j])
                if x and (best is None or x < best[0]):
                    best = (x, i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            swap_rows(t, bi)
        if bj != t:
            swap_cols(t, bj)
        dirty = False
        for i in range(t + 1, m):
            if a[i][t]:
                q = a[i][t] // a[t][t]
                row_op(i, t, q)
                if a[i][t]:
                    dirty = True
        for j in range(t + 1, n):
            if a[t][j]:
                q = a[t][j] // a[t][t]
                col_op(j, t, q)
                if a[t][j]:
                    dirty = True
        if dirty:
            continue
        # enforce divisibility d_t | a[i][j]
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % a[t][t]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_op(t, offender, -1)
            continue
        t += 1
    for i in range(min(m, n)):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]
    return u, a, v


class Lattice:
    """Basis vectors (rational rows) in (Q^r, G)."""

    def __init__(self, form: Sequence[Sequence[Fraction | int]], basis: Sequence[Sequence[Fraction | int]]):
        self.form = _frac_matrix(form)
        r = len(self.form)
        for i in range(r):
            for j in range(r):
                if self.form[i][j] != self.form[j][i]:
                    raise ValueError("bilinear form must be symmetric")
        self.basis = _frac_matrix(basis)
        if any(len(row) != r for row in self.basis):
            raise ValueError("basis vectors have wrong length")
        if _frac_rank(self.basis) != len(self.basis):
            raise ValueError("basis vectors must be linearly independent")

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def ambient_dim(self) -> int:
        return len(self.form)

    def pairing(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        acc = Fraction(0)
        for i, xi in enumerate(x):
            if xi:
                row = self.form[i]
                for j, yj in enumerate(y):
                    if yj:
                        acc += xi * row[j] * yj
        return acc

    def gram(self) -> list[list[Fraction]]:
        return [[self.pairing(a, b) for b in self.basis] for a in self.basis]

    def is_even(self) -> bool:
        """True iff all (a,a) are even integers and all (a,b) are integers."""
        g = self.gram()
        n = len(g)
        for i in range(n):
            if g[i][i].denominator != 1 or g[i][i].numerator % 2:
                return False
            for j in range(n):
                if g[i][j].denominator != 1:
                    return False
        return True

    def even_violation(self):
        """(kind, index) for the first basis vector violating evenness."""
        g = self.gram()
        n = len(g)
        for i in range(n):
            for j in range(n):
                if g[i][j].denominator != 1:
                    return ("non-integral pairing", i, j)
        for i in range(n):
            if g[i][i].numerator % 2:
                return ("odd norm", i, i)
        return None

    def dual_lattice(self) -> "Lattice":
        """{x in span(L) : (x, a) in Z for all a in L}, via the inverse Gram."""
        g = self.gram()
        ginv = _frac_invert(g)
        if ginv is None:
            raise ValueError("degenerate Gram matrix has no dual")
        dual_basis = _frac_mat_mul(ginv, self.basis)
        return Lattice(self.form, dual_basis)

    def member_coords(self, vec: Sequence[Fraction]):
        """Coordinates of vec over the basis if vec lies in span(L) with the
        right pairing data; None otherwise.  (Solves with the Gram matrix.)"""
        g = self.gram()
        ginv = _frac_invert(g)
        if ginv is None:
            raise ValueError("degenerate Gram matrix")
        pair = [[self.pairing(b, vec)] for b in self.basis]
        coords = _frac_mat_mul(ginv, pair)
        flat = [c[0] for c in coords]
        recon = [sum((flat[i] * self.basis[i][j] for i in range(self.rank)), Fraction(0))
                 for j in range(self.ambient_dim)]
        if list(recon) != [Fraction(x) for x in vec]:
            return None
        return flat

    def contains(self, vec: Sequence[Fraction]) -> bool:
        coords = self.member_coords(vec)
        return coords is not None and all(c.denominator == 1 for c in coords)

    def __eq__(self, other):
        if not isinstance(other, Lattice) or self.form != other.form:
            return NotImplemented
        return all(other.contains(b) for b in self.basis) and all(
            self.contains(b) for b in other.basis
        )

    def discriminant_form(self) -> "DiscriminantForm":
        """The finite quadratic group L*/L for an even integral lattice."""
        bad = self.even_violation()
        if bad is not None:
            kind, i, j = bad
            raise ValueError(
                f"discriminant form needs an even integral lattice; {kind} at basis vector {i}"
                + ("" if i == j else f" against {j}")
            )
        return DiscriminantForm(self)

    def to_json(self) -> dict:
        return {
            "form": [[format_fraction(x) for x in row] for row in self.form],
            "basis": [[format_fraction(x) for x in row] for row in self.basis],
        }

    @staticmethod
    def from_json(data: dict) -> "Lattice":
        return Lattice(
            [[Fraction(str(x)) for x in row] for row in data["form"]],
            [[Fraction(str(x)) for x in row] for row in data["basis"]],
        )


class DiscriminantForm:
    """L*/L with the induced quadratic form.

    The quotient is computed from the Smith normal form of the Gram matrix
    (the coordinates of the L-basis over the dual basis).  Generators are
    explicit vectors in the ambient space, the exponent data on them is the
    relaxed (quadratic-form-only) carrier: sigma itself need not descend."""

    def __init__(self, lattice: Lattice):
        self.lattice = lattice
        self.dual = lattice.dual_lattice()
        gram = lattice.gram()
        m = [[int(x) for x in row] for row in gram]
        u, s, v = smith_normal_form(m)
        self._u = u
        diag = [s[i][i] for i in range(len(s))]
        self._diag = diag
        orders = [d for d in diag if d > 1]
        self.group = GradingGroup(0, orders)
        uinv = _frac_invert(_frac_matrix(u))
        gens = []
        for i, d in enumerate(diag):
            if d <= 1:
                continue
            coords = [uinv[j][i] for j in range(len(diag))]
            vec = [sum((coords[j] * self.dual.basis[j][k] for j in range(len(coords))), Fraction(0))
                   for k in range(lattice.ambient_dim)]
            gens.append(vec)
        self.generators = gens

    def order(self) -> int:
        n = 1
        for d in self._diag:
            n *= max(d, 1)
        return n

    def class_of(self, vec: Sequence[Fraction]) -> Degree:
        """Image of a dual-lattice vector in L*/L as a Degree."""
        coords = self.dual.member_coords(vec)
        if coords is None or any(c.denominator != 1 for c in coords):
            raise ValueError("vector does not lie in the dual lattice")
        ints = [c.numerator for c in coords]
        y = [sum(self._u[i][j] * ints[j] for j in range(len(ints))) for i in range(len(ints))]
        tors = [y[i] % d for i, d in enumerate(self._diag) if d > 1]
        return Degree(self.group, [], tors)

    def representative(self, cls: Degree) -> list[Fraction]:
        vec = [Fraction(0)] * self.lattice.ambient_dim
        for g, c in zip(self.generators, cls.torsion):
            for k in range(len(vec)):
                vec[k] += c * g[k]
        return vec

    def q_value(self, cls: Degree) -> CycNum:
        """Induced quadratic form Q(class) = exp(pi*i (v, v)) on a representative."""
        v = self.representative(cls)
        return exp_pi_i(self.lattice.pairing(v, v))

    def exponent_matrix(self) -> list[list[Fraction]]:
        return [[self.lattice.pairing(a, b) for b in self.generators] for a in self.generators]

    def quadratic_carrier(self) -> Bicharacter:
        """Relaxed bicharacter carrying Q and B on the quotient group."""
        return Bicharacter(self.group, self.exponent_matrix(), strict=False)

    def enumerate_q_values(self, limit: int = 4096) -> list[CycNum]:
        """Q on all elements (torsion-lex order); guarded by a size limit."""
        if self.order() > limit:
            raise ValueError("discriminant group too large to enumerate")
        out = []
        def rec(prefix):
            i = len(prefix)
            if i == len(self.group.torsion):
                out.append(self.q_value(Degree(self.group, [], prefix)))
                return
            for c in range(self.group.torsion[i]):
                rec(prefix + [c])
        rec([])
        return out


def rescaled_line(scale: Fraction | int) -> Lattice:
    """The rank-1 lattice Z*v with (v, v) = scale (e.g. sqrt(2p)Z as scale 2p)."""
    return Lattice([[Fraction(scale)]], [[1]])


def triplet_lattice(p: int) -> Lattice:
    """sqrt(2p) Z, encoded with ambient form (2p) and basis vector 1."""
    return rescaled_line(2 * p)
