"""Finitely generated abelian grading groups, bicharacters and braided objects.

A grading group is Z^r + Z_{m_1} + ... + Z_{m_t}.  Degrees carry exact
rational coordinates on the free part (weights like c*alpha with c in Q are
first-class citizens) and reduced integer residues on the torsion part.

A bicharacter is given by a rational exponent matrix A with
    sigma(e_i, e_j) = exp(pi*i*A[i][j])
extended bimultiplicatively.  On torsion generators well-definedness is a
genuine constraint: by default construction rejects exponent matrices that
cannot give a bimultiplicative sigma (only the quadratic form Q and the
monodromy B survive in those cases, which is exactly what discriminant-form
data carries).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .cyclotomic import CycNum, exp_pi_i, format_fraction, parse_fraction


class GradingGroup:
    """Z^free_rank plus cyclic factors of the given torsion orders."""

    def __init__(self, free_rank: int, torsion: Sequence[int] = ()):
        if free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        torsion = tuple(int(m) for m in torsion)
        if any(m < 2 for m in torsion):
            raise ValueError("torsion orders must be >= 2")
        self.free_rank = free_rank
        self.torsion = torsion

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion)

    def degree(self, free: Sequence[Fraction | int] = (), torsion: Sequence[int] = ()) -> "Degree":
        return Degree(self, free, torsion)

    def zero(self) -> "Degree":
        return Degree(self, [0] * self.free_rank, [0] * len(self.torsion))

    def generator(self, i: int) -> "Degree":
        free = [Fraction(0)] * self.free_rank
        tors = [0] * len(self.torsion)
        if i < self.free_rank:
            free[i] = Fraction(1)
        else:
            tors[i - self.free_rank] = 1
        return Degree(self, free, tors)

    def __eq__(self, other):
        return (
            isinstance(other, GradingGroup)
            and self.free_rank == other.free_rank
            and self.torsion == other.torsion
        )

    def __hash__(self):
        return hash((self.free_rank, self.torsion))

    def __repr__(self):
        parts = ["Z"] * self.free_rank + [f"Z{m}" for m in self.torsion]
        return " x ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    @staticmethod
    def from_json(data: dict) -> "GradingGroup":
        return GradingGroup(int(data["free_rank"]), data.get("torsion", ()))


class Degree:
    """A group element: rational free coordinates, reduced torsion residues."""

    __slots__ = ("group", "free", "torsion")

    def __init__(self, group: GradingGroup, free: Sequence[Fraction | int] = (), torsion: Sequence[int] = ()):
        free = tuple(Fraction(x) for x in free)
        torsion = tuple(int(x) for x in torsion)
        if len(free) != group.free_rank or len(torsion) != len(group.torsion):
            raise ValueError("degree has wrong number of coordinates")
        self.group = group
        self.free = free
        self.torsion = tuple(x % m for x, m in zip(torsion, group.torsion))

    def coords(self) -> tuple[Fraction, ...]:
        return self.free + tuple(Fraction(x) for x in self.torsion)

    def __add__(self, other: "Degree") -> "Degree":
        self._check(other)
        return Degree(
            self.group,
            [a + b for a, b in zip(self.free, other.free)],
            [a + b for a, b in zip(self.torsion, other.torsion)],
        )

    def __sub__(self, other: "Degree") -> "Degree":
        self._check(other)
        return Degree(
            self.group,
            [a - b for a, b in zip(self.free, other.free)],
            [a - b for a, b in zip(self.torsion, other.torsion)],
        )

    def __neg__(self) -> "Degree":
        return Degree(self.group, [-a for a in self.free], [-a for a in self.torsion])

    def scale(self, c: int) -> "Degree":
        return Degree(self.group, [c * a for a in self.free], [c * a for a in self.torsion])

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.free) and all(a == 0 for a in self.torsion)

    def _check(self, other: "Degree"):
        if self.group != other.group:
            raise ValueError("degrees live in different grading groups")

    def __eq__(self, other):
        return (
            isinstance(other, Degree)
            and self.group == other.group
            and self.free == other.free
            and self.torsion == other.torsion
        )

    def __hash__(self):
        return hash((self.group, self.free, self.torsion))

    def __repr__(self):
        items = [format_fraction(x) for x in self.free] + [str(x) for x in self.torsion]
        return "(" + ", ".join(items) + ")"

    def to_json(self) -> list[str]:
        return [format_fraction(x) for x in self.coords()]


class Bicharacter:
    """sigma(lambda, mu) = exp(pi*i * lambda^T A mu) on a grading group.

    With ``strict=True`` (default) construction rejects exponent matrices for
    which sigma is not well defined on torsion coordinates; such data still
    defines a quadratic form Q and monodromy B, so pass ``strict=False`` to
    keep those (braiding values then exist only where representative-stable,
    e.g. Q(lambda) = sigma(lambda, lambda)).

    Torsion well-definedness is enforced against integer coordinates in the
    other slot.  Rational free coordinates are fine on purely free groups
    (the generic-weight regime); pairing fractional free weights against
    torsion generators with nonzero cross exponents is representative-
    dependent and should be avoided.
    """

    def __init__(self, group: GradingGroup, exponents: Sequence[Sequence[Fraction | int]], strict: bool = True):
        n = group.ngens
        rows = [tuple(Fraction(x) for x in row) for row in exponents]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError("exponent matrix has wrong shape")
        self.group = group
        self.exponents = tuple(rows)
        self.strict = strict
        r = group.free_rank
        for jt, m in enumerate(group.torsion):
            j = r + jt
            for i in range(n):
                if strict:
                    if (m * rows[i][j]) % 2 != 0 or (m * rows[j][i]) % 2 != 0:
                        raise ValueError(
                            f"sigma is not bimultiplicative on torsion generator {j} "
                            f"(order {m}): exponent {rows[i][j]} fails m*a in 2Z"
                        )
                else:
                    if (m * (rows[i][j] + rows[j][i])) % 2 != 0:
                        raise ValueError(
                            f"monodromy not well defined on torsion generator {j}"
                        )
            if not strict and (m * m * rows[j][j]) % 2 != 0:
                raise ValueError(f"quadratic form not well defined on torsion generator {j}")

    def _pair_exponent(self, lam: Degree, mu: Degree) -> Fraction:
        acc = Fraction(0)
        lc, mc = lam.coords(), mu.coords()
        for i, a in enumerate(lc):
            if a == 0:
                continue
            row = self.exponents[i]
            for j, b in enumerate(mc):
                if b != 0:
                    acc += a * row[j] * b
        return acc

    def _stable(self, lam: Degree, mu: Degree) -> bool:
        """Is sigma(lam, mu) independent of the torsion representatives?"""
        r = self.group.free_rank
        lc, mc = lam.coords(), mu.coords()
        for jt, m in enumerate(self.group.torsion):
            j = r + jt
            shift_l = m * sum(self.exponents[j][k] * mc[k] for k in range(len(mc)))
            shift_r = m * sum(lc[k] * self.exponents[k][j] for k in range(len(lc)))
            if shift_l % 2 != 0 or shift_r % 2 != 0:
                return False
        return True

    def braiding_value(self, lam: Degree, mu: Degree) -> CycNum:
        """sigma(lam, mu) as an exact root of unity (times a sign)."""
        if lam.group != self.group or mu.group != self.group:
            raise ValueError("degrees live in a different grading group")
        if not self.strict and not self._stable(lam, mu):
            if lam == mu:
                return self.quadratic_form(lam)
            raise ValueError(
                "braiding value not well defined for these torsion degrees; "
                "only Q and B survive on this carrier"
            )
        return exp_pi_i(self._pair_exponent(lam, mu))

    def quadratic_form(self, lam: Degree) -> CycNum:
        """Q(lam) = sigma(lam, lam); well defined also in the relaxed regime."""
        if lam.group != self.group:
            raise ValueError("degree lives in a different grading group")
        return exp_pi_i(self._pair_exponent(lam, lam))

    def monodromy(self, lam: Degree, mu: Degree) -> CycNum:
        """B(lam, mu) = sigma(lam, mu) sigma(mu, lam); symmetric."""
        if lam.group != self.group or mu.group != self.group:
            raise ValueError("degrees live in a different grading group")
        return exp_pi_i(self._pair_exponent(lam, mu) + self._pair_exponent(mu, lam))

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "exponents": [[format_fraction(x) for x in row] for row in self.exponents],
            "strict": self.strict,
        }

    @staticmethod
    def from_json(data: dict) -> "Bicharacter":
        group = GradingGroup.from_json(data["group"])
        rows = [[parse_fraction(str(x)) for x in row] for row in data["exponents"]]
        return Bicharacter(group, rows, strict=bool(data.get("strict", True)))


class BraidedObject:
    """A direct sum of lines in Vect_Gamma: degrees gamma_1..gamma_n plus the
    ambient bicharacter, inducing the diagonal braiding matrix
    q_ij = sigma(gamma_i, gamma_j)."""

    def __init__(self, bichar: Bicharacter, degrees: Sequence[Degree]):
        for d in degrees:
            if d.group != bichar.group:
                raise ValueError("generator degree outside the grading group")
        self.bichar = bichar
        self.degrees = tuple(degrees)

    @property
    def rank(self) -> int:
        return len(self.degrees)

    def braid_matrix(self) -> list[list[CycNum]]:
        return [
            [self.bichar.braiding_value(a, b) for b in self.degrees]
            for a in self.degrees
        ]

    def self_braidings(self) -> list[CycNum]:
        return [self.bichar.quadratic_form(d) for d in self.degrees]

    def to_json(self) -> dict:
        """Flat schema: {group, exponents, degrees}, all numbers exact strings."""
        return {
            "group": self.bichar.group.to_json(),
            "exponents": [[format_fraction(x) for x in row]
                          for row in self.bichar.exponents],
            "strict": self.bichar.strict,
            "degrees": [d.to_json() for d in self.degrees],
        }

    @staticmethod
    def from_json(data: dict) -> "BraidedObject":
        if "bicharacter" in data:
            bichar = Bicharacter.from_json(data["bicharacter"])
        else:
            bichar = Bicharacter.from_json({
                "group": data["group"],
                "exponents": data["exponents"],
                "strict": data.get("strict", True),
            })
        group = bichar.group
        degs = []
        for row in data["degrees"]:
            coords = [parse_fraction(str(x)) for x in row]
            free = coords[: group.free_rank]
            tors = [int(x) for x in coords[group.free_rank:]]
            degs.append(Degree(group, free, tors))
        return BraidedObject(bichar, degs)


def diagonal_object(qexp: Sequence[Sequence[Fraction | int]]) -> BraidedObject:
    """Braided object on a free group of rank n with generator i in degree e_i
    and sigma(e_i, e_j) = exp(pi*i*qexp[i][j])."""
    n = len(qexp)
    group = GradingGroup(n)
    bichar = Bicharacter(group, qexp)
    degs = [group.generator(i) for i in range(n)]
    return BraidedObject(bichar, degs)


# -- stock braidings used throughout ---------------------------------------


def rank1_object(p: int) -> BraidedObject:
    """One generator of self-braiding exp(2*pi*i/p) on a rank-1 free group
    (degree coordinate measured in units of the generator's weight)."""
    return diagonal_object([[Fraction(2, p)]])


def cartan_a2_object(p: int) -> BraidedObject:
    """Two generators with q_ii = q^2, q_12 = q_21 = q^(-1), q = exp(pi*i/p),
    so q^2 has order p (the A2 Cartan braiding)."""
    a = Fraction(2, p)
    b = Fraction(-1, p)
    return diagonal_object([[a, b], [b, a]])


def parabolic2_object(p: int) -> BraidedObject:
    """Rank-2 braiding [[q^2, q^-1], [q^-1, -1]] with q = exp(pi*i/p)."""
    return diagonal_object([[Fraction(2, p), Fraction(-1, p)], [Fraction(-1, p), Fraction(1)]])


def fermionic2_object() -> BraidedObject:
    """Two odd generators: q_11 = q_22 = -1 and trivial mutual monodromy."""
    return diagonal_object([[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]])
