"""Structured names for the simple/standard/projective objects at level p.

The grid labels are M(r,s) for 1 <= s <= p (simple), F(r,s) and Fbar(r,s)
for s != p (the two length-2 standard objects), P(r,s) for s != p (the
projective cover), plus F(lam) for a typical weight lam, an exact rational
measured in units of the degree step alpha of the rank-1 generator.

Weight bookkeeping:
    alpha(r, s) = (p (r-1) / 2 + (1 - s) / 2) * alpha
is the grid weight, atypical means 2*lam is an integer, and the canonical
form of a label resolves grid collisions: F at an atypical weight becomes
the corresponding grid F (or plain M(r,p) when s = p, where the simple is
already projective); P(r,p) likewise means that simple projective.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .cyclotomic import format_fraction, parse_fraction

KINDS = ("M", "F", "Fbar", "P", "Ftyp")


def alpha_rs(p: int, r: int, s: int) -> Fraction:
    """Grid weight alpha_(r,s) in alpha units."""
    return Fraction(p * (r - 1), 2) + Fraction(1 - s, 2)


def atypical_params(p: int, lam: Fraction) -> Optional[tuple[int, int]]:
    """(r, s) with alpha_(r,s) = lam, or None when lam is typical."""
    lam = Fraction(lam)
    t = 2 * lam
    if t.denominator != 1:
        return None
    t = t.numerator
    s = (-t) % p + 1
    r_num = t - 1 + s
    if r_num % p:
        return None
    return (r_num // p + 1, s)


class SingletLabel:
    """Canonical object label at level p."""

    __slots__ = ("kind", "r", "s", "lam")

    def __init__(self, kind: str, r: int = 0, s: int = 0, lam: Fraction = Fraction(0)):
        self.kind = kind
        self.r = r
        self.s = s
        self.lam = Fraction(lam)

    def __eq__(self, other):
        return (
            isinstance(other, SingletLabel)
            and self.kind == other.kind
            and self.r == other.r
            and self.s == other.s
            and self.lam == other.lam
        )

    def __hash__(self):
        return hash((self.kind, self.r, self.s, self.lam))

    def sort_key(self):
        return (self.kind, self.r, self.s, self.lam)

    def __repr__(self):
        if self.kind == "Ftyp":
            return f"F:{format_fraction(self.lam)}"
        return f"{self.kind}:{self.r},{self.s}"

    def weight(self, p: int) -> Fraction:
        """The defining weight in alpha units (grid weight for grid labels)."""
        if self.kind == "Ftyp":
            return self.lam
        return alpha_rs(p, self.r, self.s)


def M(r: int, s: int) -> SingletLabel:
    return SingletLabel("M", r, s)


def F_grid(r: int, s: int) -> SingletLabel:
    return SingletLabel("F", r, s)


def Fbar(r: int, s: int) -> SingletLabel:
    return SingletLabel("Fbar", r, s)


def P(r: int, s: int) -> SingletLabel:
    return SingletLabel("P", r, s)


def F_weight(lam: Fraction) -> SingletLabel:
    return SingletLabel("Ftyp", lam=Fraction(lam))


def canonicalize(label: SingletLabel, p: int) -> SingletLabel:
    """Normal form at level p; raises on out-of-range labels."""
    if p < 2:
        raise ValueError("level p must be at least 2")
    k = label.kind
    if k == "Ftyp":
        rs = atypical_params(p, label.lam)
        if rs is None:
            return label
        r, s = rs
        if s == p:
            return M(r, p)
        return F_grid(r, s)
    if not 1 <= label.s <= p:
        raise ValueError(f"label {label} has s outside 1..{p}")
    if k == "M":
        return label
    if k in ("F", "Fbar", "P"):
        if label.s == p:
            # the s = p object is the simple projective in every guise
            return M(label.r, p)
        return label
    raise ValueError(f"unknown label kind {k}")


def is_simple(label: SingletLabel, p: int) -> bool:
    label = canonicalize(label, p)
    return label.kind in ("M", "Ftyp")


def parse_label(text: str, p: int) -> SingletLabel:
    """Parse 'M:r,s' | 'F:r,s' | 'F:c' (rational c) | 'Fbar:r,s' | 'P:r,s'."""
    text = text.strip()
    if ":" not in text:
        raise ValueError(f"malformed label {text!r}")
    kind, rest = text.split(":", 1)
    kind = kind.strip()
    if kind in ("M", "Fbar", "P") or (kind == "F" and "," in rest):
        parts = rest.split(",")
        if len(parts) != 2:
            raise ValueError(f"malformed label {text!r}")
        r, s = int(parts[0]), int(parts[1])
        base = {"M": M, "F": F_grid, "Fbar": Fbar, "P": P}[kind]
        return canonicalize(base(r, s), p)
    if kind == "F":
        return canonicalize(F_weight(parse_fraction(rest)), p)
    raise ValueError(f"unknown label kind {kind!r}")


# -- block chain in the style of the abstract atypical block ---------------
#
# Within the block of M(., s) the simples form a chain L_n; the two families
# of length-2 extensions and the projectives follow the parity pattern below.


def chain_simple(p: int, s: int, n: int) -> SingletLabel:
    return M(n, s) if n % 2 == 0 else M(n, p - s)


def chain_ext_plus(p: int, s: int, n: int) -> SingletLabel:
    return F_grid(n, s) if n % 2 == 0 else F_grid(n, p - s)


def chain_ext_minus(p: int, s: int, n: int) -> SingletLabel:
    return Fbar(n - 1, p - s) if n % 2 == 0 else Fbar(n - 1, s)


def chain_projective(p: int, s: int, n: int) -> SingletLabel:
    return P(n, s) if n % 2 == 0 else P(n, p - s)
