"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A ``CycNum`` is an element of Q(zeta_N) stored in the canonical power basis
1, z, ..., z^(phi(N)-1) with z = zeta_N = exp(2*pi*i/N), i.e. reduced modulo
the N-th cyclotomic polynomial.  Coefficients are kept as an integer vector
over a common positive denominator, so equality is a tuple comparison and no
floating point ever enters.

Mixed-order arithmetic embeds both operands into Q(zeta_lcm(N,M)) first.
All values are immutable; every operation returns a fresh object.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence


def parse_fraction(text: str) -> Fraction:
    """Parse an exact rational written as 'a' or 'a/b'."""
    return Fraction(text.strip())


def format_fraction(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficient tuple (low degree first) of the n-th cyclotomic
    polynomial, computed by exact division of x^n - 1 by all lower Phi_d."""
    if n < 1:
        raise ValueError("order must be a positive integer")
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divexact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (monic or +-1 leading divisor)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        if c % lead != 0:
            raise ArithmeticError("non-exact polynomial division")
        q = c // lead
        out[i] = q
        if q:
            for j, dj in enumerate(den):
                num[i + j] -= q * dj
    if any(num[: len(den) - 1]):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def _field_context(n: int):
    """Reduction data for Q(zeta_n): degree and the integer vectors of
    z^k mod Phi_n for k = deg .. 2*deg-2."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    # z^deg = -(phi[0] + phi[1] z + ... + phi[deg-1] z^(deg-1)), Phi monic.
    red: list[tuple[int, ...]] = []
    cur = [-c for c in phi[:deg]]
    red.append(tuple(cur))
    for _ in range(deg - 2):
        nxt = [0] + cur[:-1]
        top = cur[-1]
        if top:
            base = red[0]
            for j in range(deg):
                nxt[j] += top * base[j]
        cur = nxt
        red.append(tuple(cur))
    return deg, tuple(red)


@lru_cache(maxsize=None)
def _power_vector(n: int, k: int) -> tuple[int, ...]:
    """Integer coefficient vector of z^k in the reduced basis of Q(zeta_n)."""
    deg, red = _field_context(n)
    k %= n
    if k < deg:
        vec = [0] * deg
        vec[k] = 1
        return tuple(vec)
    # Repeated squaring is overkill; n is small, walk up once and cache.
    prev = _power_vector(n, k - 1)
    shifted = [0] + list(prev[:-1])
    top = prev[-1]
    if top:
        base = red[0]
        for j in range(deg):
            shifted[j] += top * base[j]
    return tuple(shifted)


def _reduce_product(n: int, conv: list[int]) -> list[int]:
    deg, red = _field_context(n)
    out = conv[:deg] + [0] * (deg - len(conv[:deg]))
    for k in range(deg, len(conv)):
        c = conv[k]
        if c:
            r = red[k - deg]
            for j in range(deg):
                out[j] += c * r[j]
    return out


@lru_cache(maxsize=None)
def _embedding_table(n: int, m: int) -> tuple[tuple[int, ...], ...]:
    """Images of the basis powers z_n^k (k < deg(n)) inside Q(zeta_m), n | m."""
    if m % n:
        raise ValueError("embedding requires n | m")
    deg, _ = _field_context(n)
    step = m // n
    return tuple(_power_vector(m, k * step) for k in range(deg))


class CycNum:
    """An exact element of Q(zeta_N), canonically reduced mod Phi_N."""

    __slots__ = ("order", "den", "num")

    def __init__(self, order: int, num: Sequence[int], den: int = 1, *, _raw: bool = False):
        if order < 1:
            raise ValueError("order must be a positive integer")
        self.order = order
        if _raw:
            self.num = tuple(num)
            self.den = den
            return
        deg, _ = _field_context(order)
        vec = list(num)
        if len(vec) < deg:
            vec += [0] * (deg - len(vec))
        elif len(vec) > deg:
            vec = _reduce_product(order, vec)
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den = -den
            vec = [-c for c in vec]
        g = den
        for c in vec:
            g = math.gcd(g, c)
            if g == 1:
                break
        if g > 1:
            den //= g
            vec = [c // g for c in vec]
        if all(c == 0 for c in vec):
            den = 1
        self.num = tuple(vec)
        self.den = den

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_rational(x: Fraction | int, order: int = 1) -> "CycNum":
        x = Fraction(x)
        deg, _ = _field_context(order)
        vec = [0] * deg
        vec[0] = x.numerator
        return CycNum(order, vec, x.denominator)

    @staticmethod
    def zero(order: int = 1) -> "CycNum":
        return CycNum(order, [0])

    @staticmethod
    def one(order: int = 1) -> "CycNum":
        return CycNum.from_rational(1, order)

    # -- order management -----------------------------------------------

    def embed(self, order: int) -> "CycNum":
        """Image of self under Q(zeta_N) -> Q(zeta_order), N | order."""
        if order == self.order:
            return self
        table = _embedding_table(self.order, order)
        deg, _ = _field_context(order)
        vec = [0] * deg
        for k, c in enumerate(self.num):
            if c:
                row = table[k]
                for j in range(deg):
                    vec[j] += c * row[j]
        return CycNum(order, vec, self.den)

    def descend(self, order: int) -> "CycNum":
        """Rewrite self as an element of the subfield Q(zeta_order).

        Raises ValueError if the value does not lie in the subfield."""
        if self.order % order:
            raise ValueError("descend target must divide the order")
        if order == self.order:
            return self
        table = _embedding_table(order, self.order)
        degs, _ = _field_context(order)
        degb, _ = _field_context(self.order)
        # Solve sum_k x_k * table[k] = num/den exactly over Q.
        target = [Fraction(c, self.den) for c in self.num]
        rows = [[Fraction(table[k][j]) for k in range(degs)] for j in range(degb)]
        sol = _solve_rational(rows, target)
        if sol is None:
            raise ValueError("value does not lie in the requested subfield")
        nums = [f.numerator for f in sol]
        dens = [f.denominator for f in sol]
        den = 1
        for d in dens:
            den = den * d // math.gcd(den, d)
        vec = [sol[k].numerator * (den // sol[k].denominator) for k in range(degs)]
        return CycNum(order, vec, den)

    def minimal(self) -> "CycNum":
        """The same value written in the smallest cyclotomic field Q(zeta_d),
        d | N (taking the least such d)."""
        for d in sorted(_divisors(self.order)):
            try:
                return self.descend(d)
            except ValueError:
                continue
        return self

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.num)

    def is_one(self) -> bool:
        return self.den == 1 and self.num[0] == 1 and all(c == 0 for c in self.num[1:])

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.num[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return Fraction(self.num[0], self.den)

    # -- arithmetic -------------------------------------------------------

    def _paired(self, other: "CycNum") -> tuple["CycNum", "CycNum"]:
        if self.order == other.order:
            return self, other
        m = self.order * other.order // math.gcd(self.order, other.order)
        return self.embed(m), other.embed(m)

    def __add__(self, other):
        other = _coerce(other, self.order)
        a, b = self._paired(other)
        da, db = a.den, b.den
        g = math.gcd(da, db)
        ma, mb = db // g, da // g
        vec = [ca * ma + cb * mb for ca, cb in zip(a.num, b.num)]
        return CycNum(a.order, vec, da * ma)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.order, [-c for c in self.num], self.den, _raw=True)

    def __sub__(self, other):
        other = _coerce(other, self.order)
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other, self.order) + (-self)

    def __mul__(self, other):
        other = _coerce(other, self.order)
        a, b = self._paired(other)
        na, nb = a.num, b.num
        conv = [0] * (len(na) + len(nb) - 1)
        for i, ca in enumerate(na):
            if ca:
                for j, cb in enumerate(nb):
                    if cb:
                        conv[i + j] += ca * cb
        vec = _reduce_product(a.order, conv)
        return CycNum(a.order, vec, a.den * b.den)

    __rmul__ = __mul__

    def inv(self) -> "CycNum":
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_N)")
        n = self.order
        phi = [Fraction(c) for c in cyclotomic_polynomial(n)]
        a = [Fraction(c, self.den) for c in self.num]
        # Extended Euclid in Q[x]: s*a + t*phi = gcd = const.
        r0, r1 = phi, _trim(a)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        c = r1[0]
        inv_coeffs = [x / c for x in s1]
        den = 1
        for f in inv_coeffs:
            den = den * f.denominator // math.gcd(den, f.denominator)
        vec = [0] * len(self.num)
        for k, f in enumerate(inv_coeffs[: len(vec)]):
            vec[k] = f.numerator * (den // f.denominator)
        return CycNum(n, vec, den)

    def __truediv__(self, other):
        other = _coerce(other, self.order)
        return self * other.inv()

    def __rtruediv__(self, other):
        return _coerce(other, self.order) * self.inv()

    def __pow__(self, k: int) -> "CycNum":
        if k < 0:
            return self.inv() ** (-k)
        result = CycNum.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNum.from_rational(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        a, b = self._paired(other)
        return a.den == b.den and a.num == b.num

    def __hash__(self):
        m = self.minimal()
        return hash((m.order, m.den, m.num))

    # -- evaluation and rendering ----------------------------------------

    def numeric(self) -> complex:
        """Floating-point shadow: evaluate at zeta_N = exp(2*pi*i/N)."""
        z = complex(math.cos(2 * math.pi / self.order), math.sin(2 * math.pi / self.order))
        acc = 0j
        for c in reversed(self.num):
            acc = acc * z + c
        return acc / self.den

    def coeff(self, k: int) -> Fraction:
        deg = len(self.num)
        if k < 0 or k >= self.order:
            raise IndexError("power index out of range")
        if k >= deg:
            return Fraction(0)
        return Fraction(self.num[k], self.den)

    def coeff_vector(self) -> list[Fraction]:
        """Length-N vector of rationals for Sum c_k zeta^k (canonical form)."""
        return [self.coeff(k) for k in range(self.order)]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.num):
            if c == 0:
                continue
            q = Fraction(c, self.den)
            if k == 0:
                parts.append(format_fraction(q))
                continue
            zk = f"zeta({self.order})" if k == 1 else f"zeta({self.order})^{k}"
            if q == 1:
                term = zk
            elif q == -1:
                term = f"-{zk}"
            else:
                term = f"{format_fraction(q)}*{zk}"
            parts.append(term)
        out = parts[0]
        for t in parts[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self) -> str:
        return f"CycNum({self})"

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [format_fraction(c) for c in self.coeff_vector()],
        }

    @staticmethod
    def from_json(data: dict) -> "CycNum":
        order = int(data["order"])
        coeffs = [parse_fraction(s) for s in data["coeffs"]]
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        vec = [c.numerator * (den // c.denominator) for c in coeffs]
        return CycNum(order, vec, den)


def _coerce(x, order: int) -> CycNum:
    if isinstance(x, CycNum):
        return x
    if isinstance(x, (int, Fraction)):
        return CycNum.from_rational(x, order)
    raise TypeError(f"cannot coerce {type(x).__name__} to CycNum")


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


# -- small exact polynomial helpers (used only in inv/descend) -------------

def _trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / b[-1]
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return _trim(q), _trim(a[: len(b) - 1] or [Fraction(0)])


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] -= bi
    return _trim(out)


def _solve_rational(rows: list[list[Fraction]], rhs: list[Fraction]):
    """Solve rows * x = rhs over Q; returns None if inconsistent."""
    m, n = len(rows), len(rows[0]) if rows else 0
    aug = [list(rows[i]) + [rhs[i]] for i in range(m)]
    piv_cols = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        scale = aug[r][c]
        aug[r] = [x / scale for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        x[c] = aug[i][n]
    return x


# -- public helpers ---------------------------------------------------------


def root_of_unity(order: int, k: int = 1) -> CycNum:
    """zeta_order^k in canonical form; root_of_unity(N, 0) is 1."""
    if order < 1:
        raise ValueError("order must be a positive integer")
    deg, _ = _field_context(order)
    vec = _power_vector(order, k % order)
    return CycNum(order, list(vec), 1, _raw=True)


def exp_pi_i(e: Fraction | int) -> CycNum:
    """The root of unity exp(pi*i*e) for an exact rational exponent e."""
    e = Fraction(e)
    num, den = e.numerator, 2 * e.denominator
    g = math.gcd(num, den)
    if g:
        num, den = num // g, den // g
    return root_of_unity(den, num)


def cyc_pow(base_order: int, exponent: Fraction | int) -> CycNum:
    """zeta_base_order raised to an exact rational exponent."""
    e = Fraction(exponent)
    return root_of_unity(base_order * e.denominator, e.numerator)


def q_int(n: int, q: CycNum) -> CycNum:
    """Gauss integer [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    if n < 0:
        raise ValueError("q_int expects a nonnegative integer")
    acc = CycNum.zero(q.order)
    power = CycNum.one(q.order)
    for _ in range(n):
        acc = acc + power
        power = power * q
    return acc


def q_factorial(n: int, q: CycNum) -> CycNum:
    """Gauss factorial [n]_q! = [1]_q [2]_q ... [n]_q."""
    acc = CycNum.one(q.order)
    for k in range(1, n + 1):
        acc = acc * q_int(k, q)
    return acc


def gauss_binomial(n: int, k: int, q: CycNum) -> CycNum:
    """Braided binomial coefficient [n choose k]_q.

    Computed by the Pascal recursion
        [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q,
    which stays finite at the root-of-unity points where the quotient of
    Gauss factorials is singular.
    """
    if k < 0 or n < 0 or k > n:
        raise ValueError("gauss_binomial requires 0 <= k <= n")
    one = CycNum.one(q.order)
    row = [one]
    qpow = [one]
    for j in range(1, n + 1):
        qpow.append(qpow[-1] * q)
    for m in range(1, n + 1):
        new = [one]
        for j in range(1, m):
            new.append(row[j - 1] + qpow[j] * row[j])
        new.append(one)
        row = new
    return row[k]


def sym_q_int(m: Fraction | int, q_order: int) -> CycNum:
    """Symmetric quantum number (q^m - q^-m)/(q - q^-1) for q = zeta_q_order,
    allowing exact rational m."""
    q = root_of_unity(q_order)
    qm = cyc_pow(q_order, Fraction(m))
    return (qm - qm.inv()) / (q - q.inv())
