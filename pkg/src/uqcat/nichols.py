"""Degree-by-degree computation of diagonal Nichols algebras.

Two independent routes to the same graded object are implemented:

* ``quantum_symmetrizer`` builds the literal sum over the symmetric group of
  braid-group lifts (Matsumoto sections along lexicographically least reduced
  words), restricted per multidegree.  Factorial cost, used as the defining
  oracle at small degree.

* ``nichols_dimensions`` realizes the algebra inside the braided shuffle
  algebra: the degree-n component is spanned by shuffle products of the
  degree-(n-1) basis with generators.  Since the symmetrizer intertwines
  concatenation and shuffle multiplication, the rank and kernel computed this
  way are exactly rank/kernel of the symmetrizer block, at polynomial cost in
  the block size.

Basis vectors are kept raw (images of the pivot words, unscaled), so that
coproduct coefficients come out in the familiar Gauss-binomial normalization.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .cyclotomic import CycNum
from .grading import BraidedObject, Degree
from .linalg import SpanTracker

Word = tuple[int, ...]


class ResourceLimit(Exception):
    """Raised when a computation would exceed the configured size guards."""


def multidegree(word: Word, rank: int) -> tuple[int, ...]:
    counts = [0] * rank
    for a in word:
        counts[a] += 1
    return tuple(counts)


def words_of_multidegree(counts: Sequence[int]) -> list[Word]:
    """All words with the given letter content, lexicographically ordered."""
    letters = []
    for a, c in enumerate(counts):
        letters.extend([a] * c)
    return [w for w in _distinct_perms(tuple(letters))]


def _distinct_perms(letters: Word) -> Iterable[Word]:
    if not letters:
        yield ()
        return
    seen = set()
    for i, a in enumerate(letters):
        if a in seen:
            continue
        seen.add(a)
        rest = letters[:i] + letters[i + 1:]
        for tail in _distinct_perms(rest):
            yield (a,) + tail


def multidegrees_of_total(rank: int, n: int) -> list[tuple[int, ...]]:
    out = []
    def rec(prefix, rem, slots):
        if slots == 1:
            out.append(tuple(prefix + [rem]))
            return
        for c in range(rem + 1):
            rec(prefix + [c], rem - c, slots - 1)
    if rank == 0:
        return [()] if n == 0 else []
    rec([], n, rank)
    return sorted(out)


# -- Matsumoto lifts --------------------------------------------------------


@lru_cache(maxsize=None)
def _lex_least_reduced_words(n: int) -> dict:
    """Map permutation tuple -> lexicographically least reduced word.

    The word (i_1, ..., i_l) means w = s_{i_1} s_{i_2} ... s_{i_l} as a
    product of adjacent transpositions; it is built greedily by always
    splitting off the smallest left descent."""
    out = {}
    for perm in itertools.permutations(range(n)):
        w = list(perm)
        word = []
        # left descent at i  <=>  i+1 appears before i in w
        pos = [0] * n
        for idx, val in enumerate(w):
            pos[val] = idx
        while True:
            i = next((i for i in range(n - 1) if pos[i] > pos[i + 1]), None)
            if i is None:
                break
            word.append(i)
            pos[i], pos[i + 1] = pos[i + 1], pos[i]
            w[pos[i]], w[pos[i + 1]] = i, i + 1
        out[perm] = tuple(word)
    return out


def reduced_word(perm: Sequence[int]) -> tuple[int, ...]:
    return _lex_least_reduced_words(len(perm))[tuple(perm)]


def apply_lift(word: Word, rword: Sequence[int], qmat) -> tuple[Word, CycNum]:
    """Apply the braid lift T_w along a reduced word (rightmost letter first).

    Each adjacent letter i acts by c at tensor slots (i, i+1):
    x_a (x) x_b -> q_ab * x_b (x) x_a."""
    w = list(word)
    scalar = CycNum.one()
    for i in reversed(rword):
        a, b = w[i], w[i + 1]
        scalar = scalar * qmat[a][b]
        w[i], w[i + 1] = b, a
    return tuple(w), scalar


class Symmetrizer:
    """The quantum symmetrizer S_n = sum over S_n of Matsumoto lifts,
    stored per multidegree block on the lexicographic word basis."""

    def __init__(self, source: BraidedObject, n: int, blocks: dict):
        self.source = source
        self.n = n
        self.blocks = blocks  # multidegree -> (words, dense matrix)

    def block(self, counts: Sequence[int]):
        return self.blocks[tuple(counts)]

    def word_basis(self) -> list[Word]:
        words = []
        for d in sorted(self.blocks):
            words.extend(self.blocks[d][0])
        return words

    def full_matrix(self):
        words = self.word_basis()
        index = {w: i for i, w in enumerate(words)}
        size = len(words)
        zero = CycNum.zero()
        out = [[zero] * size for _ in range(size)]
        for d, (blk_words, mat) in self.blocks.items():
            for i, wi in enumerate(blk_words):
                for j, wj in enumerate(blk_words):
                    out[index[wi]][index[wj]] = mat[i][j]
        return out


def quantum_symmetrizer(
    X: BraidedObject, n: int, *, degree_guard: int = 8, word_guard: int = 5000
) -> Symmetrizer:
    """Literal symmetrizer on X^(tensor n); factorial in n, guarded."""
    if n > degree_guard:
        raise ResourceLimit(
            f"symmetrizer degree {n} exceeds guard {degree_guard} "
            f"(matrix would have {X.rank ** n} words)"
        )
    if X.rank ** n > word_guard:
        raise ResourceLimit(
            f"word basis of size {X.rank ** n} exceeds guard {word_guard}"
        )
    qmat = X.braid_matrix()
    lifts = _lex_least_reduced_words(n)
    blocks = {}
    for counts in multidegrees_of_total(X.rank, n):
        words = words_of_multidegree(counts)
        index = {w: i for i, w in enumerate(words)}
        zero = CycNum.zero()
        mat = [[zero] * len(words) for _ in range(len(words))]
        for rword in lifts.values():
            for j, w in enumerate(words):
                tgt, scalar = apply_lift(w, rword, qmat)
                i = index[tgt]
                mat[i][j] = mat[i][j] + scalar
        blocks[counts] = (words, mat)
    return Symmetrizer(X, n, blocks)


# -- braided shuffle products ----------------------------------------------


def shuffle_word_by_letter(vec: dict, letter: int, qmat) -> dict:
    """Braided shuffle product (vec) * x_letter, vec a dict word -> CycNum."""
    out: dict = {}
    for w, c in vec.items():
        if c.is_zero():
            continue
        factor = CycNum.one()
        n = len(w)
        for k in range(n, -1, -1):
            nw = w[:k] + (letter,) + w[k:]
            cur = out.get(nw)
            term = c * factor
            out[nw] = term if cur is None else cur + term
            if k > 0:
                factor = factor * qmat[w[k - 1]][letter]
    return {w: c for w, c in out.items() if not c.is_zero()}


def shuffle_words(u: Word, v: Word, qmat) -> dict:
    """Braided shuffle product of two words as a dict word -> CycNum.

    Interleavings keep the relative order of u and v; each letter of u that
    ends up right of a letter of v contributes the braiding factor q_{u_i v_j}.
    """
    memo: dict = {}

    def rec(a: Word, b: Word) -> dict:
        key = (a, b)
        got = memo.get(key)
        if got is not None:
            return got
        if not a:
            res = {b: CycNum.one()}
        elif not b:
            res = {a: CycNum.one()}
        else:
            res = {}
            # last output letter from a: a[-1] crossed all of b
            fac = CycNum.one()
            for bj in b:
                fac = fac * qmat[a[-1]][bj]
            for w, c in rec(a[:-1], b).items():
                nw = w + (a[-1],)
                cur = res.get(nw)
                term = c * fac
                res[nw] = term if cur is None else cur + term
            # last output letter from b: no crossing
            for w, c in rec(a, b[:-1]).items():
                nw = w + (b[-1],)
                cur = res.get(nw)
                res[nw] = c if cur is None else cur + c
        memo[key] = res
        return res

    return {w: c for w, c in rec(tuple(u), tuple(v)).items() if not c.is_zero()}


def shuffle_mul(u: dict, v: dict, qmat) -> dict:
    """Bilinear extension of the braided shuffle product."""
    out: dict = {}
    for w1, c1 in u.items():
        for w2, c2 in v.items():
            c = c1 * c2
            for w, s in shuffle_words(w1, w2, qmat).items():
                cur = out.get(w)
                term = c * s
                out[w] = term if cur is None else cur + term
    return {w: c for w, c in out.items() if not c.is_zero()}


def concat_coproduct(word: Word, degrees: Sequence[Degree], bichar) -> dict:
    """Coproduct of a word in the concatenation tensor Hopf algebra with
    primitive generators: dict (left_word, right_word) -> CycNum.

    Splitting x_a into the left leg crosses the right leg accumulated so far,
    contributing sigma(deg(right), gamma_a)."""
    one = CycNum.one()
    state = {((), ()): one}
    group = degrees[0].group if degrees else None
    for a in word:
        nxt: dict = {}
        for (wl, wr), c in state.items():
            # letter to the right leg: no factor
            key = (wl, wr + (a,))
            cur = nxt.get(key)
            nxt[key] = c if cur is None else cur + c
            # letter to the left leg: crosses the right leg
            deg = group.zero()
            for b in wr:
                deg = deg + degrees[b]
            fac = bichar.braiding_value(deg, degrees[a])
            key = (wl + (a,), wr)
            term = c * fac
            cur = nxt.get(key)
            nxt[key] = term if cur is None else cur + term
        state = nxt
    return {k: c for k, c in state.items() if not c.is_zero()}


# -- the Nichols algebra data ----------------------------------------------


class Block:
    __slots__ = ("counts", "words", "tracker", "dim", "kernel", "coords")

    def __init__(self, counts, words, tracker, kernel, coords):
        self.counts = counts
        self.words = words
        self.tracker = tracker
        self.dim = tracker.rank()
        self.kernel = kernel          # list of dicts word -> CycNum
        self.coords = coords          # word -> list of coeffs over basis rows

    @property
    def basis_words(self) -> list[Word]:
        return list(self.tracker.raw_labels)

    @property
    def basis_vectors(self) -> list[dict]:
        return list(self.tracker.raw_rows)


class NicholsData:
    """Per-multidegree dimensions, bases and relation spaces of B(X)."""

    def __init__(self, source: BraidedObject, max_degree: int):
        self.source = source
        self.max_degree = max_degree
        self.components: dict[tuple[int, ...], Block] = {}
        self.hilbert: list[int] = []
        self.complete = False  # True once a 3-zero gap certified finiteness

    def dim(self, counts) -> int:
        blk = self.components.get(tuple(counts))
        return blk.dim if blk else 0

    def total_dim(self) -> Optional[int]:
        if not self.complete:
            return None
        return sum(self.hilbert)

    def support(self) -> list[tuple[int, ...]]:
        return sorted(d for d, blk in self.components.items() if blk.dim > 0)

    def basis_vector(self, word: Word) -> dict:
        """The symmetrizer image of a word, as a sparse word vector."""
        counts = multidegree(word, self.source.rank)
        blk = self.components.get(counts)
        if blk is None:
            raise KeyError(f"degree {counts} not computed")
        coords = blk.coords[word]
        out: dict = {}
        for c, row in zip(coords, blk.tracker.raw_rows):
            if c.is_zero():
                continue
            for w, v in row.items():
                cur = out.get(w)
                term = c * v
                out[w] = term if cur is None else cur + term
        return {w: v for w, v in out.items() if not v.is_zero()}


GAP_LENGTH = 3  # consecutive zero total degrees that certify finiteness


def nichols_dimensions(
    X: BraidedObject,
    max_total_degree: int,
    *,
    word_guard: int = 5000,
    stop_at_gap: bool = True,
) -> NicholsData:
    """Dimensions, deterministic bases and relation kernels of B(X), degree
    by degree up to ``max_total_degree`` (stopping early once three
    consecutive total degrees vanish, which certifies finiteness here)."""
    qmat = X.braid_matrix()
    rank = X.rank
    data = NicholsData(X, max_total_degree)

    unit_tracker = SpanTracker([()])
    unit_tracker.insert((), {(): CycNum.one()})
    data.components[tuple([0] * rank)] = Block(
        tuple([0] * rank), [()], unit_tracker, [], {(): [CycNum.one()]}
    )
    data.hilbert = [1]
    if rank == 0:
        data.complete = True
        return data

    shuffle_cache: dict = {}
    zeros_in_a_row = 0
    for n in range(1, max_total_degree + 1):
        if rank ** n > word_guard * rank:
            # sum of block sizes is rank^n; refuse absurd levels
            raise ResourceLimit(
                f"degree {n} would need {rank ** n} words (> guard)")
        total = 0
        for counts in multidegrees_of_total(rank, n):
            words = words_of_multidegree(counts)
            if len(words) > word_guard:
                raise ResourceLimit(
                    f"block {counts} has {len(words)} words (> guard {word_guard})")
            tracker = SpanTracker(words)
            kernel: list[dict] = []
            coords: dict = {}
            parents = {}
            for i in range(rank):
                if counts[i] > 0:
                    pc = list(counts)
                    pc[i] -= 1
                    parents[i] = data.components[tuple(pc)]
            for w in words:
                i = w[-1]
                parent = parents[i]
                pcoords = parent.coords[w[:-1]]
                vec: dict = {}
                for j, c in enumerate(pcoords):
                    if c.is_zero():
                        continue
                    key = (parent.counts, j, i)
                    sh = shuffle_cache.get(key)
                    if sh is None:
                        sh = shuffle_word_by_letter(
                            parent.tracker.raw_rows[j], i, qmat)
                        shuffle_cache[key] = sh
                    for ww, v in sh.items():
                        cur = vec.get(ww)
                        term = c * v
                        vec[ww] = term if cur is None else cur + term
                vec = {ww: v for ww, v in vec.items() if not v.is_zero()}
                status, rel_coords = tracker.insert(w, vec)
                coords[w] = rel_coords
                if status == "dep":
                    kvec = {w: CycNum.one()}
                    for c, bw in zip(rel_coords, tracker.raw_labels):
                        if not c.is_zero():
                            cur = kvec.get(bw, CycNum.zero())
                            kvec[bw] = cur - c
                    kernel.append({ww: v for ww, v in kvec.items() if not v.is_zero()})
            blk = Block(counts, words, tracker, kernel, coords)
            data.components[counts] = blk
            total += blk.dim
        data.hilbert.append(total)
        if total == 0:
            zeros_in_a_row += 1
            if stop_at_gap and zeros_in_a_row >= GAP_LENGTH:
                data.complete = True
                break
        else:
            zeros_in_a_row = 0
    return data


class TotalDimension:
    """Result of the finiteness probe: either a certified total dimension or
    an 'at least' lower bound when the cutoff binds."""

    def __init__(self, value: Optional[int], lower_bound: int, explored: int):
        self.value = value
        self.lower_bound = lower_bound
        self.explored_degree = explored

    @property
    def finite(self) -> bool:
        return self.value is not None

    def __repr__(self):
        if self.finite:
            return f"TotalDimension({self.value})"
        return f"TotalDimension(>= {self.lower_bound}, open at degree {self.explored_degree})"


def total_dimension(X: BraidedObject, bound: int, *, word_guard: int = 5000) -> TotalDimension:
    """Sum of Hilbert coefficients once three consecutive zero total degrees
    are seen; otherwise an open-ended lower bound at the cutoff.

    The gap criterion is a desk-scale heuristic for diagonal braidings (their
    support has no internal gaps per generator direction), not a theorem."""
    data = nichols_dimensions(X, bound, word_guard=word_guard)
    if data.complete:
        return TotalDimension(sum(data.hilbert), sum(data.hilbert), len(data.hilbert) - 1)
    return TotalDimension(None, sum(data.hilbert), len(data.hilbert) - 1)


def braided_coproduct(data: NicholsData, word: Word, split: tuple[int, int]) -> dict:
    """Coefficients of Delta(word) on the chosen bases of B_k (x) B_(n-k).

    In the shuffle realization the coproduct is deconcatenation; the result
    maps pairs (left basis word, right basis word) to CycNum coefficients."""
    k, l = split
    n = len(word)
    if k + l != n or k < 0 or l < 0:
        raise ValueError("split must partition the word length")
    vec = data.basis_vector(word)
    rank = data.source.rank
    # group deconcatenated terms by left/right multidegree blocks
    by_blocks: dict = {}
    for w, c in vec.items():
        wl, wr = w[:k], w[k:]
        key = (multidegree(wl, rank), multidegree(wr, rank))
        by_blocks.setdefault(key, {}) \
            .setdefault(wr, {})[wl] = c
    out: dict = {}
    for (dl, dr), columns in by_blocks.items():
        bl = data.components.get(dl)
        br = data.components.get(dr)
        if bl is None or br is None:
            raise KeyError("coproduct split leaves the computed range")
        # first stage: express each fixed-right-word column over the left basis
        gamma: dict = {}
        for wr, col in columns.items():
            coords = bl.tracker.express(col)
            if coords is None:
                raise ArithmeticError("deconcatenation left the left basis span")
            for i, c in enumerate(coords):
                if not c.is_zero():
                    gamma.setdefault(i, {})[wr] = c
        # second stage: express each left-basis row over the right basis
        for i, rowvec in gamma.items():
            coords = br.tracker.express(rowvec)
            if coords is None:
                raise ArithmeticError("deconcatenation left the right basis span")
            for j, c in enumerate(coords):
                if not c.is_zero():
                    out[(bl.tracker.raw_labels[i], br.tracker.raw_labels[j])] = c
    return out


class AxiomReport:
    def __init__(self, ok: bool, witness=None, detail: str = ""):
        self.ok = ok
        self.witness = witness
        self.detail = detail

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return f"AxiomReport(ok={self.ok}, witness={self.witness}, {self.detail})"


def check_bialgebra_axiom(
    X: BraidedObject,
    max_degree: int,
    *,
    extra_relations: Optional[Sequence[dict]] = None,
    word_guard: int = 5000,
) -> AxiomReport:
    """Verify Delta(m(u,v)) = (m (x) m)(id (x) c (x) id)(Delta u (x) Delta v)
    on all basis pairs of B(X) up to the total degree bound.

    With ``extra_relations`` (homogeneous word vectors in the concatenation
    tensor algebra), additionally test that the two-sided ideal they generate
    is a coideal: Delta(rel) must vanish after reducing both tensor legs
    modulo the ideal.  A pair/relation violating either check is returned as
    the witness."""
    qmat = X.braid_matrix()
    data = nichols_dimensions(X, max_degree, word_guard=word_guard, stop_at_gap=False)

    def deg_of_word(w: Word) -> Degree:
        d = X.bichar.group.zero()
        for a in w:
            d = d + X.degrees[a]
        return d

    def sigma_words(u: Word, v: Word) -> CycNum:
        return X.bichar.braiding_value(deg_of_word(u), deg_of_word(v))

    # (a) the bialgebra identity on the shuffle realization
    basis_by_degree: dict[int, list[dict]] = {}
    for counts, blk in data.components.items():
        basis_by_degree.setdefault(sum(counts), []).extend(blk.basis_vectors)
    for a in range(1, max_degree):
        for b in range(1, max_degree + 1 - a):
            for u in basis_by_degree.get(a, []):
                for v in basis_by_degree.get(b, []):
                    prod = shuffle_mul(u, v, qmat)
                    for k in range(a + b + 1):
                        lhs: dict = {}
                        for w, c in prod.items():
                            key = (w[:k], w[k:])
                            cur = lhs.get(key)
                            lhs[key] = c if cur is None else cur + c
                        rhs: dict = {}
                        for w1, c1 in u.items():
                            for w2, c2 in v.items():
                                c12 = c1 * c2
                                for j in range(min(k, a) + 1):
                                    l = k - j
                                    if l < 0 or l > b:
                                        continue
                                    fac = c12 * sigma_words(w1[j:], w2[:l])
                                    left = shuffle_words(w1[:j], w2[:l], qmat)
                                    right = shuffle_words(w1[j:], w2[l:], qmat)
                                    for wl, cl in left.items():
                                        for wr, cr in right.items():
                                            term = fac * cl * cr
                                            key = (wl, wr)
                                            cur = rhs.get(key)
                                            rhs[key] = term if cur is None else cur + term
                        diff_keys = set(lhs) | set(rhs)
                        for key in diff_keys:
                            d = lhs.get(key, CycNum.zero()) - rhs.get(key, CycNum.zero())
                            if not d.is_zero():
                                return AxiomReport(False, (u, v, k), "bialgebra identity fails")

    # (b) optional: imposed relations must generate a coideal
    if extra_relations:
        for rel in extra_relations:
            rep = _coideal_check(X, rel, data, max_degree)
            if not rep.ok:
                return rep
    return AxiomReport(True)


def _coideal_check(X: BraidedObject, rel: dict, data: NicholsData, max_degree: int) -> AxiomReport:
    """Is Delta(rel) in ideal (x) T + T (x) ideal for the two-sided ideal of
    the concatenation algebra generated by rel (plus the Nichols kernel)?"""
    rank = X.rank
    rel_deg = None
    for w in rel:
        rel_deg = len(w)
    ideal_by_deg: dict[int, list[dict]] = {}
    for n in range(rel_deg, max_degree + 1):
        vecs = []
        for lw_len in range(n - rel_deg + 1):
            rw_len = n - rel_deg - lw_len
            for lw in itertools.product(range(rank), repeat=lw_len):
                for rw in itertools.product(range(rank), repeat=rw_len):
                    vecs.append({lw + w + rw: c for w, c in rel.items()})
        ideal_by_deg[n] = vecs

    def reduce_mod(vec: dict, degree: int) -> dict:
        gens = ideal_by_deg.get(degree, [])
        if not gens:
            return vec
        words = sorted({w for g in gens for w in g} | set(vec))
        tracker = SpanTracker(words)
        for g in gens:
            tracker.insert(id(g), g)
        rem, _ = tracker._reduce(vec)
        return rem

    delta = concat_coproduct_vec(rel, X)
    # reduce both tensor legs modulo the ideal: right leg first, then left
    stage1: dict = {}
    lefts: dict = {}
    for (wl, wr), c in delta.items():
        lefts.setdefault(wl, {})[wr] = c
    for wl, rvec in lefts.items():
        red = reduce_mod(rvec, len(next(iter(rvec)))) if rvec else {}
        for wr, c in red.items():
            if not c.is_zero():
                stage1[(wl, wr)] = c
    # stage 2: reduce the left leg
    rights: dict = {}
    for (wl, wr), c in stage1.items():
        rights.setdefault(wr, {})[wl] = c
    for wr, lvec in rights.items():
        red = reduce_mod(lvec, len(next(iter(lvec)))) if lvec else {}
        for wl, c in red.items():
            if not c.is_zero():
                return AxiomReport(False, (rel, (wl, wr)),
                                   "imposed relation is not a coideal")
    return AxiomReport(True)


def concat_coproduct_vec(vec: dict, X: BraidedObject) -> dict:
    out: dict = {}
    for w, c in vec.items():
        for key, s in concat_coproduct(w, X.degrees, X.bichar).items():
            cur = out.get(key)
            term = c * s
            out[key] = term if cur is None else cur + term
    return {k: c for k, c in out.items() if not c.is_zero()}


class UnrolledVerdict:
    def __init__(self, ok: bool, witness=None, truncated: bool = False, degree: int = 0):
        self.ok = ok
        self.witness = witness
        self.truncated = truncated
        self.degree = degree

    def __bool__(self):
        return self.ok

    def __repr__(self):
        qual = f" up to degree {self.degree}" if self.truncated else ""
        return f"UnrolledVerdict(ok={self.ok}{qual}, witness={self.witness})"


def is_sufficiently_unrolled(X: BraidedObject, data: NicholsData) -> UnrolledVerdict:
    """Check: for support multidegrees, equal images in the grading group
    force equality in N^n (so the N^n-grading is recoverable from Gamma)."""
    supp = data.support()
    truncated = not data.complete
    group = X.bichar.group

    def bar(counts) -> Degree:
        d = group.zero()
        for i, c in enumerate(counts):
            if c:
                d = d + X.degrees[i].scale(c)
        return d

    by_bar: dict = {}
    for c in supp:
        by_bar.setdefault(bar(c), []).append(c)
    for alpha in supp:
        for beta in supp:
            s = bar(alpha) + bar(beta)
            target = tuple(x + y for x, y in zip(alpha, beta))
            for gamma in by_bar.get(s, []):
                if gamma != target:
                    return UnrolledVerdict(False, (alpha, beta, gamma),
                                           truncated, len(data.hilbert) - 1)
    return UnrolledVerdict(True, None, truncated, len(data.hilbert) - 1)
