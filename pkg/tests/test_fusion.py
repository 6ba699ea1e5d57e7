from fractions import Fraction

import pytest

from uqcat.fusion import (
    Decomposition,
    check_ring_laws,
    cross_check,
    default_sample,
    fuse,
    groth_class,
    groth_decomposition,
)
from uqcat.labels import (
    F_grid,
    F_weight,
    Fbar,
    M,
    P,
    alpha_rs,
    atypical_params,
    canonicalize,
    parse_label,
)


def dec(*items):
    return Decomposition(items)


def test_alpha_grid_and_atypicality():
    # alpha(1,1) = 0 and alpha(0,p-1) = -(p-1) in alpha units
    for p in (2, 3, 5):
        assert alpha_rs(p, 1, 1) == 0
        assert alpha_rs(p, 0, p - 1) == -(p - 1)
        assert alpha_rs(p, -1, 1) == -p
    assert atypical_params(3, Fraction(1, 3)) is None
    assert atypical_params(3, Fraction(0)) == (1, 1)
    assert atypical_params(3, Fraction(-2)) == (0, 2)


def test_canonicalization():
    p = 3
    assert canonicalize(F_weight(Fraction(0)), p) == F_grid(1, 1)
    # s = p collapses to the simple projective in every guise
    assert canonicalize(F_weight(alpha_rs(p, 2, p)), p) == M(2, p)
    assert canonicalize(P(2, p), p) == M(2, p)
    assert canonicalize(F_grid(2, p), p) == M(2, p)
    with pytest.raises(ValueError):
        canonicalize(M(0, 5), p)


def test_label_parsing():
    assert parse_label("M:0,1", 2) == M(0, 1)
    assert parse_label("F:1/3", 2) == F_weight(Fraction(1, 3))
    assert parse_label("F:1,1", 3) == F_grid(1, 1)
    assert parse_label("Fbar:2,1", 3) == Fbar(2, 1)
    assert parse_label("P:0,2", 3) == P(0, 2)
    with pytest.raises(ValueError):
        parse_label("Q:1,1", 3)


def test_unit_and_simple_currents():
    for p in (2, 3, 4):
        for r in range(-5, 6):
            out = fuse(M(r, 1), M(0, 1), p)
            assert out == dec((M(r - 1, 1), 1))
        # indices add as r + r' - 1
        for r in range(-3, 4):
            for rp in range(-3, 4):
                out = fuse(M(r, 1), M(rp, 1), p)
                assert out == dec((M(r + rp - 1, 1), 1))


def test_fusion_cli_example():
    assert fuse(M(0, 1), M(0, 1), 2) == dec((M(-1, 1), 1))
    assert fuse(M(0, 1), M(2, 1), 2) == dec((M(1, 1), 1))


def test_m_times_typical():
    p = 3
    lam = Fraction(1, 3)
    out = fuse(M(0, 2), F_weight(lam), p)
    base = lam + alpha_rs(p, 0, 2)
    assert out == dec((F_weight(base), 1), (F_weight(base + 1), 1))
    assert out.level == "module"


def test_algebra_object_times_typical():
    # A (x) F_mu = F_mu + F_(mu+1) + ... + F_(mu+p-1)
    for p in (2, 3):
        A = F_weight(Fraction(0))
        mu = Fraction(1, 3)
        out = fuse(A, F_weight(mu), p)
        assert out.level == "module"
        assert out == dec(*[(F_weight(mu + l), 1) for l in range(p)])


def test_projective_block_and_empty_ranges():
    p = 3
    # the lower bound 2p+1-s-s' above p gives the empty block
    out = fuse(M(0, 1), M(0, 1), p)
    assert out == dec((M(-1, 1), 1))
    # genuine projectives appear once s + s' > p; the l = p term is the
    # simple projective
    out = fuse(M(0, 3), M(1, 3), p)
    assert out == dec((P(0, 1), 1), (M(0, 3), 1))
    out = fuse(M(0, 2), M(0, 2), p)
    assert out == dec((M(-1, 1), 1), (M(-1, 3), 1))


def test_fbar_family_index():
    # unit law on the Fbar family (output index r + r' - 1)
    p = 3
    for r in (-1, 0, 2):
        for s in (1, 2):
            assert fuse(M(1, 1), Fbar(r, s), p) == dec((Fbar(r, s), 1))


def test_groth_classes():
    p = 3
    assert groth_class(M(0, 2), p) == Decomposition([(M(0, 2), 1)], level="K0")
    assert groth_class(F_grid(0, 2), p) == Decomposition(
        [(M(0, 2), 1), (M(1, 1), 1)], level="K0")
    assert groth_class(Fbar(0, 2), p) == Decomposition(
        [(M(0, 2), 1), (M(1, 1), 1)], level="K0")
    assert groth_class(P(0, 2), p) == Decomposition(
        [(M(0, 2), 2), (M(-1, 1), 1), (M(1, 1), 1)], level="K0")
    assert groth_class(F_weight(Fraction(1, 3)), p) == Decomposition(
        [(F_weight(Fraction(1, 3)), 1)], level="K0")


def test_exactness_shadow():
    # [fuse(a,b)] = [a] * [b] with * the bilinear simple-by-simple product
    for p in (2, 3, 4):
        labels = [M(0, 1), M(1, 2 if p > 2 else 1), F_grid(0, 1), Fbar(1, 1),
                  P(0, 1), F_weight(Fraction(1, 3))]
        labels = [canonicalize(l, p) for l in labels]
        for a in labels:
            for b in labels:
                lhs = groth_decomposition(fuse(a, b, p), p)
                rhs = Decomposition(level="K0")
                for la, ma in groth_class(a, p):
                    for lb, mb in groth_class(b, p):
                        for lc, mc in groth_decomposition(fuse(la, lb, p), p):
                            rhs.add(lc, ma * mb * mc)
                assert lhs == rhs, (a, b)


def test_fusion_symmetric():
    p = 3
    labels = [M(0, 2), F_grid(1, 1), Fbar(0, 1), P(1, 2), F_weight(Fraction(2, 5))]
    for a in labels:
        for b in labels:
            x = fuse(a, b, p)
            y = fuse(b, a, p)
            assert groth_decomposition(x, p) == groth_decomposition(y, p)
            if x.level == "module" and y.level == "module":
                assert x == y


def test_ring_laws_small():
    assert check_ring_laws(2, 2).ok
    assert check_ring_laws(3, 2).ok


def test_k0_marker_for_undisplayed_products():
    p = 3
    out = fuse(F_grid(0, 1), Fbar(0, 1), p)
    assert out.level == "K0"
    out2 = fuse(M(0, 1), P(0, 1), p)
    assert out2.level == "K0"
    # all-projective results are certified at module level
    out3 = fuse(F_weight(Fraction(1, 3)), F_weight(Fraction(1, 5)), p)
    assert out3.level == "module"


def test_cross_check_p2_p3():
    for p in (2, 3):
        rep = cross_check(p)
        assert rep.ok, [r for r in rep.results if not r["match"]]
        assert len(rep.results) >= 12 or p == 2


def test_cross_check_projective_pairs():
    extra = [(M(0, 2), M(1, 2)), (M(0, 1), Fbar(0, 1))]
    rep = cross_check(2, extra)
    assert rep.ok
    rep3 = cross_check(3, [(M(0, 3), M(0, 3)), (M(0, 3), M(1, 2)),
                           (M(0, 2), F_grid(0, 1))])
    assert rep3.ok
