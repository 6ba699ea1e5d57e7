from fractions import Fraction

from uqcat.labels import (
    F_grid,
    Fbar,
    M,
    P,
    alpha_rs,
    atypical_params,
    chain_ext_minus,
    chain_ext_plus,
    chain_projective,
    chain_simple,
)


def test_alpha_grid_reference_points():
    # the algebra object sits at alpha(1,1) = 0
    for p in (2, 3, 4, 5):
        assert alpha_rs(p, 1, 1) == 0
        # the two reference values used by the induction bookkeeping
        assert alpha_rs(p, 0, p - 1) == -(p - 1)
        assert alpha_rs(p, -1, 1) == -p


def test_atypical_params_roundtrip():
    for p in (2, 3, 5):
        for r in range(-3, 4):
            for s in range(1, p + 1):
                lam = alpha_rs(p, r, s)
                assert atypical_params(p, lam) == (r, s)


def test_block_chain_parity():
    p, s = 3, 1
    assert chain_simple(p, s, 0) == M(0, 1)
    assert chain_simple(p, s, 1) == M(1, 2)
    assert chain_ext_plus(p, s, 2) == F_grid(2, 1)
    assert chain_ext_plus(p, s, 3) == F_grid(3, 2)
    assert chain_ext_minus(p, s, 0) == Fbar(-1, 2)
    assert chain_ext_minus(p, s, 1) == Fbar(0, 1)
    assert chain_projective(p, s, 0) == P(0, 1)
    assert chain_projective(p, s, 1) == P(1, 2)
