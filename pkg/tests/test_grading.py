from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from uqcat.cyclotomic import CycNum, exp_pi_i, root_of_unity
from uqcat.grading import (
    Bicharacter,
    BraidedObject,
    Degree,
    GradingGroup,
    cartan_a2_object,
    parabolic2_object,
    rank1_object,
)


def test_braiding_value_examples():
    # rank-1 free group, exponent 2/p: self-braiding of the generator is zeta_p
    for p in (2, 3, 5, 7):
        X = rank1_object(p)
        d = X.degrees[0]
        assert X.bichar.braiding_value(d, d) == root_of_unity(p)
    # sigma(0, mu) = 1
    X = rank1_object(5)
    zero = X.bichar.group.zero()
    assert X.bichar.braiding_value(zero, X.degrees[0]).is_one()


def test_z2p_quadratic_form_carrier():
    # on Z_2p the form Q(k) = exp(pi i k^2/2p) has no bimultiplicative sigma
    p = 3
    g = GradingGroup(0, [2 * p])
    with pytest.raises(ValueError):
        Bicharacter(g, [[Fraction(1, 2 * p)]])
    qf = Bicharacter(g, [[Fraction(1, 2 * p)]], strict=False)
    one = Degree(g, [], [1])
    assert qf.braiding_value(one, one) == exp_pi_i(Fraction(1, 2 * p))
    assert qf.quadratic_form(one) == root_of_unity(4 * p)
    assert qf.monodromy(one, one) == root_of_unity(2 * p)
    # off-diagonal braiding values stay undefined
    with pytest.raises(ValueError):
        qf.braiding_value(one, Degree(g, [], [2]))


def test_quadratic_form_values_on_z2p():
    p = 4
    g = GradingGroup(0, [2 * p])
    qf = Bicharacter(g, [[Fraction(1, 2 * p)]], strict=False)
    for k in range(2 * p):
        assert qf.quadratic_form(Degree(g, [], [k])) == exp_pi_i(Fraction(k * k, 2 * p))


def test_monodromy_is_symmetric_and_square():
    X = rank1_object(5)
    b = X.bichar
    lam = b.group.degree([Fraction(2, 3)], [])
    mu = b.group.degree([Fraction(-1, 2)], [])
    assert b.monodromy(lam, mu) == b.monodromy(mu, lam)
    assert b.monodromy(lam, mu) == b.braiding_value(lam, mu) * b.braiding_value(mu, lam)
    # free rank-1: B(c a, d a) = exp(4 pi i c d / p)
    c, d = Fraction(2, 3), Fraction(-1, 2)
    assert b.monodromy(lam, mu) == exp_pi_i(4 * c * d / 5)


@settings(max_examples=60, deadline=None)
@given(st.integers(-8, 8), st.integers(-8, 8), st.integers(-8, 8))
def test_bimultiplicativity_on_torsion_group(a, b, c):
    # integer coordinates: the regime where torsion reduction must be stable
    g = GradingGroup(2, [3])
    bic = Bicharacter(g, [
        [Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)],
        [Fraction(3, 2), Fraction(2), Fraction(4, 3)],
        [Fraction(2, 3), Fraction(2, 3), Fraction(2, 3)],
    ])
    lam = g.degree([a, b], [c])
    lam2 = g.degree([b, c], [a])
    mu = g.degree([c, a], [b])
    assert bic.braiding_value(lam + lam2, mu) == \
        bic.braiding_value(lam, mu) * bic.braiding_value(lam2, mu)
    assert bic.braiding_value(mu, lam + lam2) == \
        bic.braiding_value(mu, lam) * bic.braiding_value(mu, lam2)


@settings(max_examples=60, deadline=None)
@given(st.integers(-8, 8), st.integers(-8, 8), st.integers(-8, 8),
       st.integers(1, 3), st.integers(1, 3), st.integers(1, 3))
def test_bimultiplicativity_free_rational(a, b, c, d1, d2, d3):
    # rational weights on a free group (the generic weight regime)
    g = GradingGroup(2)
    bic = Bicharacter(g, [
        [Fraction(2, 3), Fraction(-1, 3)],
        [Fraction(-1, 3), Fraction(2, 3)],
    ])
    lam = g.degree([Fraction(a, d1), Fraction(b, d2)], [])
    lam2 = g.degree([Fraction(b, d2), Fraction(c, d3)], [])
    mu = g.degree([Fraction(c, d3), Fraction(a, d1)], [])
    assert bic.braiding_value(lam + lam2, mu) == \
        bic.braiding_value(lam, mu) * bic.braiding_value(lam2, mu)
    assert bic.braiding_value(mu, lam + lam2) == \
        bic.braiding_value(mu, lam) * bic.braiding_value(mu, lam2)


def test_braid_matrices_of_presets():
    # rank 1: [[zeta_p]]
    X = rank1_object(3)
    assert X.braid_matrix() == [[root_of_unity(3)]]
    # A2: [[q^2, q^-1], [q^-1, q^2]] at q = zeta_2p
    p = 3
    q = root_of_unity(2 * p)
    A = cartan_a2_object(p)
    m = A.braid_matrix()
    assert m[0][0] == q * q and m[1][1] == q * q
    assert m[0][1] == q.inv() and m[1][0] == q.inv()
    # parabolic n=2: [[q^2, q^-1], [q^-1, -1]]
    P = parabolic2_object(p)
    m = P.braid_matrix()
    assert m[0][0] == q * q and m[0][1] == q.inv()
    assert m[1][1] == -1


def test_degree_arithmetic_and_torsion_reduction():
    g = GradingGroup(1, [4])
    a = g.degree([Fraction(1, 2)], [3])
    b = g.degree([Fraction(1, 3)], [2])
    s = a + b
    assert s.free == (Fraction(5, 6),)
    assert s.torsion == (1,)
    assert (a - a).is_zero()
    assert (-a).torsion == (1,)


def test_serialization_roundtrip():
    X = cartan_a2_object(3)
    back = BraidedObject.from_json(X.to_json())
    assert back.braid_matrix() == X.braid_matrix()
    assert list(back.degrees) == list(X.degrees)
