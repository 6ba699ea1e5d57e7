from fractions import Fraction

import pytest

from uqcat.cyclotomic import exp_pi_i
from uqcat.grading import Degree
from uqcat.lattice import Lattice, smith_normal_form, triplet_lattice


def test_dual_lattice_examples():
    # 2Z in (R, standard form) -> (1/2)Z
    L = Lattice([[1]], [[2]])
    assert L.dual_lattice().basis == [[Fraction(1, 2)]]
    # unimodular Z is self-dual
    Z = Lattice([[1]], [[1]])
    assert Z.dual_lattice() == Z
    # sqrt(2p)Z -> basis 1/(2p) in the same coordinates
    T = triplet_lattice(4)
    assert T.dual_lattice().basis == [[Fraction(1, 8)]]


def test_is_even():
    assert Lattice([[1]], [[2]]).is_even()
    assert not Lattice([[1]], [[1]]).is_even()
    for p in range(1, 7):
        assert triplet_lattice(p).is_even()


def test_discriminant_forms_of_triplet_lattices():
    for p in range(2, 7):
        D = triplet_lattice(p).discriminant_form()
        assert D.group.torsion == (2 * p,)
        assert D.order() == 2 * p
        for k in range(2 * p):
            cls = Degree(D.group, [], [k])
            assert D.q_value(cls) == exp_pi_i(Fraction(k * k, 2 * p))


E8_GRAM = [
    [2, -1, 0, 0, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0, 0, 0],
    [0, -1, 2, -1, 0, 0, 0, 0],
    [0, 0, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, -1],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, 0],
    [0, 0, 0, 0, -1, 0, 0, 2],
]


def test_discriminant_small_and_unimodular():
    D = Lattice([[2]], [[1]]).discriminant_form()
    assert D.group.torsion == (2,)
    # the even unimodular E8 lattice has trivial discriminant group
    basis = [[1 if i == j else 0 for j in range(8)] for i in range(8)]
    E8 = Lattice(E8_GRAM, basis)
    assert E8.is_even()
    D8 = E8.discriminant_form()
    assert D8.order() == 1
    assert D8.group.torsion == ()


def test_discriminant_rejects_odd_lattices():
    with pytest.raises(ValueError, match="basis vector"):
        Lattice([[1]], [[1]]).discriminant_form()


def test_dual_of_dual_and_order_identity():
    mats = [
        ([[1]], [[2]]),
        ([[2, 0], [0, 2]], [[1, 0], [0, 1]]),
        ([[2, 1], [1, 2]], [[1, 0], [0, 1]]),
        ([[1, 0, 0], [0, 2, 0], [0, 0, 3]], [[2, 0, 0], [0, 1, 0], [0, 0, 1]]),
    ]
    for form, basis in mats:
        L = Lattice(form, basis)
        assert L.dual_lattice().dual_lattice() == L
        # |L*/L| = |det Gram|
        from uqcat.lattice import _frac_det
        if L.is_even():
            D = L.discriminant_form()
            assert D.order() == abs(_frac_det(L.gram()))


def test_smith_normal_form_reference():
    m = [[12, 6, 4], [3, 9, 6], [2, 16, 14]]
    u, s, v = smith_normal_form(m)
    def mul(a, b):
        return [[sum(a[i][k] * b[k][j] for k in range(len(b)))
                 for j in range(len(b[0]))] for i in range(len(a))]
    assert mul(mul(u, m), v) == s
    diag = [s[i][i] for i in range(3)]
    assert diag == [1, 10, 30]
    for i in range(2):
        assert diag[i + 1] % max(diag[i], 1) == 0


def test_smith_transforms_unimodular():
    m = [[4, 2], [2, 4]]
    u, s, v = smith_normal_form(m)
    from uqcat.lattice import _frac_det, _frac_matrix
    assert abs(_frac_det(_frac_matrix(u))) == 1
    assert abs(_frac_det(_frac_matrix(v))) == 1


def test_class_map_is_additive():
    L = triplet_lattice(3)
    D = L.discriminant_form()
    a = [Fraction(1, 6)]   # dual generator 1/(2p)
    b = [Fraction(2, 6)]
    ca, cb = D.class_of(a), D.class_of(b)
    cab = D.class_of([a[0] + b[0]])
    assert (ca + cb).torsion == cab.torsion
    # lattice vectors map to zero
    assert D.class_of([Fraction(3)]).is_zero()


def test_quotient_carrier_monodromy():
    # the induced carrier reproduces B(k, l) = exp(2 pi i k l / 2p)
    from uqcat.grading import Degree
    from uqcat.cyclotomic import exp_pi_i
    for p in (2, 3, 4, 5, 6):
        D = triplet_lattice(p).discriminant_form()
        car = D.quadratic_carrier()
        for k in (1, 2, 3):
            for l in (1, 2):
                a = Degree(D.group, [], [k])
                b = Degree(D.group, [], [l])
                assert car.monodromy(a, b) == exp_pi_i(Fraction(2 * k * l, 2 * p))
                assert car.quadratic_form(a) == D.q_value(a)
