from fractions import Fraction

import pytest

from uqcat import linalg
from uqcat.cyclotomic import CycNum, root_of_unity
from uqcat.labels import F_grid, F_weight, Fbar, M, P, alpha_rs, chain_simple
from uqcat.repcat import (
    BorelModule,
    borel_tensor,
    decompose,
    decompose_tensor,
    dual_verma,
    ext1_dim,
    hom_basis,
    hom_dim,
    module_for_label,
    projective,
    simple_atypical,
    socle_filtration,
    composition_factors,
    tensor,
    typical,
    verma,
)


def test_constructor_dimensions():
    for p in (2, 3, 4):
        assert verma(p, Fraction(1, 3)).dim == p
        assert dual_verma(p, Fraction(1, 5)).dim == p
        for s in range(1, p + 1):
            mod = module_for_label(p, M(0, s))
            assert mod.dim == (p if s == p else s)
        for s in range(1, p):
            assert projective(p, 1, s).dim == 2 * p


def test_p2_smallest_simple():
    mod = module_for_label(2, M(1, 1))
    assert mod.dim == 1


def test_relations_verified_on_construction():
    # verify() runs in every constructor; a corrupted action must raise
    V = verma(3, Fraction(1, 7))
    from uqcat.repcat import WeightModule
    E = [list(row) for row in V.E]
    E[0][1] = E[0][1] + CycNum.one()
    with pytest.raises(ArithmeticError):
        WeightModule(3, V.weights, E, V.F)


def test_tensor_unit():
    p = 3
    unit = module_for_label(p, M(1, 1))
    F = typical(p, Fraction(1, 3))
    T = tensor(unit, F)
    assert decompose(T) == {F_weight(Fraction(1, 3)): 1}


def test_typical_tensor_typical():
    p = 2
    T = tensor(typical(p, Fraction(1, 3)), typical(p, Fraction(1, 5)))
    dec = decompose(T)
    assert dec == {F_weight(Fraction(8, 15)): 1, F_weight(Fraction(23, 15)): 1}


def test_verma_dual_verma_pairing_contains_projective():
    p = 2
    T = tensor(verma(p, Fraction(1, 3)), dual_verma(p, -Fraction(1, 3)))
    dec = decompose(T)
    assert any(lab.kind == "P" for lab in dec)


def test_socle_filtrations():
    # simple module: a single layer
    p = 3
    L = module_for_label(p, M(0, 2))
    assert socle_filtration(L) == [{M(0, 2): 1}]
    # verma(0) at p=2 has two layers of one simple each
    layers = socle_filtration(verma(2, 0))
    assert [sum(l.values()) for l in layers] == [1, 1]
    # the projective diamond
    for p in (2, 3):
        for s in range(1, p):
            layers = socle_filtration(projective(p, 0, s))
            assert [sum(l.values()) for l in layers] == [1, 2, 1]
            assert layers[0] == {M(0, s): 1}
            assert layers[2] == {M(0, s): 1}
            assert layers[1] == {M(-1, p - s): 1, M(1, p - s): 1}


def test_composition_factors_match_decompose():
    p = 2
    T = tensor(module_for_label(p, M(0, 2)), module_for_label(p, M(1, 2)))
    dec = decompose(T)  # one projective
    assert dec == {P(0, 1): 1}
    facs = composition_factors(T)
    assert facs == {M(0, 1): 2, M(-1, 1): 1, M(1, 1): 1}


def test_decompose_direct_sum_is_union():
    from uqcat.repcat import direct_sum
    p = 3
    a = module_for_label(p, M(0, 2))
    b = typical(p, Fraction(1, 3))
    c = module_for_label(p, Fbar(1, 1))
    s = direct_sum([a, b, c])
    dec = decompose(s)
    assert dec == {M(0, 2): 1, F_weight(Fraction(1, 3)): 1, Fbar(1, 1): 1}


def test_hom_dims():
    p = 3
    # Schur
    for lab in (M(0, 1), M(1, 2), M(0, 3)):
        L = module_for_label(p, lab)
        assert hom_dim(L, L) == 1
    # Hom(F_(r',s'), P_(r,s)) nonzero iff (r', s') in {(r-1, p-s), (r, s)}
    r, s = 1, 1
    Pm = projective(p, r, s)
    for rp in (-1, 0, 1, 2):
        for sp in (1, 2):
            F = module_for_label(p, F_grid(rp, sp))
            expect = 1 if (rp, sp) in ((r - 1, p - s), (r, s)) else 0
            assert hom_dim(F, Pm) == expect, (rp, sp)
    # Hom(Fbar, F) = C iff same index
    for rp in (0, 1):
        for sp in (1, 2):
            Fb = module_for_label(p, Fbar(rp, sp))
            F = module_for_label(p, F_grid(1, 2))
            expect = 1 if (rp, sp) == (1, 2) else 0
            assert hom_dim(Fb, F) == expect


def test_ext1_chain_pattern():
    for p in (2, 3):
        for s in range(1, p):
            for n in (-1, 0, 1):
                for m in (-2, -1, 0, 1, 2, 3):
                    got = ext1_dim(p, chain_simple(p, s, n), chain_simple(p, s, m))
                    assert got == (1 if abs(n - m) == 1 else 0)


def test_ext1_typical_vanishes():
    assert ext1_dim(3, F_weight(Fraction(1, 3)), F_weight(Fraction(1, 3))) == 0
    assert ext1_dim(3, M(0, 3), M(0, 3)) == 0


def test_projectivity_of_P():
    # every surjection onto P splits on the test family: here the simplest
    # shadow: P is a direct summand of any module mapping onto it that we
    # build by tensoring (peeling always finds it first)
    p = 2
    T = tensor(module_for_label(p, M(0, 2)), module_for_label(p, M(1, 2)))
    assert decompose(T) == {P(0, 1): 1}


def test_decompose_typical_steinberg_products():
    p = 3
    dec = decompose_tensor(p, M(0, 3), M(0, 3))
    assert dec == {M(-1, 3): 1, P(-1, 1): 1}
    dec2 = decompose_tensor(p, M(0, 3), M(1, 2))
    assert dec2 == {P(0, 2): 1}


def test_borel_chain_modules():
    p = 3
    c = BorelModule(p, Fraction(1, 2), 1)
    assert c.is_simple()
    assert BorelModule(p, Fraction(0), p).is_projective()
    with pytest.raises(ValueError):
        BorelModule(p, Fraction(0), p + 1)


def test_borel_tensor_rules():
    p = 5
    lam, mu = Fraction(1, 3), Fraction(1, 7)
    # C(lam,l) (x) C(mu,1) = C(lam+mu,l)
    out = borel_tensor(BorelModule(p, lam, 3), BorelModule(p, mu, 1))
    assert out == [BorelModule(p, lam + mu, 3)]
    # C(lam,2) (x) C(mu,2) = C(lam+mu,3) + C(lam+mu+1,1) for p > 2
    out = borel_tensor(BorelModule(p, lam, 2), BorelModule(p, mu, 2))
    assert sorted([(c.lam, c.length) for c in out]) == [
        (lam + mu, 3), (lam + mu + 1, 1)]
    # p = 2 degenerates to two chains of length 2
    out = borel_tensor(BorelModule(2, lam, 2), BorelModule(2, mu, 2))
    assert sorted([(c.lam, c.length) for c in out]) == [
        (lam + mu, 2), (lam + mu + 1, 2)]


def test_block_split_in_decompose():
    p = 2
    s = tensor(typical(p, Fraction(1, 3)), module_for_label(p, M(1, 1)))
    from uqcat.repcat import direct_sum
    mixed = direct_sum([s, module_for_label(p, M(0, 2))])
    dec = decompose(mixed)
    assert dec == {F_weight(Fraction(1, 3)): 1, M(0, 2): 1}


def test_ext1_between_standard_objects():
    # Ext^1(F_(r',s'), F_(r,s)) = C iff (r',s') in {(r-1,p-s), (r-2,s)}
    from uqcat.repcat import ext1_between
    p = 3
    r, s = 1, 1
    B = module_for_label(p, F_grid(r, s))
    for rp in (-2, -1, 0, 1, 2, 3):
        for sp in (1, 2):
            A = module_for_label(p, F_grid(rp, sp))
            expect = 1 if (rp, sp) in ((r - 1, p - s), (r - 2, s)) else 0
            assert ext1_between(A, B) == expect, (rp, sp)


def test_ext1_between_chain_extensions_exist():
    # nontrivial extensions along the length-2 family: Ext^1(E+_n, E+_(n+1))
    from uqcat.repcat import ext1_between
    p = 2
    A = module_for_label(p, F_grid(0, 1))
    B = module_for_label(p, F_grid(1, 1))
    assert ext1_between(A, B) == 1
    assert ext1_between(B, A) == 0


def test_standard_objects_are_length_two():
    # E_n^+/E_n^- shadows: F has socle M(r,s), Fbar has head M(r,s)
    p = 3
    for r in (0, 1):
        for s in (1, 2):
            F = module_for_label(p, F_grid(r, s))
            layers = socle_filtration(F)
            assert layers[0] == {M(r, s): 1}
            assert layers[1] == {M(r + 1, p - s): 1}
            Fb = module_for_label(p, Fbar(r, s))
            layers = socle_filtration(Fb)
            assert layers[0] == {M(r + 1, p - s): 1}
            assert layers[1] == {M(r, s): 1}


def test_decompose_random_direct_sums():
    import random
    from uqcat.repcat import direct_sum
    rng = random.Random(11)
    pool3 = [M(0, 1), M(1, 2), F_grid(0, 1), Fbar(1, 2), P(0, 1),
             F_weight(Fraction(1, 3))]
    for p, pool in ((2, [M(0, 1), M(1, 1), F_grid(0, 1), P(0, 1),
                         F_weight(Fraction(2, 7))]), (3, pool3)):
        for _ in range(4):
            picks = [pool[rng.randrange(len(pool))] for _ in range(rng.choice([2, 3]))]
            mods = [module_for_label(p, lab) for lab in picks]
            dec = decompose(direct_sum(mods))
            expect = {}
            for lab in picks:
                from uqcat.labels import canonicalize
                lab = canonicalize(lab, p)
                expect[lab] = expect.get(lab, 0) + 1
            assert dec == expect, (p, picks)


def test_composition_factors_consistency():
    # socle-filtration factors == decompose-then-expand on tensor samples
    from uqcat.fusion import groth_class
    p = 2
    samples = [(M(0, 2), M(1, 2)), (M(0, 2), F_grid(0, 1))]
    for a, b in samples:
        T = tensor(module_for_label(p, a), module_for_label(p, b))
        via_socle = composition_factors(T)
        via_dec = {}
        for lab, mult in decompose(T).items():
            for sl, sm in groth_class(lab, p):
                via_dec[sl] = via_dec.get(sl, 0) + mult * sm
        assert via_socle == via_dec
