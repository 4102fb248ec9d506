from __future__ import annotations

import pytest

from nhfock.functors import functor_I, functor_TR
from nhfock.gmod import coinvariant_simple as L
from nhfock.grothendieck import (GrothClass, basis_pairing, bialgebra_check, class_of_module,
                                 coproduct_G, coproduct_K, decategorify_check, g_mul, k_mul,
                                 pairing, pairing_matrix, to_fock)
from nhfock.ledger import ShiftLedger
from nhfock.qlaurent import InexactDivision, LaurentInt, qbinom
from nhfock.qweyl import QPoly

P, S = GrothClass.projective, GrothClass.simple


def test_class_of_module():
    assert class_of_module(L(3)) == S(3)
    assert class_of_module(L(2).shift(4)) == S(2, LaurentInt.monomial(4))
    assert class_of_module(functor_TR(L(2), 1)) == S(1, LaurentInt({0: 1, 2: 1}))
    assert class_of_module(functor_TR(L(1), 3)).is_zero()


def test_class_of_invalid_module_fails():
    from nhfock.gmod import GradedModule
    M = GradedModule(2, (0,), [L(1).xs[0], L(1).xs[0]], [L(1).xs[0]])
    with pytest.raises(InexactDivision):
        class_of_module(M)


def test_k_mul():
    assert k_mul(P(1), P(1)) == P(2, LaurentInt({-2: 1, 0: 1}))
    assert k_mul(P(0), P(3)) == P(3)
    assert k_mul(P(1), P(2)) == P(3, LaurentInt({-4: 1, -2: 1, 0: 1}))
    with pytest.raises(ValueError):
        k_mul(P(1), S(1))


def test_k_mul_matches_divided_powers():
    # [P_n] -> t^n / (n)! at v = q^-2 is multiplicative exactly when the structure constant is the q-binomial
    for n in range(4):
        for m in range(4):
            c = k_mul(P(n), P(m)).coeffs[n + m]
            assert c == qbinom(n + m, n).substitute_power(-2)
            assert c.evaluate(1) == qbinom(n + m, n).evaluate(1)


def test_g_mul_uses_measured_shift():
    led = ShiftLedger()
    assert g_mul(S(1), S(1), led) == S(2, LaurentInt.monomial(-2))
    assert led.get("induce", (1, 1)) == -2
    assert g_mul(S(0), S(2)) == S(2)
    left = g_mul(g_mul(S(1), S(1)), S(1))
    right = g_mul(S(1), g_mul(S(1), S(1)))
    assert left == right


def test_pairing_values():
    assert pairing(P(1), S(1)) == 1
    assert pairing(P(2), S(2)) == LaurentInt.monomial(2)
    assert pairing(P(1), S(2)) == 0
    assert [basis_pairing(n) for n in range(5)] == [LaurentInt.monomial(n * (n - 1)) for n in range(5)]


def test_pairing_matrix_diagonal():
    mat = pairing_matrix(4)
    for i, row in enumerate(mat):
        for j, v in enumerate(row):
            assert (v.is_monomial() if i == j else v.is_zero())


def test_coproducts():
    assert coproduct_G(S(2))[(1, 1)] == LaurentInt({0: 1, 2: 1})
    assert coproduct_G(S(2))[(2, 0)] == 1
    # NH_2 is free over k[x_1] (x) k[x_2] on {1, D_1}, and NH_2 = (1 + q^-2) P_2 in K_0
    assert coproduct_K(P(2))[(1, 1)] == 1


@pytest.mark.parametrize("n,m", [(1, 1), (2, 1), (1, 2), (3, 0), (0, 0), (2, 2)])
def test_bialgebra(n, m):
    for r in bialgebra_check(n, m):
        assert r["pass"], r


def test_dual1_example():
    r = bialgebra_check(1, 1)[0]
    assert r["lhs_gdim"] == str(LaurentInt({0: 1, 2: 1}))


def test_to_fock_normalization():
    assert to_fock(S(2)) == QPoly.monomial(2, LaurentInt.monomial(-1))
    assert to_fock(S(0)) == QPoly.monomial(0)


def test_decategorify_family():
    led = ShiftLedger()
    fam = [("L0", L(0)), ("L1", L(1)), ("L2", L(2)), ("I(L1)", functor_I(L(1)))]
    reports = decategorify_check(fam, 3, led)
    assert all(r["pass"] for r in reports)
    assert {r["shift"] for r in reports} == {0}
    assert led.problems() == []
