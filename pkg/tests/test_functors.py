from __future__ import annotations

from math import comb

import numpy as np
import pytest

from nhfock.functors import (box, compose_I_check, compose_TR_check, functor_I, functor_TR,
                             induce, induction_shift, restrict, ses_check)
from nhfock.gmod import GradedModule, as_int_matrix, check_module, coinvariant_simple as L
from nhfock.qlaurent import LaurentInt

FAMILY = {
    "L1": lambda: L(1),
    "L2": lambda: L(2),
    "L3": lambda: L(3),
    "I(L1)": lambda: functor_I(L(1)),
    "I(L2)": lambda: functor_I(L(2)),
}


def test_induce_l1_l1():
    M = induce(L(1), L(1))
    assert M.dim == 2
    assert M.gdim() == LaurentInt({0: 1, -2: 1})
    assert check_module(M)


def test_induce_with_trivial_is_identity():
    for n in range(4):
        assert induce(L(n), L(0)).same_as(L(n))
        assert induce(L(0), L(n)).gdim() == L(n).gdim()


def test_induce_dimension():
    assert induce(L(2), L(1)).dim == 6
    assert functor_I(L(2)).dim == 6
    assert functor_I(L(0)).same_as(L(1))


def test_box_commutes():
    pair = box(L(2), L(2))
    assert pair.dim == 4
    assert pair.commutes()
    assert check_module(pair.combined)


def test_restrict_l2():
    pair = restrict(L(2), (1, 1))
    assert np.array_equal(pair.left.xs[0], as_int_matrix([[0, 0], [1, 0]]))
    assert np.array_equal(pair.right.xs[0], as_int_matrix([[0, 0], [-1, 0]]))
    assert pair.gdim() == L(2).gdim()
    assert restrict(L(3), (3, 0)).left.same_as(L(3))
    with pytest.raises(ValueError):
        restrict(L(2), (2, 1))


@pytest.mark.parametrize("n,m", [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 1), (2, 3)])
def test_induced_simple_is_shifted_simple(n, m):
    M = induce(L(n), L(m))
    assert M.dim == comb(n + m, n) * L(n).dim * L(m).dim
    assert check_module(M)
    # the grading of D_v (x) b drops by 2 len(v); the top degree lands at -2nm relative to L_{n+m}
    assert induction_shift(n, m) == -2 * n * m


def test_induction_shift_cocycle():
    for n in range(3):
        for m in range(3):
            for l in range(3):
                if n + m + l <= 5:
                    assert (induction_shift(n, m) + induction_shift(n + m, l)
                            == induction_shift(m, l) + induction_shift(n, m + l))


def test_truncation_examples():
    assert functor_TR(L(1), 2).dim == 0
    assert functor_TR(L(2), 1).gdim() == LaurentInt({0: 1, 2: 1})
    assert functor_TR(L(2), 1).n == 1
    assert functor_TR(L(2), 2).gdim() == LaurentInt({2: 1})
    assert functor_TR(L(3), 0).gdim() == L(3).gdim()


@pytest.mark.parametrize("name", sorted(FAMILY))
def test_functor_outputs_are_modules(name):
    N = FAMILY[name]()
    IN = functor_I(N)
    assert IN.dim == (N.n + 1) * N.dim
    assert check_module(IN)
    for k in range(0, N.n + 1):
        assert check_module(functor_TR(N, k))


@pytest.mark.parametrize("name", sorted(FAMILY))
def test_ses(name):
    N = FAMILY[name]()
    for k in range(1, N.n + 2):
        r = ses_check(N, k)
        assert r["pass"], r
        assert r["shift"] == 0


def test_ses_base_case():
    r = ses_check(L(1), 1)
    assert r["lhs_gdim"] == r["rhs_gdim"] == str(LaurentInt({-2: 1, 0: 1}))


@pytest.mark.parametrize("name,k,l", [("L2", 1, 1), ("L3", 1, 2), ("L3", 2, 1), ("I(L2)", 1, 1), ("L1", 0, 0)])
def test_compose_tr(name, k, l):
    r = compose_TR_check(FAMILY[name](), k, l)
    assert r["pass"] and r["shift"] == 0


@pytest.mark.parametrize("name", ["L1", "L2"])
def test_compose_i(name):
    r = compose_I_check(FAMILY[name]())
    assert r["pass"] and r["shift"] == 0


def test_zero_module_degenerate_case():
    r = ses_check(L(2), 3)
    assert r["pass"]
    assert functor_TR(GradedModule.zero(0), 1).dim == 0
