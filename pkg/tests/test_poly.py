from __future__ import annotations

import random

import pytest
import sympy

from nhfock.poly import Poly, complete, elementary
from nhfock.nilhecke import random_poly

from oracles import poly_to_sympy, sympy_divided_difference, xs


def test_basic_arithmetic():
    x1, x2 = Poly.var(2, 1), Poly.var(2, 2)
    assert (x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2
    assert (x1 ** 2).render() == "x1^2"
    assert (x1 - x2).render() == "x1 - x2"
    assert (x1 * 0).is_zero()


def test_divided_difference_small():
    x1, x2 = Poly.var(2, 1), Poly.var(2, 2)
    assert x1.divided_difference(1) == Poly.const(2)
    assert (x1 ** 2).divided_difference(1) == x1 + x2
    assert (x1 * x2).divided_difference(1).is_zero()


@pytest.mark.parametrize("seed", range(20))
def test_divided_difference_against_sympy(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 4)
    p = random_poly(rng, n, rng.randint(0, 5), terms=3)
    i = rng.randint(1, n - 1)
    assert sympy.expand(poly_to_sympy(p.divided_difference(i)) - sympy_divided_difference(poly_to_sympy(p), i, n)) == 0


@pytest.mark.parametrize("seed", range(10))
def test_leibniz_identity(seed):
    # (x_i - x_{i+1}) D_i f = f - s_i f
    rng = random.Random(seed)
    n = 3
    f = random_poly(rng, n, 4, terms=4)
    for i in (1, 2):
        lhs = (Poly.var(n, i) - Poly.var(n, i + 1)) * f.divided_difference(i)
        assert lhs == f - f.swap(i)


def test_symmetric_functions_are_killed():
    for k in range(1, 4):
        for i in (1, 2):
            assert elementary(3, k).divided_difference(i).is_zero()
            assert complete(3, k).divided_difference(i).is_zero()
    X = xs(3)
    assert sympy.expand(poly_to_sympy(complete(3, 2)) - sum(X[a] * X[b] for a in range(3) for b in range(a, 3))) == 0


def test_permute_and_embed():
    p = Poly.monomial((2, 1, 0))
    assert p.permute((2, 3, 1)) == Poly.monomial((0, 2, 1))
    assert p.embed(5, 1) == Poly.monomial((0, 2, 1, 0, 0))
    with pytest.raises(ValueError):
        p.embed(3, 1)
