"""Finite-dimensional graded NH_n-modules as integer matrix representations.

A :class:`GradedModule` carries one integer matrix per generator
``x_1..x_n, D_1..D_{n-1}`` acting on column vectors, plus the degree of each
basis vector. Shifting by ``d`` adds ``d`` to every degree, so the graded
dimension gains a factor ``q^d``.
"""
from __future__ import annotations

import itertools
import json
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np
import sympy
from sympy.matrices.normalforms import hermite_normal_form

from . import symgroup as sg
from .nilhecke import NHElement
from .poly import Exps, Poly, complete
from .qlaurent import LaurentInt


def zeros(r: int, c: int | None = None) -> np.ndarray:
    return np.zeros((r, r if c is None else c), dtype=object)


def eye(d: int) -> np.ndarray:
    m = zeros(d)
    for i in range(d):
        m[i, i] = 1
    return m


def as_int_matrix(rows) -> np.ndarray:
    m = np.array(rows, dtype=object)
    return m.reshape((len(rows), len(rows[0]) if len(rows) else 0))


def rank(m: np.ndarray) -> int:
    if m.size == 0:
        return 0
    return sympy.Matrix(m.tolist()).rank()


class Representation:
    """Generator matrices on a graded space; ``ds[i-1]`` may be None when D_i is absent."""

    def __init__(self, n: int, degrees: Sequence[int], xs: Sequence[np.ndarray],
                 ds: Sequence[np.ndarray | None]):
        self.n = n
        self.degrees = tuple(int(d) for d in degrees)
        self.xs = tuple(xs)
        self.ds = tuple(ds)
        if len(self.xs) != n or len(self.ds) != max(n - 1, 0):
            raise ValueError(f"NH_{n} needs {n} x-matrices and {max(n - 1, 0)} D-matrices")
        dim = len(self.degrees)
        for m in self.xs + tuple(d for d in self.ds if d is not None):
            if m.shape != (dim, dim):
                raise ValueError(f"generator matrix of shape {m.shape} on a {dim}-dim space")
        self._dcache: dict = {}
        self._xcache: dict = {}

    @property
    def dim(self) -> int:
        return len(self.degrees)

    def gdim(self) -> LaurentInt:
        return LaurentInt((d, 1) for d in self.degrees)

    def d_matrix(self, w: sg.Perm) -> np.ndarray:
        mat = self._dcache.get(w)
        if mat is None:
            mat = eye(self.dim)
            for i in sg.reduced_word(w):
                gen = self.ds[i - 1]
                if gen is None:
                    raise ValueError(f"D_{i} does not act on this representation")
                mat = mat.dot(gen)
            self._dcache[w] = mat
        return mat

    def x_matrix(self, e: Exps) -> np.ndarray:
        mat = self._xcache.get(e)
        if mat is None:
            mat = eye(self.dim)
            for j, a in enumerate(e):
                for _ in range(a):
                    mat = self.xs[j].dot(mat)
            self._xcache[e] = mat
        return mat

    def matrix(self, a: NHElement) -> np.ndarray:
        """Matrix of an algebra element, evaluated term by term from its normal form."""
        if a.n != self.n:
            raise ValueError(f"strand mismatch: NH_{a.n} element on an NH_{self.n} module")
        out = zeros(self.dim)
        for w, p in a.terms.items():
            dm = self.d_matrix(w)
            px = zeros(self.dim)
            for e, c in p.terms.items():
                px = px + c * self.x_matrix(e)
            out = out + px.dot(dm)
        return out

    def act(self, a: NHElement, v) -> np.ndarray:
        return self.matrix(a).dot(np.asarray(v, dtype=object))


class GradedModule(Representation):
    """A graded module over NH_n with every generator present."""

    def __init__(self, n: int, degrees: Sequence[int], xs: Sequence[np.ndarray],
                 ds: Sequence[np.ndarray], labels: Sequence[str] | None = None):
        if any(d is None for d in ds):
            raise ValueError("a GradedModule needs every D_i")
        super().__init__(n, degrees, xs, ds)
        self.labels = tuple(labels) if labels is not None else None

    @classmethod
    def zero(cls, n: int = 0) -> GradedModule:
        return cls(n, (), [zeros(0)] * n, [zeros(0)] * max(n - 1, 0))

    @classmethod
    def trivial(cls) -> GradedModule:
        """L_0: the one-dimensional module over NH_0 in degree 0."""
        return cls(0, (0,), (), ())

    def shift(self, d: int) -> GradedModule:
        return GradedModule(self.n, [x + d for x in self.degrees], self.xs, self.ds, self.labels)

    def same_as(self, other: GradedModule) -> bool:
        return (self.n == other.n and self.degrees == other.degrees
                and all(np.array_equal(a, b) for a, b in zip(self.xs + self.ds, other.xs + other.ds)))

    def __repr__(self):
        return f"GradedModule(n={self.n}, dim={self.dim}, gdim={self.gdim()})"

    # -- serialization -------------------------------------------------
    def to_dict(self) -> dict:
        def sparse(m):
            return [[int(r), int(c), int(m[r, c])] for r in range(m.shape[0])
                    for c in range(m.shape[1]) if m[r, c]]
        return {"n": self.n, "degrees": list(self.degrees),
                "x": [sparse(m) for m in self.xs], "d": [sparse(m) for m in self.ds]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> GradedModule:
        dim = len(data["degrees"])

        def dense(entries):
            m = zeros(dim)
            for r, c, v in entries:
                m[r, c] = v
            return m
        return cls(data["n"], data["degrees"], [dense(e) for e in data["x"]],
                   [dense(e) for e in data["d"]])

    @classmethod
    def from_json(cls, text: str) -> GradedModule:
        return cls.from_dict(json.loads(text))


def gdim(M: Representation) -> LaurentInt:
    return M.gdim()


def shift(M: GradedModule, d: int) -> GradedModule:
    return M.shift(d)


def act(M: Representation, a: NHElement, v) -> np.ndarray:
    return M.act(a, v)


def _respects_degree(M: Representation, m: np.ndarray, step: int) -> bool:
    rows, cols = np.nonzero(m != 0)
    return all(M.degrees[r] == M.degrees[c] + step for r, c in zip(rows, cols))


def check_module(M: Representation) -> bool:
    """True iff the matrices satisfy every defining relation of NH_n and move degrees correctly."""
    n, dim = M.n, M.dim
    I = eye(dim)
    X = M.xs
    D = M.ds
    for x in X:
        if not _respects_degree(M, x, 2):
            return False
    for d in D:
        if d is not None and not _respects_degree(M, d, -2):
            return False
    for a, b in itertools.combinations(X, 2):
        if not np.array_equal(a.dot(b), b.dot(a)):
            return False
    for i, d in enumerate(D, start=1):
        if d is None:
            continue
        if d.dot(d).any():
            return False
        if not np.array_equal(X[i - 1].dot(d) - d.dot(X[i]), I):
            return False
        if not np.array_equal(d.dot(X[i - 1]) - X[i].dot(d), I):
            return False
        for j in range(1, n + 1):
            if j not in (i, i + 1) and not np.array_equal(X[j - 1].dot(d), d.dot(X[j - 1])):
                return False
        for j, dj in enumerate(D, start=1):
            if dj is None or j <= i:
                continue
            if j == i + 1:
                if not np.array_equal(d.dot(dj).dot(d), dj.dot(d).dot(dj)):
                    return False
            elif not np.array_equal(d.dot(dj), dj.dot(d)):
                return False
    return True


# ----------------------------------------------------------------------
# the coinvariant simple L_n

@lru_cache(maxsize=None)
def staircase_basis(n: int) -> tuple[Exps, ...]:
    """Exponents a with 0 <= a_i <= n - i, ordered by degree then lexicographically."""
    ranges = [range(n - i + 1) for i in range(1, n + 1)]
    return tuple(sorted(itertools.product(*ranges), key=lambda e: (sum(e), e)))


@lru_cache(maxsize=None)
def _reducer(n: int) -> dict[int, dict[Exps, int]]:
    """For each i, the tail h_{n-i+1}(x_1..x_i) - x_i^{n-i+1} (all lex-smaller)."""
    out = {}
    for i in range(1, n + 1):
        k = n - i + 1
        h = complete(n, k, range(1, i + 1))
        lead = tuple(k if j == i - 1 else 0 for j in range(n))
        tail = {e: c for e, c in h.terms.items() if e != lead}
        out[i] = tail
    return out


@lru_cache(maxsize=None)
def _reduce_monomial(n: int, e: Exps) -> tuple[tuple[Exps, int], ...]:
    # x_i^{n-i+1} == -(tail) modulo the symmetric ideal; pick the last violating i
    for i in range(n, 0, -1):
        k = n - i + 1
        if e[i - 1] >= k:
            acc: dict[Exps, int] = {}
            base = list(e)
            base[i - 1] -= k
            for te, tc in _reducer(n)[i].items():
                ne = tuple(a + b for a, b in zip(base, te))
                for re_, rc in _reduce_monomial(n, ne):
                    acc[re_] = acc.get(re_, 0) - tc * rc
            return tuple((k_, v) for k_, v in acc.items() if v)
    return ((e, 1),)


def reduce_poly(n: int, p: Poly) -> Poly:
    """Normal form of ``p`` modulo positive-degree symmetric polynomials."""
    acc: dict[Exps, int] = {}
    for e, c in p.terms.items():
        for re_, rc in _reduce_monomial(n, e):
            acc[re_] = acc.get(re_, 0) + c * rc
    return Poly(n, acc)


def reduce_coinvariant(n: int, p: Poly) -> np.ndarray:
    """Coordinates of ``p`` in the staircase basis of the coinvariant algebra."""
    index = {e: i for i, e in enumerate(staircase_basis(n))}
    vec = zeros(len(index), 1)[:, 0]
    for e, c in reduce_poly(n, p).terms.items():
        vec[index[e]] += c
    return vec


def poly_from_vector(n: int, vec) -> Poly:
    return Poly(n, {e: int(c) for e, c in zip(staircase_basis(n), vec) if c})


@lru_cache(maxsize=None)
def coinvariant_simple(n: int) -> GradedModule:
    """L_n = Z[x_1..x_n]/(Sym^+): x_i multiplies, D_i is the divided difference."""
    if n < 0:
        raise ValueError("coinvariant_simple needs n >= 0")
    if n == 0:
        return GradedModule.trivial()
    basis = staircase_basis(n)
    dim = len(basis)
    xs, ds = [], []
    for i in range(1, n + 1):
        m = zeros(dim)
        for c, e in enumerate(basis):
            m[:, c] = reduce_coinvariant(n, Poly.monomial(e) * Poly.var(n, i))
        xs.append(m)
    for i in range(1, n):
        m = zeros(dim)
        for c, e in enumerate(basis):
            m[:, c] = reduce_coinvariant(n, Poly.monomial(e).divided_difference(i))
        ds.append(m)
    labels = [Poly.monomial(e).render() for e in basis]
    return GradedModule(n, [2 * sum(e) for e in basis], xs, ds, labels)


# ----------------------------------------------------------------------
# idempotent truncation

class GradedSubspace:
    """A saturated sublattice spanned by integer columns, with per-vector degrees."""

    def __init__(self, ambient: Representation, basis: np.ndarray, degrees: Sequence[int]):
        self.ambient = ambient
        self.basis = basis
        self.degrees = tuple(degrees)
        r = basis.shape[1]
        if r:
            _, pivots = sympy.Matrix(basis.T.tolist()).rref()
            if len(pivots) != r:
                raise ValueError("basis columns are linearly dependent")
            self._pivots = list(pivots)
        else:
            self._pivots = []
        if r:
            sub = sympy.Matrix(basis[self._pivots, :].tolist())
            self._inv = [[Fraction(int(x.p), int(x.q)) for x in row]
                         for row in sub.inv().tolist()]
        else:
            self._inv = []

    @property
    def dim(self) -> int:
        return len(self.degrees)

    def gdim(self) -> LaurentInt:
        return LaurentInt((d, 1) for d in self.degrees)

    def coords(self, vec) -> list[int]:
        """Integer coordinates of a vector lying in the subspace."""
        v = [vec[i] for i in self._pivots]
        out = []
        for row in self._inv:
            c = sum(a * b for a, b in zip(row, v))
            if c.denominator != 1:
                raise ValueError("vector is not in the sublattice")
            out.append(int(c))
        if not np.array_equal(self.basis.dot(np.array(out, dtype=object)) if out else
                              zeros(self.basis.shape[0], 1)[:, 0], np.asarray(vec, dtype=object)):
            raise ValueError("vector is not in the subspace")
        return out

    def restrict(self, m: np.ndarray) -> np.ndarray:
        """Matrix of an operator preserving the subspace, in subspace coordinates."""
        img = m.dot(self.basis)
        out = zeros(self.dim)
        for c in range(self.dim):
            out[:, c] = self.coords(img[:, c])
        return out


def _lattice_basis(block: np.ndarray) -> np.ndarray:
    """Integer basis (as columns) of the lattice spanned by the columns of ``block``."""
    if not block.any():
        return zeros(block.shape[0], 0)
    h = hermite_normal_form(sympy.Matrix(block.tolist()))
    cols = [list(h[:, j]) for j in range(h.shape[1]) if any(h[:, j])]
    arr = np.array([[int(x) for x in col] for col in cols], dtype=object).T
    return arr.reshape(block.shape[0], len(cols))


def image_subspace(M: Representation, mat: np.ndarray) -> GradedSubspace:
    """Image of a degree-preserving operator, graded by the degrees of M."""
    dim = M.dim
    by_degree: dict[int, list[int]] = {}
    for i, d in enumerate(M.degrees):
        by_degree.setdefault(d, []).append(i)
    cols, degs = [], []
    for d in sorted(by_degree):
        idx = by_degree[d]
        block = mat[np.ix_(idx, idx)]
        basis = _lattice_basis(block)
        for c in range(basis.shape[1]):
            full = zeros(dim, 1)[:, 0]
            full[idx] = basis[:, c]
            cols.append(full)
            degs.append(d)
    basis = np.array(cols, dtype=object).T.reshape(dim, len(cols)) if cols else zeros(dim, 0)
    return GradedSubspace(M, basis, degs)


def idempotent_truncation(M: Representation, e: NHElement) -> GradedSubspace:
    """The graded subspace e*M for a degree-zero idempotent e."""
    if e.n != M.n:
        raise ValueError(f"strand mismatch: NH_{e.n} idempotent on NH_{M.n} module")
    E = M.matrix(e)
    if not np.array_equal(E.dot(E), E):
        raise ValueError("element does not act as an idempotent")
    if not _respects_degree(M, E, 0):
        raise ValueError("idempotent is not homogeneous of degree 0 on this module")
    return image_subspace(M, E)


def truncated_module(sub: GradedSubspace, n: int) -> GradedModule:
    """NH_n-module on ``sub`` using the first n strands of the ambient action."""
    amb = sub.ambient
    xs = [sub.restrict(amb.xs[i]) for i in range(n)]
    ds = [sub.restrict(amb.ds[i]) for i in range(n - 1)]
    return GradedModule(n, sub.degrees, xs, ds)
