"""Induction, restriction and the Fock-space functors I and TR on graded modules.

``induce(N, M)`` realizes NH_{n+m} (x)_{NH_n (x) NH_m} (N [x] M) on the basis
``D_v (x) b`` where v runs over minimal representatives of v(S_n x S_m): the
algebra is free as a right module over the subalgebra on these D_v. The
action of a generator g is computed by normal-forming ``g * D_v``,
decomposing it as ``sum_v' D_v' h_v'`` and letting each h_v' act on N [x] M.

``functor_TR(N, k)`` is the truncation by e_k on the last k strands, with the
remaining first n-k strands acting.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb

import numpy as np

from . import symgroup as sg
from .gmod import (GradedModule, Representation, check_module, coinvariant_simple, eye,
                   idempotent_truncation, image_subspace, rank, truncated_module, zeros)
from .nilhecke import NHElement, decompose_left, last_idempotent
from .qlaurent import LaurentInt, qbinom


class BiModulePair:
    """A space carrying commuting actions of NH_n (first strands) and NH_m (last strands)."""

    def __init__(self, left: GradedModule, right: GradedModule):
        if left.degrees != right.degrees:
            raise ValueError("left and right actions must live on the same graded space")
        self.left = left
        self.right = right
        self.n, self.m = left.n, right.n
        gap = [None] if self.n and self.m else []
        self.combined = Representation(self.n + self.m, left.degrees, left.xs + right.xs,
                                       tuple(left.ds) + tuple(gap) + tuple(right.ds))

    @property
    def degrees(self):
        return self.left.degrees

    @property
    def dim(self) -> int:
        return self.left.dim

    def gdim(self) -> LaurentInt:
        return self.left.gdim()

    def commutes(self) -> bool:
        gens_l = self.left.xs + self.left.ds
        gens_r = self.right.xs + self.right.ds
        return all(np.array_equal(a.dot(b), b.dot(a)) for a in gens_l for b in gens_r)

    def matrix(self, h: NHElement) -> np.ndarray:
        """Matrix of an element of the subalgebra NH_n (x) NH_m."""
        return self.combined.matrix(h)


def box(N: GradedModule, M: GradedModule) -> BiModulePair:
    """The outer tensor product N [x] M, with basis ordered N-major."""
    In, Im = eye(N.dim), eye(M.dim)
    degrees = [a + b for a in N.degrees for b in M.degrees]
    left = GradedModule(N.n, degrees, [np.kron(x, Im) for x in N.xs], [np.kron(d, Im) for d in N.ds])
    right = GradedModule(M.n, degrees, [np.kron(In, x) for x in M.xs], [np.kron(In, d) for d in M.ds])
    return BiModulePair(left, right)


def restrict(M: GradedModule, split: tuple[int, int]) -> BiModulePair:
    """Restriction to NH_n (x) NH_m on the same underlying graded space."""
    n, m = split
    if n < 0 or m < 0 or n + m != M.n:
        raise ValueError(f"bad split {split} for NH_{M.n}")
    left = GradedModule(n, M.degrees, M.xs[:n], M.ds[:max(n - 1, 0)])
    right = GradedModule(m, M.degrees, M.xs[n:], M.ds[n:] if m else ())
    return BiModulePair(left, right)


def induce(N: GradedModule, M: GradedModule) -> GradedModule:
    """Induced module from NH_n (x) NH_m to NH_{n+m}."""
    n, m = N.n, M.n
    total = n + m
    pair = box(N, M)
    reps = sg.left_coset_reps(n, m)
    index = {v: i for i, v in enumerate(reps)}
    b = pair.dim
    dim = len(reps) * b
    degrees = [d - 2 * sg.length(v) for v in reps for d in pair.degrees]
    gens = ([NHElement.x(total, i) for i in range(1, total + 1)]
            + [NHElement.d(total, i) for i in range(1, total)])
    mats = []
    for g in gens:
        mat = zeros(dim)
        for v in reps:
            col = index[v] * b
            for v2, h in decompose_left(g * NHElement.d_perm(v), n).items():
                row = index[v2] * b
                mat[row:row + b, col:col + b] += pair.matrix(h)
        mats.append(mat)
    labels = None
    if N.labels is not None or M.labels is not None:
        nl = N.labels or [str(i) for i in range(N.dim)]
        ml = M.labels or [str(i) for i in range(M.dim)]
        labels = [f"D{sg.render(v)}|{a}#{c}" for v in reps for a in nl for c in ml]
    return GradedModule(total, degrees, mats[:total], mats[total:], labels)


L = coinvariant_simple


def functor_I(N: GradedModule) -> GradedModule:
    """I(N) = induce(N, L_1): add one strand carrying the trivial module."""
    return induce(N, coinvariant_simple(1))


def functor_TR(N: GradedModule, k: int) -> GradedModule:
    """e_k on the last k strands applied to N, as a module over the first n-k strands.

    For k > n the result is the zero object (returned as the zero module over NH_0).
    """
    if k < 0:
        raise ValueError("functor_TR needs k >= 0")
    if k > N.n:
        return GradedModule.zero(0)
    sub = idempotent_truncation(N, last_idempotent(k, N.n))
    return truncated_module(sub, N.n - k)


# ----------------------------------------------------------------------
# shift measurements and verification reports

@lru_cache(maxsize=None)
def induction_shift(n: int, m: int) -> int:
    """The c with gdim induce(L_n, L_m) = q^c gdim L_{n+m}."""
    lhs = induce(L(n), L(m)).gdim()
    s = lhs.monomial_ratio(L(n + m).gdim())
    if s is None:
        raise ArithmeticError(f"induce(L_{n}, L_{m}) is not a shift of L_{n + m}")
    return s


def _report(claim: str, params: dict, lhs: LaurentInt, rhs: LaurentInt, shift: int | None,
            ok: bool, **extra) -> dict:
    out = {"claim": claim, "params": params, "lhs_gdim": str(lhs), "rhs_gdim": str(rhs),
           "shift": shift, "pass": bool(ok)}
    out.update(extra)
    return out


def graded_rank(M: Representation, cols: np.ndarray) -> LaurentInt:
    """gdim of the span of homogeneous columns (each column lies in one degree of M)."""
    by_deg: dict[int, list[int]] = {}
    for c in range(cols.shape[1]):
        nz = [M.degrees[i] for i in np.nonzero(cols[:, c] != 0)[0]]
        if not nz:
            continue
        if len(set(nz)) != 1:
            raise ValueError("column is not homogeneous")
        by_deg.setdefault(nz[0], []).append(c)
    return LaurentInt({d: rank(cols[:, idx]) for d, idx in by_deg.items()})


def ses_check(N: GradedModule, k: int) -> dict:
    """gdim TR_k(I N) = gdim TR_{k-1}(N) + q^{-2k} gdim I(TR_k N), plus the submodule witness.

    The witness: e_k applied to the D_e block of I(N) spans a subspace with
    the graded dimension of TR_{k-1}(N) that is stable under the first n+1-k strands.
    """
    if k < 1:
        raise ValueError("ses_check needs k >= 1")
    n = N.n
    IN = functor_I(N)
    lhs = functor_TR(IN, k).gdim()
    sub_gdim = functor_TR(N, k - 1).gdim()
    quot_gdim = functor_I(functor_TR(N, k)).gdim().shift(-2 * k) if k <= n else LaurentInt()
    rhs = sub_gdim + quot_gdim
    witness_ok = True
    witness = LaurentInt()
    if k <= n + 1:
        E = IN.matrix(last_idempotent(k, n + 1))
        cols = E[:, :N.dim]  # D_e is the first coset representative
        witness = graded_rank(IN, cols)
        witness_ok = witness == sub_gdim
        if witness_ok and witness:
            S = image_subspace(IN, _project_block(E, N.dim))
            for g in IN.xs[:n + 1 - k] + IN.ds[:max(n - k, 0)]:
                try:
                    S.restrict(g)
                except ValueError:
                    witness_ok = False
                    break
    ok = lhs == rhs and witness_ok
    return _report("ses", {"n": n, "k": k}, lhs, rhs, 0 if lhs == rhs else None, ok,
                   sub_gdim=str(sub_gdim), witness_gdim=str(witness), witness_ok=witness_ok)


def _project_block(E: np.ndarray, width: int) -> np.ndarray:
    # operator whose image is E applied to the first `width` basis vectors
    P = zeros(E.shape[0])
    for i in range(width):
        P[i, i] = 1
    return E.dot(P)


def compose_TR_check(N: GradedModule, k: int, l: int) -> dict:
    """gdim TR_l(TR_k N) against qbinom(l+k, k)|_{v=q^-2} gdim TR_{l+k}(N); shift measured."""
    lhs = functor_TR(functor_TR(N, k), l).gdim() if k <= N.n else LaurentInt()
    rhs = qbinom(l + k, k).substitute_power(-2) * functor_TR(N, l + k).gdim()
    s = lhs.monomial_ratio(rhs)
    return _report("compose_TR", {"n": N.n, "k": k, "l": l}, lhs, rhs, s, s is not None)


def compose_I_check(N: GradedModule) -> dict:
    """gdim I(I N) against gdim induce(N, induce(L_1, L_1)); shift measured."""
    lhs = functor_I(functor_I(N)).gdim()
    rhs = induce(N, induce(L(1), L(1))).gdim()
    s = lhs.monomial_ratio(rhs)
    return _report("compose_I", {"n": N.n}, lhs, rhs, s, s is not None)


def induction_dimension(N: GradedModule, M: GradedModule) -> int:
    return comb(N.n + M.n, N.n) * N.dim * M.dim


def all_valid(*modules: GradedModule) -> bool:
    return all(check_module(M) for M in modules)
