"""Grothendieck groups of the nilHecke tower, their pairing and bialgebra checks.

The K side has basis [P_n] (indecomposable projectives), the G side [L_n]
(graded simples); both are free over Z[q^+-] with one class per tower degree.
Structure constants:

* ``k_mul``: [P_n][P_m] = [n+m choose n]_{q^-2} [P_{n+m}];
* ``g_mul``: [L_n][L_m] = q^{c(n,m)} [L_{n+m}], c measured by induction.

The pairing <[P_n], [L_n]> = gdim e_n L_n is computed by idempotent truncation.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from .functors import functor_I, functor_TR, induce, induction_shift, restrict
from .gmod import GradedModule, coinvariant_simple, idempotent_truncation
from .ledger import ShiftLedger
from .nilhecke import embed, idempotent_e
from .qlaurent import InexactDivision, LaurentInt, qbinom
from .qweyl import DElement, QPoly, d_act


class GrothClass:
    """A finitely supported Z[q^+-]-combination of [P_n] (side "K") or [L_n] (side "G")."""

    __slots__ = ("side", "coeffs")

    def __init__(self, side: str, coeffs: Mapping[int, LaurentInt | int] = ()):
        if side not in ("K", "G"):
            raise ValueError(f"unknown side {side!r}")
        self.side = side
        acc: dict[int, LaurentInt] = {}
        for n, c in dict(coeffs).items():
            if n < 0:
                raise ValueError("tower degree must be >= 0")
            c = LaurentInt.coerce(c)
            if c:
                acc[n] = c
        self.coeffs = acc

    @classmethod
    def projective(cls, n: int, c: LaurentInt | int = 1) -> GrothClass:
        return cls("K", {n: c})

    @classmethod
    def simple(cls, n: int, c: LaurentInt | int = 1) -> GrothClass:
        return cls("G", {n: c})

    def _same(self, other: GrothClass) -> None:
        if self.side != other.side:
            raise ValueError(f"side mismatch: {self.side} vs {other.side}")

    def __add__(self, other: GrothClass) -> GrothClass:
        self._same(other)
        out = dict(self.coeffs)
        for n, c in other.coeffs.items():
            out[n] = out.get(n, LaurentInt()) + c
        return GrothClass(self.side, out)

    def __neg__(self) -> GrothClass:
        return GrothClass(self.side, {n: -c for n, c in self.coeffs.items()})

    def __sub__(self, other: GrothClass) -> GrothClass:
        return self + (-other)

    def scale(self, c: LaurentInt | int) -> GrothClass:
        return GrothClass(self.side, {n: v * c for n, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, GrothClass):
            return NotImplemented
        return self.side == other.side and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.side, frozenset(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        sym = "P" if self.side == "K" else "L"
        return " + ".join(f"({c})[{sym}_{n}]" for n, c in sorted(self.coeffs.items()))

    def __repr__(self):
        return f"GrothClass({self.render()!r})"


def _binom_qm2(a: int, b: int) -> LaurentInt:
    return qbinom(a, b).substitute_power(-2)


def class_of_module(M: GradedModule) -> GrothClass:
    """c [L_n] with c = gdim M / gdim L_n (exact division)."""
    if M.dim == 0:
        return GrothClass("G")
    return GrothClass.simple(M.n, M.gdim() / coinvariant_simple(M.n).gdim())


def k_mul(a: GrothClass, b: GrothClass) -> GrothClass:
    if a.side != "K" or b.side != "K":
        raise ValueError("k_mul needs two K-side classes")
    out = GrothClass("K")
    for n, c1 in a.coeffs.items():
        for m, c2 in b.coeffs.items():
            out = out + GrothClass.projective(n + m, c1 * c2 * _binom_qm2(n + m, n))
    return out


def g_mul(a: GrothClass, b: GrothClass, ledger: ShiftLedger | None = None) -> GrothClass:
    if a.side != "G" or b.side != "G":
        raise ValueError("g_mul needs two G-side classes")
    out = GrothClass("G")
    for n, c1 in a.coeffs.items():
        for m, c2 in b.coeffs.items():
            c = induction_shift(n, m)
            if ledger is not None:
                ledger.record("induce", (n, m), c)
            out = out + GrothClass.simple(n + m, (c1 * c2).shift(c))
    return out


@lru_cache(maxsize=None)
def basis_pairing(n: int) -> LaurentInt:
    """<[P_n], [L_n]> = gdim e_n L_n."""
    return idempotent_truncation(coinvariant_simple(n), idempotent_e(n)).gdim()


def pairing(p: GrothClass, m: GrothClass, ledger: ShiftLedger | None = None) -> LaurentInt:
    if p.side != "K" or m.side != "G":
        raise ValueError("pairing takes a K-side class and a G-side class")
    out = LaurentInt()
    for n, c in p.coeffs.items():
        if n in m.coeffs:
            bp = basis_pairing(n)
            if ledger is not None:
                ledger.record("pairing", (n,), bp.monomial_ratio(LaurentInt.const(1)))
            out = out + c * m.coeffs[n] * bp
    return out


def pairing_matrix(max_n: int, ledger: ShiftLedger | None = None) -> list[list[LaurentInt]]:
    return [[pairing(GrothClass.projective(i), GrothClass.simple(j), ledger)
             for j in range(max_n + 1)] for i in range(max_n + 1)]


def pairing_exponent(n: int) -> int:
    s = basis_pairing(n).monomial_ratio(LaurentInt.const(1))
    if s is None:
        raise ArithmeticError(f"<[P_{n}], [L_{n}]> is not a monomial")
    return s


# ----------------------------------------------------------------------
# coproducts; a tensor class is a dict (n, m) -> coefficient of [X_n] (x) [X_m]

def coproduct_G(m: GrothClass) -> dict[tuple[int, int], LaurentInt]:
    """Delta [L_N] from restriction: multiplicity = gdim Res L_N / (gdim L_n gdim L_m)."""
    if m.side != "G":
        raise ValueError("coproduct_G needs a G-side class")
    out: dict[tuple[int, int], LaurentInt] = {}
    for N, c in m.coeffs.items():
        LN = coinvariant_simple(N)
        for n in range(N + 1):
            pair = restrict(LN, (n, N - n))
            denom = coinvariant_simple(n).gdim() * coinvariant_simple(N - n).gdim()
            out[(n, N - n)] = c * (pair.gdim() / denom)
    return out


def free_rank(n: int) -> LaurentInt:
    """f_n with [NH_n] = f_n [P_n]: pairing the regular module with L_n gives gdim L_n."""
    return coinvariant_simple(n).gdim().shift(-pairing_exponent(n))


def coproduct_K(p: GrothClass) -> dict[tuple[int, int], LaurentInt]:
    """Delta [P_N] by freeness of NH_N over NH_n (x) NH_m.

    Res NH_N is free on the coset generators D_r of degree -2 len(r), so
    [Res NH_N] = [N choose n]_{q^-2} f_n f_m [P_n (x) P_m] and [Res P_N] is that over f_N.
    """
    if p.side != "K":
        raise ValueError("coproduct_K needs a K-side class")
    out: dict[tuple[int, int], LaurentInt] = {}
    for N, c in p.coeffs.items():
        for n in range(N + 1):
            m = N - n
            out[(n, m)] = c * (_binom_qm2(N, n) * free_rank(n) * free_rank(m) / free_rank(N))
    return out


def tensor_pairing(pp: Mapping[tuple[int, int], LaurentInt], mm: Mapping[tuple[int, int], LaurentInt]) -> LaurentInt:
    """<p (x) p', k (x) k'> = <p, k><p', k'>, extended bilinearly."""
    out = LaurentInt()
    for key, c in pp.items():
        if key in mm:
            n, m = key
            out = out + c * mm[key] * basis_pairing(n) * basis_pairing(m)
    return out


def _report(claim: str, params: dict, lhs: LaurentInt, rhs: LaurentInt, ok: bool, **extra) -> dict:
    out = {"claim": claim, "params": params, "lhs_gdim": str(lhs), "rhs_gdim": str(rhs),
           "shift": lhs.monomial_ratio(rhs) if lhs and rhs else (0 if lhs == rhs else None),
           "pass": bool(ok)}
    out.update(extra)
    return out


def bialgebra_check(n: int, m: int, ledger: ShiftLedger | None = None) -> list[dict]:
    """dual1, dual2 and dual3 at (n, m), each with an independent module-level witness."""
    N = n + m
    P = GrothClass.projective
    Lc = GrothClass.simple
    reports = []

    # dual1: <[P_n][P_m], [L_N]> = <[P_n] (x) [P_m], Delta [L_N]>
    lhs = pairing(k_mul(P(n), P(m)), Lc(N), ledger)
    rhs = tensor_pairing({(n, m): LaurentInt.const(1)}, coproduct_G(Lc(N)))
    e_nm = embed(idempotent_e(n), N, 0) * embed(idempotent_e(m), N, n)
    witness = idempotent_truncation(coinvariant_simple(N), e_nm).gdim()
    # the witness pairs e_n (x) e_m against Res L_N directly
    reports.append(_report("dual1", {"n": n, "m": m}, lhs, rhs,
                           lhs == rhs and witness == rhs, witness_gdim=str(witness)))

    # dual2: <[P_N], [L_n][L_m]> = <Delta [P_N], [L_n] (x) [L_m]>
    lhs = pairing(P(N), g_mul(Lc(n), Lc(m), ledger), ledger)
    rhs = tensor_pairing(coproduct_K(P(N)), {(n, m): LaurentInt.const(1)})
    witness = idempotent_truncation(induce(coinvariant_simple(n), coinvariant_simple(m)),
                                    idempotent_e(N)).gdim()
    reports.append(_report("dual2", {"n": n, "m": m}, lhs, rhs,
                           lhs == rhs and witness == rhs, witness_gdim=str(witness)))

    # dual3: <1_K, [L_j]> = counit of [L_j], and the unit class is neutral on both sides
    unit_ok = all(pairing(P(0), Lc(j)) == (1 if j == 0 else 0) for j in range(N + 1))
    unit_ok = unit_ok and k_mul(P(0), P(N)) == P(N) and g_mul(Lc(0), Lc(N)) == Lc(N)
    lhs = pairing(P(0), Lc(N))
    rhs = LaurentInt.const(1 if N == 0 else 0)
    reports.append(_report("dual3", {"n": n, "m": m}, lhs, rhs, unit_ok and lhs == rhs))
    return reports


# ----------------------------------------------------------------------
# decategorification into the polynomial representation

def to_fock(c: GrothClass, ledger: ShiftLedger | None = None) -> QPoly:
    """[L_n] -> q^{d_n} t^n with d_n the pairing exponent, rewritten in v = q^-2."""
    if c.side != "G":
        raise ValueError("to_fock needs a G-side class")
    out = {}
    for n, coeff in c.coeffs.items():
        d = pairing_exponent(n)
        if ledger is not None:
            ledger.record("pairing", (n,), d)
        out[n] = coeff.shift(d).contract_power(-2)
    return QPoly(out)


def decategorify_check(family: Iterable[tuple[str, GradedModule]], k_max: int,
                       ledger: ShiftLedger | None = None) -> list[dict]:
    """[I N] against [N] t and [TR_k N] against d^(k) [N], shifts recorded per family."""
    ledger = ledger if ledger is not None else ShiftLedger()
    t = DElement.x()
    reports = []
    for name, N in family:
        before = to_fock(class_of_module(N), ledger)
        checks = [("decat_I", {"module": name}, functor_I(N), t)]
        checks += [("decat_TR", {"module": name, "k": k}, functor_TR(N, k), DElement.dpow(k))
                   for k in range(1, k_max + 1)]
        for claim, params, image, op in checks:
            key = (name, params.get("k", 0))
            try:
                got = to_fock(class_of_module(image), ledger)
            except InexactDivision:
                ledger.record(claim, key, None)
                reports.append({"claim": claim, "params": params, "lhs": "not a multiple of a simple",
                                "rhs": "", "shift": None, "pass": False})
                continue
            want = d_act(op, before)
            if got.is_zero() and want.is_zero():
                shift = 0
            else:
                sv = got.monomial_ratio(want)
                shift = None if sv is None else -2 * sv
            ledger.record(claim, key, shift)
            reports.append({"claim": claim, "params": params, "lhs": got.render(),
                            "rhs": want.render(), "shift": shift, "pass": shift is not None})
    return reports

