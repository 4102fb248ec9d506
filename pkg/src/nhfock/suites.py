"""Verification suites, one per module, producing uniform claim records.

A claim record is a dict with keys ``claim``, ``statement``, ``params``,
``lhs``, ``rhs``, ``shift`` and ``pass``. Suites append the shifts they
measure to a shared :class:`ShiftLedger`; a run passes only if every claim
passes and the ledger is consistent.
"""
from __future__ import annotations

import random
from math import comb, factorial
from typing import Callable, TypedDict

from . import grothendieck as gr
from . import qweyl
from .functors import (compose_I_check, compose_TR_check, functor_I, functor_TR, induce,
                       induction_shift, restrict, ses_check)
from .gmod import GradedModule, check_module, coinvariant_simple
from .ledger import ShiftLedger
from .nilhecke import (check_idem_recursion, check_relations, check_vanishing, idempotent_e,
                       nh_mul, random_homogeneous)
from .qlaurent import LaurentInt, qbinom, qbinom_balanced, qfactorial

# wall_time is only present with --timing, so default reports stay byte-identical
VerificationReport = TypedDict("VerificationReport", {
    "suites": list, "settings": dict, "claims": list, "ledger": dict,
    "ledger_problems": list, "wall_time": float, "pass": bool}, total=False)


SUITES = ("qlaurent", "nilhecke", "gmod", "functors", "groth", "qweyl")


def claim(name: str, statement: str, params: dict, lhs, rhs, ok: bool, shift: int | None = 0) -> dict:
    return {"claim": name, "statement": statement, "params": params,
            "lhs": str(lhs), "rhs": str(rhs), "shift": shift, "pass": bool(ok)}


def module_family(max_n: int) -> list[tuple[str, GradedModule]]:
    """L_1, L_2, L_3, I(L_1), I(L_2), keeping those on at most max_n strands."""
    L = coinvariant_simple
    fam = [("L1", L(1)), ("L2", L(2)), ("L3", L(3)),
           ("I(L1)", functor_I(L(1))), ("I(L2)", functor_I(L(2)))]
    return [(name, M) for name, M in fam if M.n <= max_n]


# ----------------------------------------------------------------------

def _random_laurent(rng: random.Random) -> LaurentInt:
    return LaurentInt({rng.randint(-4, 4): rng.randint(-3, 3) for _ in range(rng.randint(0, 4))})


def suite_qlaurent(max_n: int, max_k: int, seed: int, ledger: ShiftLedger) -> list[dict]:
    rng = random.Random(seed)
    out = []
    bad = 0
    for _ in range(200):
        a, b, c = (_random_laurent(rng) for _ in range(3))
        ok = (a * (b + c) == a * b + a * c and (a * b) * c == a * (b * c) and a * b == b * a
              and LaurentInt.parse(str(a)) == a)
        if b:
            ok = ok and (a * b) / b == a
        bad += not ok
    out.append(claim("laurent_ring", "ring axioms, exact division and parse round trip",
                     {"seed": seed, "trials": 200}, bad, 0, bad == 0))
    top = max(12, 2 * max_n)
    bad = [(a, b) for a in range(top + 1) for b in range(a + 1)
           if qbinom(a, b) != qbinom(a, a - b) or qbinom(a, b).evaluate(1) != comb(a, b)]
    out.append(claim("qbinom_symmetry", "q-binomials are symmetric and specialize to binomials",
                     {"max": top}, bad, [], not bad))
    bad = [(m, n) for s in range(13) for n in range(s + 1) for m in [s - n]
           if qbinom_balanced(m + n, n) != qbinom(m + n, n).substitute_power(-2).shift(m * n)]
    out.append(claim("binomial_bridge", "balanced binomial equals q^{mn} times binomial at v=q^-2",
                     {"max_sum": 12}, bad, [], not bad))
    return out


def suite_nilhecke(max_n: int, max_k: int, seed: int, ledger: ShiftLedger) -> list[dict]:
    out = []
    for n in range(1, max_n + 2):
        rel = check_relations(n)
        failed = sorted(k for k, v in rel.items() if not v)
        out.append(claim("nh_relations", "defining relations hold in the normal form", {"n": n},
                         failed, [], not failed))
    rng = random.Random(seed)
    for n in range(1, max_n + 1):
        bad = 0
        trials = 60
        for _ in range(trials):
            a, b, c = (random_homogeneous(rng, n, 2 * rng.randint(-1, 2)) for _ in range(3))
            bad += nh_mul(nh_mul(a, b), c) != nh_mul(a, nh_mul(b, c))
        out.append(claim("nh_associative", "associativity on random homogeneous triples",
                         {"n": n, "seed": seed, "trials": trials}, bad, 0, bad == 0))
    for n in range(1, max_n + 2):
        e = idempotent_e(n)
        out.append(claim("idempotent", "e_n is a degree-zero idempotent", {"n": n},
                         e.degree(), 0, e * e == e and e.degree() == 0))
    for k in range(2, max_n + 1):
        out.append(claim("idempotent_recursion", "e_k from e_{k-1} on the last k-1 strands",
                         {"k": k}, check_idem_recursion(k), True, check_idem_recursion(k)))
    for n in range(0, max_n + 1):
        ok = all(check_vanishing(n, k) for k in range(1, n + 2))
        out.append(claim("vanishing", "last-strand idempotents against D_i...D_n",
                         {"n": n}, ok, True, ok))
    return out


def suite_gmod(max_n: int, max_k: int, seed: int, ledger: ShiftLedger) -> list[dict]:
    out = []
    for n in range(0, max_n + 2):
        Ln = coinvariant_simple(n)
        want = qfactorial(n).substitute_power(2)
        ok = Ln.dim == factorial(n) and check_module(Ln) and Ln.gdim() == want
        out.append(claim("simple", "coinvariant module: dimension n!, valid action, q^2-factorial gdim",
                         {"n": n}, Ln.gdim(), want, ok))
    for n in range(0, max_n + 1):
        for m in range(0, max_n + 1 - n):
            pair = restrict(coinvariant_simple(n + m), (n, m))
            ok = pair.commutes() and check_module(pair.combined)
            out.append(claim("restrict", "restriction gives commuting actions", {"n": n, "m": m},
                             pair.gdim(), coinvariant_simple(n + m).gdim(), ok))
    return out


def suite_functors(max_n: int, max_k: int, seed: int, ledger: ShiftLedger) -> list[dict]:
    out = []
    L = coinvariant_simple
    for n in range(0, max_n + 1):
        for m in range(0, max_n + 1 - n):
            ind = induce(L(n), L(m))
            c = induction_shift(n, m)
            ledger.record("induce", (n, m), c)
            ok = check_module(ind) and ind.dim == comb(n + m, n) * L(n).dim * L(m).dim
            out.append(claim("induce_simple", "induced simple is a shifted simple",
                             {"n": n, "m": m}, ind.gdim(), L(n + m).gdim(), ok, c))
    for name, N in module_family(max_n):
        IN = functor_I(N)
        out.append(claim("functor_I", "I(N) is a module of dimension (n+1) dim N", {"module": name},
                         IN.dim, (N.n + 1) * N.dim, check_module(IN) and IN.dim == (N.n + 1) * N.dim))
        for k in range(1, min(N.n, max_k) + 1):
            TR = functor_TR(N, k)
            out.append(claim("functor_TR", "TR_k(N) is a module", {"module": name, "k": k},
                             TR.gdim(), TR.gdim(), check_module(TR)))
            r = ses_check(N, k)
            ledger.record("ses", (name, k), r["shift"])
            out.append(claim("ses", "TR_k(I N) = TR_{k-1} N + q^{-2k} I(TR_k N) with submodule witness",
                             {"module": name, "k": k}, r["lhs_gdim"], r["rhs_gdim"], r["pass"], r["shift"]))
        for k in range(0, max_k + 1):
            for l in range(0, max_k + 1 - k):
                r = compose_TR_check(N, k, l)
                ledger.record("compose_TR", (name, k, l), r["shift"])
                out.append(claim("compose_TR", "TR_l TR_k = [l+k choose k] copies of TR_{l+k}",
                                 {"module": name, "k": k, "l": l}, r["lhs_gdim"], r["rhs_gdim"],
                                 r["pass"], r["shift"]))
        r = compose_I_check(N)
        ledger.record("compose_I", (name,), r["shift"])
        out.append(claim("compose_I", "I(I N) = induce(N, induce(L_1, L_1))", {"module": name},
                         r["lhs_gdim"], r["rhs_gdim"], r["pass"], r["shift"]))
    return out


def suite_groth(max_n: int, max_k: int, seed: int, ledger: ShiftLedger) -> list[dict]:
    out = []
    mat = gr.pairing_matrix(max_n, ledger)
    for i, row in enumerate(mat):
        off = [j for j, v in enumerate(row) if j != i and v]
        ok = not off and row[i].is_monomial()
        out.append(claim("pairing", "pairing matrix is diagonal with monomial entries", {"n": i},
                         row[i], "monomial", ok, row[i].monomial_ratio(LaurentInt.const(1))))
    P = gr.GrothClass.projective
    bad = []
    for a in range(max_n + 2):
        for b in range(max_n + 2 - a):
            if gr.k_mul(P(a), P(b)) != gr.k_mul(P(b), P(a)):
                bad.append((a, b))
            for c in range(max_n + 2 - a - b):
                if gr.k_mul(gr.k_mul(P(a), P(b)), P(c)) != gr.k_mul(P(a), gr.k_mul(P(b), P(c))):
                    bad.append((a, b, c))
    out.append(claim("k_mul", "K-side product is associative and commutative",
                     {"max": max_n + 1}, bad, [], not bad))
    for n in range(0, max_n + 2):
        for m in range(0, max_n + 2 - n):
            for r in gr.bialgebra_check(n, m, ledger):
                out.append(claim(r["claim"], "bialgebra pairing axiom", r["params"],
                                 r["lhs_gdim"], r["rhs_gdim"], r["pass"], r["shift"]))
    fam = [("L0", coinvariant_simple(0))] + module_family(max_n)
    for r in gr.decategorify_check(fam, max_k, ledger):
        out.append(claim(r["claim"], "class map intertwines functors with t and divided powers",
                         r["params"], r["lhs"], r["rhs"], r["pass"], r["shift"]))
    return out


def suite_qweyl(max_n: int, max_k: int, seed: int, ledger: ShiftLedger) -> list[dict]:
    out = []
    r = qweyl.rep_check(max_n)
    out.append(claim("rep_check", "the polynomial action is a representation", r["params"],
                     r["failures"], [], r["pass"]))
    r = qweyl.confluence_check(max_n)
    out.append(claim("confluence", "rewriting is confluent and matches the action", r["params"],
                     r["failures"], [], r["pass"]))
    r = qweyl.associativity_check(seed)
    out.append(claim("d_associative", "normal-form product is associative", r["params"],
                     r["failures"], 0, r["pass"]))
    return out


RUNNERS: dict[str, Callable[[int, int, int, ShiftLedger], list[dict]]] = {
    "qlaurent": suite_qlaurent,
    "nilhecke": suite_nilhecke,
    "gmod": suite_gmod,
    "functors": suite_functors,
    "groth": suite_groth,
    "qweyl": suite_qweyl,
}


def run_suites(names: list[str], max_n: int = 4, max_k: int = 3, seed: int = 0) -> VerificationReport:
    ledger = ShiftLedger()
    claims = []
    for name in names:
        for c in RUNNERS[name](max_n, max_k, seed, ledger):
            claims.append({"suite": name, **c})
    claims.sort(key=lambda c: (SUITES.index(c["suite"]), c["claim"], repr(sorted(c["params"].items()))))
    problems = ledger.problems()
    return {
        "suites": list(names),
        "settings": {"max_n": max_n, "max_k": max_k, "seed": seed},
        "claims": claims,
        "ledger": ledger.snapshot(),
        "ledger_problems": problems,
        "pass": all(c["pass"] for c in claims) and not problems,
    }
