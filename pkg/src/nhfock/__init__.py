"""Exact computations with nilHecke algebras, their graded modules and the Fock-space functors."""
from __future__ import annotations

from .functors import functor_I, functor_TR, induce, restrict, ses_check
from .gmod import GradedModule, check_module, coinvariant_simple
from .nilhecke import NHElement, idempotent_e, nh_mul
from .qlaurent import LaurentInt, qbinom, qbinom_balanced

__all__ = [
    "GradedModule", "LaurentInt", "NHElement", "check_module", "coinvariant_simple",
    "functor_I", "functor_TR", "idempotent_e", "induce", "nh_mul", "qbinom",
    "qbinom_balanced", "restrict", "ses_check",
]
