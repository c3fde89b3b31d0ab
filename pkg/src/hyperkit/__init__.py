"""Exact hypergroups, hyperfields and their power-set liftings."""

from .core import (
    NEG_INF, ZERO_POINT, Arc, DownRay, Element, FullCircle, HyperkitError, Interval,
    Points, RealLine, SetValue, UpRay, atom, rat, singleton, sv_normalize, sv_relate, turn,
)
from .builtins import (
    BUILTINS, FiniteSemiring, MonoidSurjection, get_builtin, krasner, lopez_interval,
    pathological_maxplus, phase, quotient, signs, supertropical, triangle, tropical,
)
from .power import boxplus_fold, invertible_subsets, lift_add, lift_mul, lift_negation, tilde_closure
from .axioms import LawReport, Sampler, run_suite

__version__ = "0.1.0"

__all__ = [
    "NEG_INF", "ZERO_POINT", "Arc", "DownRay", "Element", "FullCircle", "HyperkitError",
    "Interval", "Points", "RealLine", "SetValue", "UpRay", "atom", "rat", "singleton",
    "sv_normalize", "sv_relate", "turn", "BUILTINS", "FiniteSemiring", "MonoidSurjection",
    "get_builtin", "krasner", "lopez_interval", "pathological_maxplus", "phase", "quotient",
    "signs", "supertropical", "triangle", "tropical", "boxplus_fold", "invertible_subsets",
    "lift_add", "lift_mul", "lift_negation", "tilde_closure", "LawReport", "Sampler",
    "run_suite",
]
