"""Power-set lifting of a hyperstructure.

Operators act on set values elementwise, ``S + T = U {s + t : s in S, t in T}``.
Infinite carriers rely on the closed-form piece combinators that each
structure provides; a combination without one raises :class:`InexactLift`.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import chain, combinations
from typing import Iterable, Optional, Sequence

from .core import (
    Hyperstructure, HyperkitError, NotInCarrier, SetValue, UnsupportedOperation,
    ValidationError, singleton,
)

__all__ = [
    "lift_add", "lift_mul", "lift_negation", "boxplus_fold", "Closure",
    "tilde_closure", "invertible_subsets", "NonAssociativeFold",
]


class NonAssociativeFold(UserWarning):
    """Folding a hypersum in a structure known to break associativity."""


def _admit(A: Hyperstructure, *values: SetValue) -> None:
    for v in values:
        if not isinstance(v, SetValue):
            raise ValidationError(f"expected a SetValue, got {v!r}")
        if not A.carrier.admits(v):
            raise NotInCarrier(f"{v} is not a subset of the carrier of {A.name}")


def lift_add(A: Hyperstructure, S: SetValue, T: SetValue) -> SetValue:
    _admit(A, S, T)
    if not S or not T:
        return SetValue.empty()
    return A.set_add(S, T)


def lift_mul(A: Hyperstructure, S: SetValue, T: SetValue) -> SetValue:
    _admit(A, S, T)
    if not A.has_mul:
        raise UnsupportedOperation(f"{A.name} has no multiplication")
    if not S or not T:
        return SetValue.empty()
    return A.set_mul(S, T)


def lift_negation(A: Hyperstructure, S: SetValue) -> SetValue:
    _admit(A, S)
    if not A.has_negation:
        raise UnsupportedOperation(f"{A.name} has no negation map")
    return A.set_neg(S)


def boxplus_fold(A: Hyperstructure, xs: Sequence[SetValue], right: bool = False) -> SetValue:
    """Iterated lifted sum, left-to-right unless ``right`` is set."""
    xs = list(xs)
    if not xs:
        raise ValidationError("cannot fold an empty list of set values")
    if A.associative is False and len(xs) > 2:
        warnings.warn(f"{A.name} is not associative; the fold depends on bracketing",
                      NonAssociativeFold, stacklevel=2)
    if right:
        acc = xs[-1]
        for x in reversed(xs[:-1]):
            acc = lift_add(A, x, acc)
        return acc
    acc = xs[0]
    for x in xs[1:]:
        acc = lift_add(A, acc, x)
    return acc


@dataclass(frozen=True)
class Closure:
    family: tuple
    saturated: bool
    iterations: int

    def __iter__(self):
        return iter(self.family)

    def __len__(self):
        return len(self.family)

    def __contains__(self, s) -> bool:
        return s in self.family


def _sorted_family(values: Iterable[SetValue]) -> tuple:
    return tuple(sorted(set(values), key=lambda v: (len(v.pieces), v.sort_key())))


def tilde_closure(A: Hyperstructure, max_iterations: int = 16,
                  seeds: Optional[Sequence] = None,
                  adjoin_zero: Optional[bool] = None) -> Closure:
    """Least family of set values holding the singletons and closed under lifted sums.

    With ``adjoin_zero`` every member may also carry the additive zero, which
    is how the sign hyperfield gets its sets {0, 1} and {0, -1}.  It defaults
    to on for finite carriers only.  Infinite carriers start from ``seeds``
    (default: the structure's hints) and usually stop before saturating.
    """
    if adjoin_zero is None:
        adjoin_zero = A.carrier.is_finite
    if max_iterations < 1:
        raise ValidationError("max_iterations must be positive")
    if A.carrier.is_finite:
        base = list(A.carrier.atoms)
    else:
        base = list(seeds if seeds is not None else A.hints)
        if not base:
            raise ValidationError(f"{A.name}: infinite carrier needs seed elements")
    zero = singleton(A.zero) if adjoin_zero and A.zero is not None else None

    def grow(values):
        out = set(values)
        if zero is not None:
            out |= {v | zero for v in values}
        return out

    family = grow(singleton(e) for e in base)
    for it in range(1, max_iterations + 1):
        ordered = _sorted_family(family)
        sums = {lift_add(A, x, y) for i, x in enumerate(ordered) for y in ordered[i:]}
        new = grow(sums) - family
        if not new:
            return Closure(_sorted_family(family), True, it)
        family |= new
    return Closure(_sorted_family(family), False, max_iterations)


def invertible_subsets(A: Hyperstructure, size_cap: int = 8,
                       candidates: Optional[Sequence[SetValue]] = None) -> list:
    """Set values ``S`` with some ``T`` such that ``S T = {1}``.

    Finite carriers are scanned over every subset with at most ``size_cap``
    elements (the empty set included); infinite carriers need ``candidates``.
    """
    if not A.has_mul:
        raise UnsupportedOperation(f"{A.name} has no multiplication")
    if candidates is None:
        if not A.carrier.is_finite:
            raise ValidationError(f"{A.name}: pass candidate set values for an infinite carrier")
        elems = A.carrier.atoms
        candidates = [SetValue.points(*c) for c in chain.from_iterable(
            combinations(elems, k) for k in range(0, min(size_cap, len(elems)) + 1))]
    one = singleton(A.one)
    pool = list(candidates)
    for S in candidates:
        if S.is_singleton and (inv := A.mul_inverse(S.element)) is not None:
            pool.append(singleton(inv))
    found = []
    for S in candidates:
        if any(lift_mul(A, S, T) == one for T in pool):
            found.append(S)
    for S in found:
        if not S.is_singleton or S.element == A.zero:
            raise HyperkitError(f"invertible set {S} is not a nonzero singleton")
    return found
