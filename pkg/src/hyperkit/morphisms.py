"""Weak morphisms and the tropical/supertropical correspondence."""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Optional

from .axioms import PASS, STRICT, LawReport, Sampler, _merge, _run, check_left_mul_weak_morphism
from .builtins import SuperElement, Supertropical, supertropical, tropical
from .core import (
    NEG_INF, DownRay, Element, HyperkitError, Hyperstructure, InexactLift, SetValue,
    rat, singleton, union,
)
from .power import lift_add, lift_mul

__all__ = [
    "MapSpec", "MorphismError", "check_weak_morphism", "compose",
    "left_mul_weak_morphism", "to_supertropical", "from_supertropical",
    "tropical_supertropical_iso",
]


class MorphismError(HyperkitError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class MapSpec:
    """A map between structures, given on elements; sets map pointwise."""

    source: Hyperstructure
    target: Hyperstructure
    apply: Callable[[Element], object]
    name: str = "f"

    def image(self, a: Element) -> SetValue:
        out = self.apply(a)
        out = out if isinstance(out, SetValue) else singleton(out)
        if not self.target.carrier.admits(out):
            raise MorphismError(f"{self.name}({a}) = {out} escapes the carrier of "
                                f"{self.target.name}", witness=(a,))
        return out

    def __call__(self, s: SetValue) -> SetValue:
        if not s.is_finite:
            raise InexactLift(f"{self.name} is only defined pointwise on finite sets")
        return union(self.image(a) for a in s)


def compose(f: MapSpec, g: MapSpec) -> MapSpec:
    """``g`` after ``f``."""
    if f.target is not g.source and f.target != g.source:
        raise MorphismError(f"cannot compose {g.name} after {f.name}: carriers differ")
    return MapSpec(f.source, g.target, lambda a: g(f.image(a)), f"{g.name}.{f.name}")


def check_weak_morphism(f: MapSpec, sampler: Optional[Sampler] = None) -> LawReport:
    """f(a + b) within f(a) + f(b), and f(ab) = f(a)f(b) on singletons."""
    sampler = sampler or Sampler()
    A, B = f.source, f.target
    law = "weak_morphism"
    it, ex = sampler.tuples(A, 2, law)
    pairs = list(it)
    parts = [_run(law, (((a, b), f(A.hyperadd(a, b)), lift_add(B, f.image(a), f.image(b)))
                        for a, b in pairs), ex, "subset")]
    if A.has_mul and B.has_mul:
        parts.append(_run(law, (((a, b), f.image(A.mul(a, b)), lift_mul(B, f.image(a), f.image(b)))
                                for a, b in pairs), ex))
    rep = _merge(law, parts, "subset")
    # the additive side is an inclusion by definition, so a proper one still passes
    return replace(rep, status=PASS, witness=(), lhs=None, rhs=None) if rep.status == STRICT else rep


def left_mul_weak_morphism(A: Hyperstructure, sampler: Optional[Sampler] = None) -> LawReport:
    """S -> rS as a weak module morphism; ``pass`` means equality on every sample."""
    return check_left_mul_weak_morphism(A, sampler)


# -------------------------------------------------------- supertropical side


def to_supertropical(s: SetValue) -> SuperElement:
    """Tilde-closure members of the tropical hyperfield as supertropical elements."""
    if s == singleton(NEG_INF):
        return Supertropical.zero
    if s.is_singleton:
        return Supertropical.tangible(s.element.value)
    if len(s.pieces) == 1 and isinstance(s.pieces[0], DownRay):
        return Supertropical.ghost(s.pieces[0].top)
    raise MorphismError(f"{s} is outside the tilde closure of the tropical hyperfield", (s,))


def from_supertropical(x: SuperElement) -> SetValue:
    if x.value is None:
        return singleton(NEG_INF)
    if x.ghost:
        return SetValue.of(DownRay(x.value))
    return singleton(rat(x.value))


_RAY_CASES = (
    (SetValue.of(DownRay(Fraction(3))), singleton(rat(5))),
    (SetValue.of(DownRay(Fraction(3))), singleton(rat(3))),
    (SetValue.of(DownRay(Fraction(3))), singleton(rat(2))),
)


def tropical_supertropical_iso(sampler: Optional[Sampler] = None) -> LawReport:
    """Check that singletons and down-rays of the tropical power set match Izhakian's semiring.

    Every pair is checked for both operations, and both maps are checked to be
    mutually inverse on the values involved.  Mismatches are reported on the
    power-set side: lhs is the lifted result, rhs the image of the
    supertropical result.
    """
    sampler = sampler or Sampler()
    T, S = tropical(), supertropical()
    rng = sampler.rng("supertropical")

    def draw() -> SetValue:
        e = sampler.random_element(T, rng)
        if e != NEG_INF and rng.random() < 0.5:
            return SetValue.of(DownRay(e.value))
        return singleton(e)

    seeds = list(_RAY_CASES)
    grid = [singleton(e) for e in sampler.grid(T)] + \
        [SetValue.of(DownRay(e.value)) for e in sampler.grid(T) if e != NEG_INF]
    seeds += [(x, y) for x in grid for y in grid]

    def pairs():
        yield from seeds[: max(sampler.samples, len(_RAY_CASES))]
        for _ in range(sampler.samples - min(sampler.samples, len(seeds))):
            yield draw(), draw()

    def cases():
        for x, y in pairs():
            yield ("pair", x, y), *_compare(T, S, x, y)
    return _run("tropical_supertropical_iso", cases(), False)


def _compare(T, S, x: SetValue, y: SetValue) -> tuple:
    """First disagreement for one pair as (lhs, rhs); equal sides when all agree."""
    for v in (x, y):
        back = from_supertropical(to_supertropical(v))
        if back != v:
            return v, back
    phi_x, phi_y = to_supertropical(x), to_supertropical(y)
    for lifted, combined in ((lift_add(T, x, y), S.add(phi_x, phi_y)),
                             (lift_mul(T, x, y), S.mul(phi_x, phi_y))):
        if to_supertropical(lifted) != combined:
            return lifted, from_supertropical(combined)
    return lifted, lifted
