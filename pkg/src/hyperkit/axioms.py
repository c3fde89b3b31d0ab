"""Law engine: every hyperstructure axiom as a checkable law with witnesses.

Each law walks a deterministic stream of sample tuples, compares a left and
right set value, and stops at the first violation.  Finite carriers are
enumerated exhaustively; infinite ones draw hint tuples first and then
seeded random tuples.  Laws that are inclusions report ``inclusion_strict``
when the inclusion holds but is proper somewhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence

from .core import (
    HALF, NEG_INF, ZERO_POINT, Element, Hyperstructure, Interval, SetValue,
    ValidationError, rat, singleton, turn,
)
from .power import boxplus_fold, lift_add, lift_mul, lift_negation, tilde_closure

__all__ = [
    "PASS", "FAIL", "STRICT", "NA", "LawReport", "Sampler", "LAWS", "PROFILES",
    "check_associativity", "check_neutral_and_commutative", "check_unique_hyperinverse",
    "check_reversibility", "check_property_p", "check_mul_monoid", "check_mul_group",
    "check_distributivity", "check_weak_distributivity", "check_double_distributivity",
    "check_generalized_distributivity", "check_group_forces_distributivity",
    "check_tsemiring", "check_weak_module", "check_negation_laws", "hyperzeros",
    "check_hyperzero_halving", "check_left_mul_weak_morphism", "run_suite",
    "reevaluate", "is_mul_group",
]

PASS = "pass"
FAIL = "fail"
STRICT = "inclusion_strict"
NA = "not_applicable"


@dataclass
class LawReport:
    law_id: str
    status: str
    witness: tuple = ()
    lhs: Optional[SetValue] = None
    rhs: Optional[SetValue] = None
    samples_used: int = 0
    exhaustive: bool = False
    relation: str = field(default="equal", compare=False)
    note: str = field(default="", compare=False)

    @property
    def ok(self) -> bool:
        """Holds, counting a proper inclusion as success only for inclusion laws."""
        if self.status == STRICT:
            return self.relation == "subset"
        return self.status in (PASS, NA)

    def to_dict(self) -> dict:
        return {
            "law_id": self.law_id,
            "status": self.status,
            "witness": _jsonable(self.witness) if self.witness else None,
            "lhs": str(self.lhs) if self.lhs is not None else None,
            "rhs": str(self.rhs) if self.rhs is not None else None,
            "samples_used": self.samples_used,
            "exhaustive": self.exhaustive,
        }

    def line(self) -> str:
        parts = [self.law_id, self.status, f"samples={self.samples_used}",
                 "exhaustive" if self.exhaustive else "sampled"]
        if self.witness:
            parts.append("witness=" + _witness_str(self.witness))
        if self.lhs is not None:
            parts.append(f"lhs={self.lhs}")
        if self.rhs is not None:
            parts.append(f"rhs={self.rhs}")
        if self.note:
            parts.append(f"note={self.note}")
        return "\t".join(parts)


def _jsonable(w):
    if isinstance(w, tuple):
        return [_jsonable(x) for x in w]
    return str(w)


def _witness_str(w) -> str:
    if isinstance(w, tuple):
        return "(" + ", ".join(_witness_str(x) for x in w) + ")"
    return str(w)


# ------------------------------------------------------------------ sampling

_LINE_CONSTANTS = [0, 1, 2, 3, 5, 9, Fraction(1, 2)]
_TURN_CONSTANTS = [0, Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1, 10), Fraction(3, 5)]
_TURN_DENOMINATORS = (1, 2, 3, 4, 5, 6, 8, 10, 12, 20)


@dataclass(frozen=True)
class Sampler:
    """Deterministic tuple source.

    ``strategy`` is ``auto`` (exhaustive on finite carriers, grid plus random
    otherwise), ``exhaustive`` or ``grid_plus_random``.
    """

    seed: int = 0
    samples: int = 1000
    strategy: str = "auto"
    max_num: int = 12
    max_den: int = 4
    exhaustive_limit: int = 50_000

    def __post_init__(self):
        if self.strategy not in ("auto", "exhaustive", "grid_plus_random"):
            raise ValidationError(f"unknown sampling strategy {self.strategy!r}")
        if self.samples < 1:
            raise ValidationError("samples must be positive")

    def rng(self, tag: str) -> random.Random:
        return random.Random(f"{self.seed}/{tag}")

    def exhaustive_for(self, A: Hyperstructure, count: int) -> bool:
        if not A.carrier.is_finite or self.strategy == "grid_plus_random":
            return False
        return self.strategy == "exhaustive" or count <= self.exhaustive_limit

    # -- elements
    def grid(self, A: Hyperstructure) -> list:
        kind = A.carrier.kind
        if kind == "finite":
            out = list(A.hints) + list(A.carrier.atoms)
        elif kind == "unit_circle_with_zero":
            out = list(A.hints) + [turn(t) for t in _TURN_CONSTANTS] + [ZERO_POINT]
        else:
            consts = [rat(c) for c in _LINE_CONSTANTS]
            if kind in ("reals", "reals_with_neg_infinity"):
                consts += [rat(-c) for c in (1, 2, 3)]
            if kind == "reals_with_neg_infinity":
                consts.append(NEG_INF)
            out = list(A.hints) + consts
        return list(dict.fromkeys(out))

    def random_element(self, A: Hyperstructure, rng: random.Random, previous=()) -> Element:
        kind = A.carrier.kind
        roll = rng.random()
        if previous and roll < 0.3:
            e = rng.choice(previous)
            if kind == "unit_circle_with_zero" and e != ZERO_POINT and rng.random() < 0.5:
                return turn(e.value + HALF)
            return e
        if roll < 0.45:
            return rng.choice(self.grid(A))
        if kind == "finite":
            return rng.choice(A.carrier.atoms)
        if kind == "unit_circle_with_zero":
            if rng.random() < 0.05:
                return ZERO_POINT
            q = rng.choice(_TURN_DENOMINATORS)
            return turn(Fraction(rng.randrange(q), q))
        if kind == "reals_with_neg_infinity" and rng.random() < 0.05:
            return NEG_INF
        q = rng.randint(1, self.max_den)
        lo = 0 if kind == "nonneg_reals" else -self.max_num * q
        return rat(Fraction(rng.randint(lo, self.max_num * q), q))

    def tuples(self, A: Hyperstructure, k: int, tag: str):
        """Return ``(iterator of k-tuples, exhaustive)``."""
        if A.carrier.is_finite and self.exhaustive_for(A, len(A.carrier.atoms) ** k):
            return product(A.carrier.atoms, repeat=k), True
        return self._random_tuples(A, k, tag), False

    def _random_tuples(self, A, k, tag) -> Iterator[tuple]:
        hinted = list(product(A.hints, repeat=k)) if A.hints else []
        yield from hinted[: self.samples]
        rng = self.rng(tag)
        for _ in range(self.samples - min(len(hinted), self.samples)):
            chosen: list = []
            for _ in range(k):
                chosen.append(self.random_element(A, rng, chosen))
            yield tuple(chosen)

    # -- set values
    def tilde_family(self, A: Hyperstructure) -> tuple:
        return _finite_family(A) if A.carrier.is_finite else tilde_closure(A).family

    def random_set(self, A: Hyperstructure, rng: random.Random) -> SetValue:
        """A member of the tilde closure.

        Finite carriers draw from the whole closure, so sampled and exhaustive
        runs see the same sets; otherwise a hypersum of one to three elements.
        """
        if A.carrier.is_finite:
            return rng.choice(_finite_family(A))
        elems: list = []
        for _ in range(rng.choice((1, 1, 2, 2, 2, 3))):
            elems.append(self.random_element(A, rng, elems))
        return boxplus_fold(A, [singleton(e) for e in elems])

    def set_tuples(self, A: Hyperstructure, k: int, tag: str):
        if A.carrier.is_finite:
            fam = self.tilde_family(A)
            if self.exhaustive_for(A, len(fam) ** k):
                return product(fam, repeat=k), True

        def gen():
            rng = self.rng(tag)
            for _ in range(self.samples):
                yield tuple(self.random_set(A, rng) for _ in range(k))
        return gen(), False

    def families(self, A: Hyperstructure, sizes: Sequence, tag: str):
        """Pairs of element families ``(xs, ys)`` with the given size pairs."""
        plans = [(m, n) for m, n in sizes]
        if A.carrier.is_finite:
            from itertools import combinations_with_replacement as cwr
            elems = A.carrier.atoms
            total = sum(_count_cwr(len(elems), m) * _count_cwr(len(elems), n) for m, n in plans)
            if self.exhaustive_for(A, total):
                return (
                    (xs, ys) for m, n in plans for xs in cwr(elems, m) for ys in cwr(elems, n)
                ), True

        def gen():
            per = max(1, self.samples // len(plans))
            for m, n in plans:
                hinted = [(xs, ys) for xs in product(A.hints, repeat=m)
                          for ys in product(A.hints, repeat=n)] if A.hints else []
                yield from hinted[:per]
                rng = self.rng(f"{tag}/{m}x{n}")
                for _ in range(per - min(per, len(hinted))):
                    xs: list = []
                    for _ in range(m):
                        xs.append(self.random_element(A, rng, xs))
                    ys: list = []
                    for _ in range(n):
                        ys.append(self.random_element(A, rng, xs + ys))
                    yield tuple(xs), tuple(ys)
        return gen(), False


@lru_cache(maxsize=32)
def _finite_family(A: Hyperstructure) -> tuple:
    return tilde_closure(A).family


def _count_cwr(n: int, k: int) -> int:
    from math import comb
    return comb(n + k - 1, k)


# ------------------------------------------------------------ law machinery


def _run(law_id: str, cases: Iterable, exhaustive: bool, relation: str = "equal") -> LawReport:
    """Compare ``(witness, lhs, rhs)`` cases; stops at the first violation."""
    n = 0
    strict = None
    for witness, lhs, rhs in cases:
        n += 1
        if relation == "equal":
            if lhs != rhs:
                return LawReport(law_id, FAIL, witness, lhs, rhs, n, exhaustive, relation)
        else:
            if not lhs.issubset(rhs):
                return LawReport(law_id, FAIL, witness, lhs, rhs, n, exhaustive, relation)
            if strict is None and lhs != rhs:
                strict = (witness, lhs, rhs)
    if strict is not None:
        return LawReport(law_id, STRICT, *strict, n, exhaustive, relation)
    return LawReport(law_id, PASS, (), None, None, n, exhaustive, relation)


def _na(law_id: str, why: str, relation: str = "equal") -> LawReport:
    return LawReport(law_id, NA, relation=relation, note=why)


def _merge(law_id: str, parts: Sequence[LawReport], relation: str) -> LawReport:
    """Combine sub-checks of one law: first failure wins, then first strict inclusion."""
    total = sum(p.samples_used for p in parts)
    exhaustive = all(p.exhaustive for p in parts if p.status != NA)
    for status in (FAIL, STRICT):
        for p in parts:
            if p.status == status:
                return replace(p, law_id=law_id, samples_used=total,
                               exhaustive=exhaustive, relation=relation)
    if all(p.status == NA for p in parts):
        return _na(law_id, parts[0].note if parts else "", relation)
    return LawReport(law_id, PASS, samples_used=total, exhaustive=exhaustive, relation=relation)


def _s(e) -> SetValue:
    return e if isinstance(e, SetValue) else singleton(e)


def _fold(A, xs) -> SetValue:
    return boxplus_fold(A, [_s(x) for x in xs])


def is_mul_group(A: Hyperstructure, sampler: Optional[Sampler] = None) -> bool:
    """Do the nonzero elements form a multiplicative group (on all / sampled elements)?"""
    if not A.has_mul:
        return False
    sampler = sampler or Sampler()
    it, _ = sampler.tuples(A, 1, "group")
    for (a,) in it:
        if a == A.zero:
            continue
        inv = A.mul_inverse(a)
        if inv is None or A.mul(a, inv) != A.one:
            return False
    return True


# ---- individual sides, shared by the checks and by witness re-evaluation


def _sides_neutral(A, tag, *w):
    if tag == "neutral":
        (a,) = w
        return A.hyperadd(a, A.zero), singleton(a)
    a, b = w
    return A.hyperadd(a, b), A.hyperadd(b, a)


def _sides_assoc(A, a, b, c):
    return (lift_add(A, A.hyperadd(a, b), singleton(c)),
            lift_add(A, singleton(a), A.hyperadd(b, c)))


def _sides_reversibility(A, a, b, c):
    return singleton(c), A.hyperadd(a, A.negate(b))


def _sides_property_p(A, a, b):
    return SetValue.points(a, b), A.hyperadd(a, b)


def _sides_mul_monoid(A, tag, *w):
    if tag == "assoc":
        a, b, c = w
        return singleton(A.mul(A.mul(a, b), c)), singleton(A.mul(a, A.mul(b, c)))
    (a,) = w
    return singleton(A.mul(a, A.one)), singleton(a)


def _sides_distributivity(A, a, b, c):
    return lift_mul(A, singleton(a), A.hyperadd(b, c)), lift_add(A, singleton(A.mul(a, b)),
                                                                  singleton(A.mul(a, c)))


def _sides_family_product(A, xs, ys):
    lhs = lift_mul(A, _fold(A, xs), _fold(A, ys))
    rhs = _fold(A, [lift_mul(A, _s(x), _s(y)) for x in xs for y in ys])
    return lhs, rhs


def _sides_double(A, a1, a2, b1, b2):
    lhs = lift_mul(A, A.hyperadd(a1, a2), A.hyperadd(b1, b2))
    rhs = _fold(A, [A.mul(a1, b1), A.mul(a1, b2), A.mul(a2, b1), A.mul(a2, b2)])
    return lhs, rhs


def _sides_scalar(A, r, xs):
    lhs = lift_mul(A, singleton(r), _fold(A, xs))
    rhs = _fold(A, [lift_mul(A, singleton(r), _s(x)) for x in xs])
    return lhs, rhs


def _sides_tsemiring(A, tag, *w):
    if tag == "i":
        r1, r2, x = w
        return (lift_mul(A, A.hyperadd(r1, r2), x),
                lift_add(A, lift_mul(A, singleton(r1), x), lift_mul(A, singleton(r2), x)))
    r, x1, x2 = w
    return (lift_mul(A, singleton(r), lift_add(A, x1, x2)),
            lift_add(A, lift_mul(A, singleton(r), x1), lift_mul(A, singleton(r), x2)))


def _sides_weak_module(A, tag, *w):
    if tag == "i":
        s1, s2, t = w
        return lift_mul(A, lift_mul(A, s1, s2), t), lift_mul(A, s1, lift_mul(A, s2, t))
    if tag == "ii":
        return _sides_family_product(A, *w)
    if tag == "iii":
        (r,) = w
        return singleton(A.mul(r, A.zero)), singleton(A.zero)
    (a,) = w
    return singleton(A.mul(A.zero, a)), singleton(A.zero)


def _sides_negation(A, tag, *w):
    neg, sneg = A.negate, (lambda s: lift_negation(A, s))
    if tag == "hom":
        a, b = w
        return sneg(A.hyperadd(a, b)), A.hyperadd(neg(a), neg(b))
    if tag == "involution":
        (a,) = w
        return singleton(neg(neg(a))), singleton(a)
    if tag == "hyperzero":
        (a,) = w
        return singleton(A.zero), A.hyperadd(a, neg(a))
    if tag == "mul_left":
        a, b = w
        return singleton(neg(A.mul(a, b))), singleton(A.mul(neg(a), b))
    if tag == "mul_right":
        a, b = w
        return singleton(neg(A.mul(a, b))), singleton(A.mul(a, neg(b)))
    if tag == "set_hom":
        s, t = w
        return sneg(lift_add(A, s, t)), lift_add(A, sneg(s), sneg(t))
    if tag == "set_involution":
        (s,) = w
        return sneg(sneg(s)), s
    s, t = w   # set_mul
    return sneg(lift_mul(A, s, t)), lift_mul(A, sneg(s), t)


def _sides_halving(A, b):
    return (SetValue.of(Interval(Fraction(0), b.value)),
            lift_add(A, SetValue.of(Interval(Fraction(0), b.value / 2)),
                     SetValue.of(Interval(Fraction(0), b.value / 2))))


# --------------------------------------------------------------------- laws


def check_neutral_and_commutative(A: Hyperstructure, sampler: Optional[Sampler] = None) -> LawReport:
    sampler = sampler or Sampler()
    if not A.has_neutral:
        return _na("neutral_commutative", "no designated additive neutral")
    it1, ex1 = sampler.tuples(A, 1, "neutral")
    neutral = _run("neutral", ((("neutral", a), *_sides_neutral(A, "neutral", a)) for (a,) in it1), ex1)
    it2, ex2 = sampler.tuples(A, 2, "commutative")
    comm = _run("comm", ((("comm", a, b), *_sides_neutral(A, "comm", a, b)) for a, b in it2), ex2)
    return _merge("neutral_commutative", [neutral, comm], "equal")


def check_associativity(A: Hyperstructure, sampler: Optional[Sampler] = None) -> LawReport:
    sampler = sampler or Sampler()
    it, ex = sampler.tuples(A, 3, "associativity")
    return _run("associativity", ((w, *_sides_assoc(A, *w)) for w in it), ex)


def check_unique_hyperinverse(A: Hyperstructure, sampler: Optional[Sampler] = None) -> LawReport:
    sampler = sampler or Sampler()
    it, ex = sampler.tuples(A, 1, "hyperinverse")
    n = 0
    for (a,) in it:
        n += 1
        inv = A.hyperinverses(a)
        if not inv.is_singleton:
            return LawReport("unique_hyperinverse", FAIL, (a,) + _two_members(A, a, inv),
                             inv, None, n, ex)
    return LawReport("unique_hyperinverse", PASS, samples_used=n, exhaustive=ex)


def _two_members(A, a, s: SetValue) -> tuple:
    """Two distinct members of a non-singleton set, preferring -a when present."""
    if not s:
        return ()
    preferred = []
    if A.has_negation:
        preferred.append(A.negate(a))
        if A.negate(a).kind == "rational":
            preferred.append(rat(A.negate(a).value / 2))
    cands = [c for c in preferred if c in s]
    cands += [c for c in _members(s, None) if c not in cands]
    return tuple(cands[:2])


def _members(s: SetValue, rng: Optional[random.Random], interior: int = 0) -> list:
    """Points of a set value: finite points, piece endpoints and sampled interior points."""
    from .core import Arc, DownRay, FullCircle, UpRay, RealLine
    out = list(s.finite_part)
    for p in s.continuous_part:
        if isinstance(p, Interval):
            lo, hi = p.lo, p.hi
            out += [rat(hi), rat(lo)]
            out += [rat(lo + (hi - lo) * Fraction(rng.randint(1, 63), 64))
                    for _ in range(interior)] if rng else [rat((lo + hi) / 2)]
        elif isinstance(p, DownRay):
            out += [rat(p.top), rat(p.top - 1), NEG_INF]
            out += [rat(p.top - Fraction(rng.randint(1, 640), 64)) for _ in range(interior)] if rng else []
        elif isinstance(p, UpRay):
            out += [rat(p.bottom), rat(p.bottom + 1)]
            out += [rat(p.bottom + Fraction(rng.randint(1, 640), 64)) for _ in range(interior)] if rng else []
        elif isinstance(p, RealLine):
            out += [rat(0), rat(-1), rat(1)]
        elif isinstance(p, Arc):
            out += [turn(p.start), turn(p.end)]
            out += [turn(p.start + p.length * Fraction(rng.randint(1, 63), 64))
                    for _ in range(interior)] if rng else [turn(p.start + p.length / 2)]
        elif isinstance(p, FullCircle):
            out += [turn(Fraction(i, 8)) for i in range(8)]
    return list(dict.fromkeys(out))


def check_reversibility(A: Hyperstructure, sampler: Optional[Sampler] = None) -> LawReport:
    """If a lies in b + c then c lies in a + (-b); 32 interior points per infinite piece."""
    sampler = sampler or Sampler()
    if not A.has_negation:
        return _na("reversibility", "no negation map", "subset")
    it, ex = sampler.tuples(A, 2, "reversibility")
    rng = sampler.rng("reversibility/members")

    def cases():
        for b, c in it:
            s = A.hyperadd(b, c)
            members = list(s) if s.is_finite else _members(s, rng, interior=32)
            for a in members:
                if a in A.carrier:
                    yield (a, b, c), *_sides_reversibility(A, a, b, c)
    rep = _run("reversibility", cases(), ex and A.carrier.is_finite, "subset")
    return replace(rep, status=PASS if rep.status == STRICT else rep.status,
                   witness=rep.witness if rep.status == FAIL else (),
                   lhs=rep.lhs if rep.status == FAIL else None,
                   rhs=rep.rhs if rep.status == FAIL else None)


def check_property_p(A: Hyperstructure, sampler: Optional[Sampler] = None) -> LawReport:
    sampler = sampler or Sampler()
    it, ex = sampler.tuples(A, 2, "property_p")
    cases = ((w, *_sides_property_p(A, *w)) for w in it if not A.hyperadd(*w).is_singleton)
    rep = _run("property_p", cases, ex, "subset")
    if rep.status == STRICT:
        rep = replace(rep, status=PASS, witness=(), lhs=None, rhs=None)
    return rep


def check_mul_monoid(A: Hyperstructure, sampler: Optional[Sampler] = None) -> LawReport:
    sampler = sampler or Sampler()
    if not A.has_mul:
        return _na("mul_monoid", "no multiplication")
    it3, ex3 = sampler.tuples(A, 3, "mul_assoc")
    assoc = _run("m", ((("assoc",) + w, *_sides_mul_monoid(A, "assoc", *w)) for w in it3), ex3)
    it1, ex1 = sampler.tuples(A, 1, "mul_one")
    unit = _run("m", ((("one", a), *_sides_mul_monoid(A, "one", a)) for (a,) in it1), ex1)
    return _merge("mul_monoid", [assoc, unit], "equal")


def check_mul_group(A: Hyperstructure, sampler: Optional[Sampler] = None) -> LawReport:
    sampler = sampler or Sampler()
    if not A.has_mul:
        return _na("mul_group", "no multiplication")
    it, ex = sampler.tuples(A, 1, "group")
    n = 0
    for (a,) in it:
        if a == A.zero:
            continue
        n += 1
        inv = A.mul_inverse(a)
        if inv is None or A.mul(a, inv) != A.one:
            return LawReport("mul_group", FAIL, (a,), singleton(a), None, n, ex,
                             note="no multiplicative inverse")
    return LawReport("mul_group", PASS, samples_used=n, exhaustive=ex)


def check_distributivity(A: Hyperstructure, sampler: Optional[Sampler] = None) -> LawReport:
    """Element-level a(b + c) = ab + ac."""
    sampler = sampler or Sampler()
    if not A.has_mul:
        return _na("distributivity", "no multiplication")
    it, ex = sampler.tuples(A, 3, "distributivity")
    return _run("distributivity", ((w, *_sides_distributivity(A, *w)) for w in it), ex)


def check_weak_distributivity(A: Hyperstructure, sampler: Optional[Sampler] = None,
                              set_sizes: Sequence = ((1, 2), (2, 2), (2, 3))) -> LawReport:
    """(+S)(+T) is contained in the hypersum of all pairwise products."""
    sampler = sampler or Sampler()
    if not A.has_mul:
        return _na("weak_distributivity", "no multiplication", "subset")
    it, ex = sampler.families(A, set_sizes, "weak_distributivity")
    return _run("weak_distributivity",
                ((w, *_sides_family_product(A, *w)) for w in it), ex, "subset")


def check_double_distributivity(A: Hyperstructure, sampler: Optional[Sampler] = None) -> LawReport:
    sampler = sampler or Sampler()
    if not A.has_mul:
        return _na("double_distributivity", "no multiplication")
    it, ex = sampler.tuples(A, 4, "double_distributivity")
    return _run("double_distributivity", ((w, *_sides_double(A, *w)) for w in it), ex)


def check_generalized_distributivity(A: Hyperstructure, sampler: Optional[Sampler] = None,
                                     max_arity: int = 3) -> LawReport:
    sampler = sampler or Sampler()
    if not A.has_mul:
        return _na("generalized_distributivity", "no multiplication")
    sizes = [(m, n) for m in range(1, max_arity + 1) for n in range(1, max_arity + 1)]
    sizes.sort(key=lambda mn: (max(mn), mn))
    it, ex = sampler.families(A, sizes, "generalized_distributivity")
    return _run("generalized_distributivity",
                ((w, *_sides_family_product(A, *w)) for w in it), ex)


def check_group_forces_distributivity(A: Hyperstructure, sampler: Optional[Sampler] = None,
                                      max_terms: int = 3) -> LawReport:
    """With a group of nonzero elements, a(+T) = +(aT) for elements and for set values."""
    sampler = sampler or Sampler()
    law = "group_forces_distributivity"
    if not is_mul_group(A, sampler):
        return _na(law, "nonzero elements are not a multiplicative group")
    sizes = [(1, n) for n in range(2, max_terms + 1)]
    it, ex = sampler.families(A, sizes, law)
    elementwise = _run(law, (((xs[0], ys), *_sides_scalar(A, xs[0], ys)) for xs, ys in it), ex)
    it2, ex2 = sampler.set_tuples(A, 2, law + "/sets")
    rng = sampler.rng(law + "/scalars")
    grid = sampler.grid(A)

    def module_cases():
        for i, sets in enumerate(it2):
            r = grid[i % len(grid)] if i < len(grid) else sampler.random_element(A, rng)
            yield (r, sets), *_sides_scalar(A, r, sets)
    modular = _run(law, module_cases(), ex2 and A.carrier.is_finite)
    return _merge(law, [elementwise, modular], "equal")


def check_tsemiring(A: Hyperstructure, sampler: Optional[Sampler] = None) -> LawReport:
    """Left-multiplication identities for tangible scalars over sampled set values."""
    sampler = sampler or Sampler()
    law = "tsemiring"
    if not A.has_mul:
        return _na(law, "no multiplication")

    def tangible(r):
        return A.is_tangible(r)

    rng = sampler.rng(law)
    if A.carrier.is_finite:
        fam = sampler.tilde_family(A)
        tang = [e for e in A.carrier.atoms if tangible(e)]
        ex = sampler.exhaustive_for(A, len(tang) ** 2 * len(fam) + len(tang) * len(fam) ** 2)
        if ex:
            first = ((("i", r1, r2, x), *_sides_tsemiring(A, "i", r1, r2, x))
                     for r1 in tang for r2 in tang for x in fam)
            second = ((("ii", r, x1, x2), *_sides_tsemiring(A, "ii", r, x1, x2))
                      for r in tang for x1 in fam for x2 in fam)
            return _merge(law, [_run(law, first, True), _run(law, second, True)], "equal")

    def pick():
        while True:
            r = sampler.random_element(A, rng)
            if tangible(r):
                return r

    def first():
        for _ in range(sampler.samples):
            r1 = pick()
            r2 = r1 if rng.random() < 0.3 else pick()
            x = sampler.random_set(A, rng)
            yield ("i", r1, r2, x), *_sides_tsemiring(A, "i", r1, r2, x)

    def second():
        for _ in range(sampler.samples):
            r, x1, x2 = pick(), sampler.random_set(A, rng), sampler.random_set(A, rng)
            yield ("ii", r, x1, x2), *_sides_tsemiring(A, "ii", r, x1, x2)
    return _merge(law, [_run(law, first(), False), _run(law, second(), False)], "equal")


def check_weak_module(A: Hyperstructure, sampler: Optional[Sampler] = None) -> LawReport:
    """The weak-module axioms for the power set of A over A; inclusion (ii) counts as holding."""
    sampler = sampler or Sampler()
    law = "weak_module"
    if not A.has_mul:
        return _na(law, "no multiplication")
    it1, ex1 = sampler.set_tuples(A, 3, law + "/i")
    p1 = _run(law, ((("i",) + w, *_sides_weak_module(A, "i", *w)) for w in it1), ex1)
    it2, ex2 = sampler.families(A, ((2, 2), (1, 3)), law + "/ii")
    p2 = _run(law, ((("ii",) + w, *_sides_weak_module(A, "ii", *w)) for w in it2), ex2, "subset")
    it3, ex3 = sampler.tuples(A, 1, law + "/iii")
    p3 = _run(law, ((("iii", r), *_sides_weak_module(A, "iii", r)) for (r,) in it3), ex3)
    it4, ex4 = sampler.tuples(A, 1, law + "/iv")
    p4 = _run(law, ((("iv", a), *_sides_weak_module(A, "iv", a)) for (a,) in it4), ex4)
    if p2.status == STRICT:
        p2 = replace(p2, status=PASS, witness=(), lhs=None, rhs=None)
    return _merge(law, [p1, p2, p3, p4], "equal")


def check_negation_laws(A: Hyperstructure, sampler: Optional[Sampler] = None) -> LawReport:
    sampler = sampler or Sampler()
    law = "negation_laws"
    if not A.has_negation:
        return _na(law, "no negation map")
    parts = []
    it, ex = sampler.tuples(A, 1, law + "/unary")
    singles = [a for (a,) in it]
    for tag in ("involution", "hyperzero"):
        rel = "subset" if tag == "hyperzero" else "equal"
        rep = _run(law, (((tag, a), *_sides_negation(A, tag, a)) for a in singles), ex, rel)
        parts.append(replace(rep, status=PASS) if rep.status == STRICT else rep)
    binary_tags = ["hom"] + (["mul_left", "mul_right"] if A.has_mul else [])
    for tag in binary_tags:
        it2, ex2 = sampler.tuples(A, 2, f"{law}/{tag}")
        parts.append(_run(law, (((tag,) + w, *_sides_negation(A, tag, *w)) for w in it2), ex2))
    set_tags = [("set_involution", 1), ("set_hom", 2)] + ([("set_mul", 2)] if A.has_mul else [])
    for tag, k in set_tags:
        its, exs = sampler.set_tuples(A, k, f"{law}/{tag}")
        parts.append(_run(law, (((tag,) + w, *_sides_negation(A, tag, *w)) for w in its), exs))
    return _merge(law, parts, "equal")


def hyperzeros(A: Hyperstructure, sampler: Optional[Sampler] = None) -> list:
    """Distinct sets a + (-a) over the sampled elements, in canonical order."""
    sampler = sampler or Sampler()
    if not A.has_negation:
        raise ValueError(f"{A.name} has no negation map")
    it, _ = sampler.tuples(A, 1, "hyperzeros")
    found = {A.hyperadd(a, A.negate(a)) for (a,) in it}
    return sorted(found, key=lambda v: v.sort_key())


def check_hyperzero_halving(A: Hyperstructure, sampler: Optional[Sampler] = None) -> LawReport:
    """Every hyperzero of the form [0, b] splits as [0, b/2] + [0, b/2]."""
    law = "hyperzero_halving"
    if not A.has_negation:
        return _na(law, "no negation map")
    tops = []
    for h in hyperzeros(A, sampler):
        p = h.pieces
        if len(p) == 1 and isinstance(p[0], Interval) and p[0].lo == 0:
            tops.append(rat(p[0].hi))
    if not tops:
        return _na(law, "no interval hyperzeros [0, b]")
    return _run(law, (((b,), *_sides_halving(A, b)) for b in tops), False)


def check_left_mul_weak_morphism(A: Hyperstructure, sampler: Optional[Sampler] = None) -> LawReport:
    """S -> rS satisfies r(+S) within +(rS); equality expected when scalars are invertible."""
    sampler = sampler or Sampler()
    law = "left_mul_weak_morphism"
    if not A.has_mul:
        return _na(law, "no multiplication", "subset")
    it, ex = sampler.set_tuples(A, 2, law)
    scalars = list(A.carrier.atoms) if A.carrier.is_finite else sampler.grid(A)
    rng = sampler.rng(law)

    def cases():
        for i, sets in enumerate(it):
            if A.carrier.is_finite and ex:
                for r in scalars:
                    yield (r, sets), *_sides_scalar(A, r, sets)
            else:
                r = scalars[i] if i < len(scalars) else sampler.random_element(A, rng)
                yield (r, sets), *_sides_scalar(A, r, sets)
    return _run(law, cases(), ex, "subset")


# -------------------------------------------------------------------- suite

LAWS: dict = {
    "neutral_commutative": check_neutral_and_commutative,
    "associativity": check_associativity,
    "unique_hyperinverse": check_unique_hyperinverse,
    "reversibility": check_reversibility,
    "property_p": check_property_p,
    "mul_monoid": check_mul_monoid,
    "mul_group": check_mul_group,
    "distributivity": check_distributivity,
    "weak_distributivity": check_weak_distributivity,
    "group_forces_distributivity": check_group_forces_distributivity,
    "negation_laws": check_negation_laws,
    "weak_module": check_weak_module,
    "left_mul_weak_morphism": check_left_mul_weak_morphism,
    "double_distributivity": check_double_distributivity,
    "generalized_distributivity": check_generalized_distributivity,
    "tsemiring": check_tsemiring,
    "hyperzero_halving": check_hyperzero_halving,
}

_HYPERMONOID = ["neutral_commutative", "associativity"]
_HYPERGROUP = _HYPERMONOID + ["unique_hyperinverse", "reversibility"]
_HYPERRING = _HYPERMONOID + ["mul_monoid", "distributivity", "weak_distributivity"]
_HYPERFIELD = _HYPERGROUP + ["property_p", "mul_monoid", "mul_group", "distributivity",
                             "weak_distributivity", "group_forces_distributivity",
                             "negation_laws"]
PROFILES = {
    "hypermonoid": _HYPERMONOID,
    "hypergroup": _HYPERGROUP,
    "hyperring": _HYPERRING,
    "hyperfield": _HYPERFIELD,
    "all": _HYPERFIELD + ["weak_module", "left_mul_weak_morphism", "double_distributivity",
                          "generalized_distributivity", "tsemiring", "hyperzero_halving"],
}

# a failure of any prerequisite downgrades the dependent law to not_applicable
_REQUIRES = {
    "reversibility": ("associativity", "unique_hyperinverse"),
    "weak_distributivity": ("associativity",),
    "group_forces_distributivity": ("associativity",),
    "weak_module": ("associativity",),
    "left_mul_weak_morphism": ("associativity",),
    "double_distributivity": ("associativity",),
    "generalized_distributivity": ("associativity",),
    "tsemiring": ("associativity",),
    "hyperzero_halving": ("associativity",),
}


def run_suite(A: Hyperstructure, profile: str = "all",
              sampler: Optional[Sampler] = None) -> list:
    if profile not in PROFILES:
        raise ValidationError(f"unknown profile {profile!r}; choose from {', '.join(PROFILES)}")
    sampler = sampler or Sampler()
    done: dict = {}
    for law in PROFILES[profile]:
        failed = [d for d in _REQUIRES.get(law, ()) if d in done and done[d].status == FAIL]
        if failed:
            done[law] = _na(law, f"requires {', '.join(failed)}")
        else:
            done[law] = LAWS[law](A, sampler)
    return [done[law] for law in PROFILES[profile]]


# ------------------------------------------------------------- re-evaluation

_SIDES: dict = {
    "associativity": _sides_assoc,
    "reversibility": _sides_reversibility,
    "property_p": _sides_property_p,
    "distributivity": _sides_distributivity,
    "weak_distributivity": _sides_family_product,
    "generalized_distributivity": _sides_family_product,
    "double_distributivity": _sides_double,
    "group_forces_distributivity": _sides_scalar,
    "left_mul_weak_morphism": _sides_scalar,
    "hyperzero_halving": _sides_halving,
    "neutral_commutative": _sides_neutral,
    "mul_monoid": _sides_mul_monoid,
    "tsemiring": _sides_tsemiring,
    "weak_module": _sides_weak_module,
    "negation_laws": _sides_negation,
}


def reevaluate(A: Hyperstructure, report: LawReport) -> tuple:
    """Recompute ``(lhs, rhs)`` from a report's witness through the public operations."""
    if report.law_id == "unique_hyperinverse":
        return A.hyperinverses(report.witness[0]), None
    if report.law_id == "mul_group":
        return singleton(report.witness[0]), None
    return _SIDES[report.law_id](A, *report.witness)
