"""Concrete hyperstructures: finite tables, the real/circle hyperfields and quotients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, Mapping, Optional, Sequence

from .core import (
    HALF, NEG_INF, ZERO_POINT, Arc, Carrier, DownRay, Element, FullCircle,
    HyperkitError, Hyperstructure, InexactLift, Interval, Points, RealLine,
    SetValue, UpRay, ValidationError, atom, rat, singleton, sv_normalize,
    turn,
)

__all__ = [
    "FiniteHyperstructure", "FiniteSemiring", "MonoidSurjection", "QuotientError",
    "krasner", "signs", "tropical", "triangle", "phase", "lopez_interval",
    "pathological_maxplus", "quotient", "supertropical", "SuperElement",
    "Supertropical", "BUILTINS", "get_builtin",
]


class QuotientError(HyperkitError, ValueError):
    def __init__(self, message: str, witness=()):
        super().__init__(message)
        self.witness = tuple(witness)


# ------------------------------------------------------------ finite tables


class FiniteHyperstructure(Hyperstructure):
    """Hyperstructure on a finite set of atoms given by explicit tables."""

    def __init__(self, name: str, atoms: Sequence[str], zero: str, one: Optional[str],
                 mul_table: Optional[Mapping], add_table: Mapping,
                 neg_table: Optional[Mapping] = None, hints: Sequence[str] = ()):
        self.name = name
        elems = tuple(atom(a) for a in atoms)
        self.carrier = Carrier("finite", elems)
        self.zero = atom(zero)
        self.one = atom(one) if one is not None else None
        self.has_mul = mul_table is not None
        self.has_negation = neg_table is not None
        self.hints = tuple(atom(h) for h in hints)

        def el(x) -> Element:
            e = x if isinstance(x, Element) else atom(x)
            if e not in self.carrier:
                raise ValidationError(f"{name}: {e} is not a declared atom")
            return e

        for e in (self.zero,) + ((self.one,) if self.one is not None else ()):
            el(e)
        self._add: Dict = {}
        for (a, b), out in add_table.items():
            a, b = el(a), el(b)
            value = out if isinstance(out, SetValue) else SetValue.points(*(el(c) for c in out))
            if not value.issubset(SetValue.points(*elems)) or not value:
                raise ValidationError(f"{name}: bad hyperadd entry for ({a},{b})")
            for key in ((a, b), (b, a)):
                if key in self._add and self._add[key] != value:
                    raise ValidationError(f"{name}: hyperadd not commutative at ({a},{b})")
                self._add[key] = value
        for a, b in product(elems, repeat=2):
            if (a, b) not in self._add:
                raise ValidationError(f"{name}: missing hyperadd row for ({a},{b})")
        self._mul_t: Dict = {}
        if mul_table is not None:
            for (a, b), c in mul_table.items():
                self._mul_t[(el(a), el(b))] = el(c)
            for a, b in product(elems, repeat=2):
                if (a, b) not in self._mul_t:
                    raise ValidationError(f"{name}: missing mul row for ({a},{b})")
        self._neg: Dict = {}
        if neg_table is not None:
            self._neg = {el(a): el(b) for a, b in neg_table.items()}
            for a in elems:
                if a not in self._neg:
                    raise ValidationError(f"{name}: missing negation row for {a}")

    @property
    def elements(self) -> tuple:
        return self.carrier.atoms

    def _hyperadd(self, a, b):
        return self._add[(a, b)]

    def _mul(self, a, b):
        return self._mul_t[(a, b)]

    def _negate(self, a):
        return self._neg[a]

    def _hyperinverses(self, a):
        return SetValue.points(*(b for b in self.elements if self.zero in self._add[(a, b)]))

    def mul_inverse(self, a):
        if not self.has_mul:
            return None
        for b in self.elements:
            if self._mul_t[(a, b)] == self.one and self._mul_t[(b, a)] == self.one:
                return b
        return None

    def tables(self) -> tuple:
        return (self.carrier.atoms, self.zero, self.one, dict(self._mul_t),
                dict(self._add), dict(self._neg))

    def __eq__(self, other):
        if not isinstance(other, FiniteHyperstructure):
            return NotImplemented
        return self.tables() == other.tables()

    def __hash__(self):
        return hash((self.carrier.atoms, self.zero, self.one))


def krasner() -> FiniteHyperstructure:
    """The Krasner hyperfield {0, 1} with 1 + 1 = {0, 1}."""
    return FiniteHyperstructure(
        "krasner", ["0", "1"], zero="0", one="1",
        mul_table={(a, b): str(int(a) * int(b)) for a in "01" for b in "01"},
        add_table={("0", "0"): ["0"], ("0", "1"): ["1"], ("1", "1"): ["0", "1"]},
        neg_table={"0": "0", "1": "1"},
    )


def signs() -> FiniteHyperstructure:
    """The hyperfield of signs {0, 1, -1}."""
    s = ["0", "1", "-1"]
    return FiniteHyperstructure(
        "signs", s, zero="0", one="1",
        mul_table={(a, b): str(int(a) * int(b)) for a in s for b in s},
        add_table={
            ("0", "0"): ["0"], ("0", "1"): ["1"], ("0", "-1"): ["-1"],
            ("1", "1"): ["1"], ("-1", "-1"): ["-1"], ("1", "-1"): ["0", "1", "-1"],
        },
        neg_table={"0": "0", "1": "-1", "-1": "1"},
    )


# ------------------------------------------------ real-line closed forms
#
# Sets on the line are handled as lists of closed segments (lo, hi) with
# None for an infinite end; a point a is the segment (a, a).


def _segments(s: SetValue, allow_neg_inf: bool = False):
    segs, specials = [], []
    for p in s.pieces:
        if isinstance(p, Points):
            for e in p.elements:
                if e.kind == "rational":
                    segs.append((e.value, e.value))
                elif e.kind == "neg_inf" and allow_neg_inf:
                    specials.append(e)
                else:
                    raise InexactLift(f"unexpected element {e} in {s}")
        elif isinstance(p, Interval):
            segs.append((p.lo, p.hi))
        elif isinstance(p, DownRay):
            segs.append((None, p.top))
        elif isinstance(p, UpRay):
            segs.append((p.bottom, None))
        elif isinstance(p, RealLine):
            segs.append((None, None))
        else:
            raise InexactLift(f"circle piece {p} on a line carrier")
    return segs, specials


def _segment_piece(lo, hi):
    if lo is None and hi is None:
        return RealLine()
    if lo is None:
        return DownRay(hi)
    if hi is None:
        return UpRay(lo)
    if lo == hi:
        return Points((rat(lo),))
    return Interval(lo, hi)


def _max_hi(a, b):
    return None if a is None or b is None else max(a, b)


def _min_lo(a, b):
    return None if a is None or b is None else min(a, b)


class Tropical(Hyperstructure):
    """R u {-inf}; product is +, a + b = max(a, b) or (-inf, a] when a = b."""

    name = "tropical"
    carrier = Carrier("reals_with_neg_infinity")
    zero = NEG_INF
    one = rat(0)
    has_negation = True

    def _hyperadd(self, a, b):
        if a == NEG_INF:
            return singleton(b)
        if b == NEG_INF:
            return singleton(a)
        if a != b:
            return singleton(max(a, b))
        return SetValue.of(DownRay(a.value))

    def _mul(self, a, b):
        if a == NEG_INF or b == NEG_INF:
            return NEG_INF
        return rat(a.value + b.value)

    def _negate(self, a):
        return a

    def _hyperinverses(self, a):
        return singleton(a)

    def mul_inverse(self, a):
        return None if a == NEG_INF else rat(-a.value)

    def set_add(self, s, t):
        sa, s_inf = _segments(s, allow_neg_inf=True)
        ta, t_inf = _segments(t, allow_neg_inf=True)
        pieces = []
        if s_inf:
            pieces.extend(t.pieces)
        if t_inf:
            pieces.extend(s.pieces)
        for (l1, h1), (l2, h2) in product(sa, ta):
            # both ends are finite for h; l may be None (down-ray)
            if h1 is None or h2 is None:
                raise InexactLift("tropical sets are bounded above")
            lo = max(l for l in (l1, l2) if l is not None) if (l1, l2) != (None, None) else None
            if lo is None or lo <= min(h1, h2):
                pieces.append(DownRay(max(h1, h2)))
            elif l2 is not None and h1 < l2:
                pieces.append(_segment_piece(l2, h2))
            else:
                pieces.append(_segment_piece(l1, h1))
        return sv_normalize(pieces)

    def set_mul(self, s, t):
        if not s or not t:
            return SetValue.empty()
        sa, s_inf = _segments(s, allow_neg_inf=True)
        ta, t_inf = _segments(t, allow_neg_inf=True)
        pieces = []
        if s_inf or t_inf:
            pieces.append(Points((NEG_INF,)))
        for (l1, h1), (l2, h2) in product(sa, ta):
            lo = None if l1 is None or l2 is None else l1 + l2
            hi = None if h1 is None or h2 is None else h1 + h2
            pieces.append(_segment_piece(lo, hi))
        return sv_normalize(pieces)

    def set_neg(self, s):
        return s


class Triangle(Hyperstructure):
    """Nonnegative reals with a + b = [|a - b|, a + b]."""

    name = "triangle"
    carrier = Carrier("nonneg_reals")
    zero = rat(0)
    one = rat(1)
    has_negation = True
    hints = (rat(1), rat(2))

    def _hyperadd(self, a, b):
        return SetValue.of(Interval(abs(a.value - b.value), a.value + b.value))

    def _mul(self, a, b):
        return rat(a.value * b.value)

    def _negate(self, a):
        return a

    def _hyperinverses(self, a):
        return singleton(a)

    def mul_inverse(self, a):
        return None if a.value == 0 else rat(1 / a.value)

    def set_add(self, s, t):
        sa, _ = _segments(s)
        ta, _ = _segments(t)
        pieces = []
        for (l1, h1), (l2, h2) in product(sa, ta):
            if None in (l1, h1, l2, h2):
                raise InexactLift("triangle sets must be bounded intervals")
            gap = max(l1 - h2, l2 - h1, Fraction(0))
            pieces.append(_segment_piece(gap, h1 + h2))
        return sv_normalize(pieces)

    def set_mul(self, s, t):
        sa, _ = _segments(s)
        ta, _ = _segments(t)
        pieces = []
        for (l1, h1), (l2, h2) in product(sa, ta):
            if None in (l1, h1, l2, h2):
                raise InexactLift("triangle sets must be bounded intervals")
            pieces.append(_segment_piece(l1 * l2, h1 * h2))
        return sv_normalize(pieces)

    def set_neg(self, s):
        return s


class Lopez(Hyperstructure):
    """R with a + b = [min(a, b), max(a, b)]; no neutral and no product."""

    name = "lopez"
    carrier = Carrier("reals")
    zero = rat(0)   # reference point for hyperinverses only
    one = None
    has_neutral = False
    has_mul = False
    has_negation = True
    hints = (rat(1),)

    def _hyperadd(self, a, b):
        return SetValue.of(Interval(min(a.value, b.value), max(a.value, b.value)))

    def _negate(self, a):
        return rat(-a.value)

    def _hyperinverses(self, a):
        # 0 lies in [min(a, b), max(a, b)] exactly when b is on the other side of 0
        if a.value > 0:
            return SetValue.of(DownRay(Fraction(0)))
        if a.value < 0:
            return SetValue.of(UpRay(Fraction(0)))
        return SetValue.of(RealLine())

    def set_add(self, s, t):
        sa, _ = _segments(s)
        ta, _ = _segments(t)
        pieces = [_segment_piece(_min_lo(l1, l2), _max_hi(h1, h2))
                  for (l1, h1), (l2, h2) in product(sa, ta)]
        return sv_normalize(pieces)

    def set_neg(self, s):
        sa, _ = _segments(s)
        return sv_normalize([_segment_piece(None if h is None else -h, None if l is None else -l)
                             for l, h in sa])


class MaxPlus(Hyperstructure):
    """Max-plus hyperaddition with a pathological diagonal a + a."""

    has_negation = False
    associative = False

    def __init__(self, variant: int):
        if variant not in (1, 2):
            raise ValidationError(f"unknown max-plus variant {variant}")
        self.variant = variant
        self.name = f"maxplus{variant}"
        # variant 1 lives on the nonnegative ("natural") max-plus algebra
        self.carrier = Carrier("nonneg_reals" if variant == 1 else "reals")
        self.zero = rat(0)
        self.one = rat(0)
        self.hints = (rat(2), rat(5)) if variant == 1 else (rat(2), rat(3))

    def _hyperadd(self, a, b):
        if a != b:
            return singleton(max(a, b))
        if self.variant == 1:
            return SetValue.points(0, 9)
        return SetValue.points(-a.value, 0, a.value)

    def _mul(self, a, b):
        return rat(a.value + b.value)

    def _hyperinverses(self, a):
        x = a.value
        if self.variant == 1 or x > 0:
            return singleton(a)
        if x < 0:
            return SetValue.points(x, 0)
        return SetValue.of(DownRay(Fraction(0)))

    def mul_inverse(self, a):
        return rat(-a.value) if self.variant == 2 else (a if a.value == 0 else None)


# ------------------------------------------------------------------- phase


def _ccw(a: Fraction, b: Fraction) -> Fraction:
    return (b - a) % 1


class Phase(Hyperstructure):
    """The unit circle (in turns) with an adjoined zero; sums are short closed arcs."""

    name = "phase"
    carrier = Carrier("unit_circle_with_zero")
    zero = ZERO_POINT
    one = turn(0)
    has_negation = True
    hints = (turn(0), turn(Fraction(1, 4)), turn(HALF))

    def _hyperadd(self, a, b):
        if a == ZERO_POINT:
            return singleton(b)
        if b == ZERO_POINT or a == b:
            return singleton(a)
        d = _ccw(a.value, b.value)
        if d == HALF:
            return SetValue.points(a, ZERO_POINT, b)
        if d < HALF:
            return SetValue.of(Arc(a.value, b.value))
        return SetValue.of(Arc(b.value, a.value))

    def _mul(self, a, b):
        if a == ZERO_POINT or b == ZERO_POINT:
            return ZERO_POINT
        return turn(a.value + b.value)

    def _negate(self, a):
        return a if a == ZERO_POINT else turn(a.value + HALF)

    def _hyperinverses(self, a):
        return singleton(self._negate(a))

    def mul_inverse(self, a):
        return None if a == ZERO_POINT else turn(-a.value)

    @staticmethod
    def _split(s: SetValue):
        """Turn part as (start, length) components, the full-circle flag, and zero membership."""
        comps, full, has_zero = [], False, False
        for p in s.pieces:
            if isinstance(p, Points):
                for e in p.elements:
                    if e == ZERO_POINT:
                        has_zero = True
                    elif e.kind == "turn":
                        comps.append((e.value, Fraction(0)))
                    else:
                        raise InexactLift(f"{e} is not a phase element")
            elif isinstance(p, Arc):
                comps.append((p.start, p.length))
            elif isinstance(p, FullCircle):
                full = True
            else:
                raise InexactLift(f"line piece {p} on the circle")
        return comps, full, has_zero

    @staticmethod
    def _turn_part(s: SetValue) -> SetValue:
        return sv_normalize([p if not isinstance(p, Points) else
                             Points(tuple(e for e in p.elements if e != ZERO_POINT))
                             for p in s.pieces])

    def set_add(self, s, t):
        sc, sfull, sz = self._split(s)
        tc, tfull, tz = self._split(t)
        out = []
        if sz and tz:
            out.append(Points((ZERO_POINT,)))
        if sz:
            out.extend(self._turn_part(t).pieces)
        if tz:
            out.extend(self._turn_part(s).pieces)
        s_turns = bool(sc) or sfull
        t_turns = bool(tc) or tfull
        if s_turns and t_turns:
            out.extend(self._add_turns(sc, sfull, tc, tfull))
        return sv_normalize(out)

    def _add_turns(self, xs, xfull, ys, yfull):
        if xfull or yfull:
            return [FullCircle(), Points((ZERO_POINT,))]
        pieces = []
        # zero appears exactly when an antipodal pair can be chosen
        shifted = [((s + HALF) % 1, length) for s, length in xs]
        if any(_arcs_meet(a, b) for a in shifted for b in ys):
            pieces.append(Points((ZERO_POINT,)))

        def inside(comps, p):
            return any(_ccw(s, p) <= length for s, length in comps)

        def dist_to(comps, p):     # min ccw distance from the set to p
            return min(Fraction(0) if _ccw(s, p) <= length else _ccw(s + length, p)
                       for s, length in comps)

        def dist_from(comps, p):   # min ccw distance from p to the set
            return min(Fraction(0) if _ccw(s, p) <= length else _ccw(p, s)
                       for s, length in comps)

        def member(p):
            return (inside(xs, p) or inside(ys, p)
                    or dist_to(xs, p) + dist_from(ys, p) < HALF
                    or dist_to(ys, p) + dist_from(xs, p) < HALF)

        # membership is constant between consecutive endpoints
        cands = sorted({(s + d) % 1 for s, length in xs + ys for d in (0, length)})
        k = len(cands)
        cand_in = [member(c) for c in cands]
        for i, c in enumerate(cands):
            nxt = cands[(i + 1) % k] + (1 if i + 1 == k else 0)
            mid = (c + nxt) / 2 % 1
            if member(mid):
                if not (cand_in[i] and cand_in[(i + 1) % k]):
                    raise InexactLift("phase sum is not closed")
                if k == 1:
                    return pieces + [FullCircle()]
                pieces.append(Arc(c, nxt % 1))
        pieces.append(Points(tuple(turn(c) for c, ok in zip(cands, cand_in) if ok)))
        return pieces

    def set_mul(self, s, t):
        if not s or not t:
            return SetValue.empty()
        sc, sfull, sz = self._split(s)
        tc, tfull, tz = self._split(t)
        out = []
        if sz or tz:
            out.append(Points((ZERO_POINT,)))
        if (sc or sfull) and (tc or tfull):
            if sfull or tfull:
                out.append(FullCircle())
            for (s1, l1), (s2, l2) in product(sc, tc):
                out.append(_arc_piece(s1 + s2, l1 + l2))
        return sv_normalize(out)

    def set_neg(self, s):
        sc, full, z = self._split(s)
        out = [_arc_piece(st + HALF, length) for st, length in sc]
        if full:
            out.append(FullCircle())
        if z:
            out.append(Points((ZERO_POINT,)))
        return sv_normalize(out)


def _arc_piece(start: Fraction, length: Fraction):
    if length >= 1:
        return FullCircle()
    if length == 0:
        return Points((turn(start),))
    return Arc(start % 1, (start + length) % 1)


def _arcs_meet(a, b) -> bool:
    (s1, l1), (s2, l2) = a, b
    return _ccw(s1, s2) <= l1 or _ccw(s2, s1) <= l2


def tropical() -> Tropical:
    return Tropical()


def triangle() -> Triangle:
    return Triangle()


def phase() -> Phase:
    return Phase()


def lopez_interval() -> Lopez:
    return Lopez()


def pathological_maxplus(variant: int) -> MaxPlus:
    return MaxPlus(variant)


# ---------------------------------------------------------------- quotients


@dataclass(frozen=True)
class FiniteSemiring:
    """Commutative semiring on atoms, validated exhaustively on construction."""

    carrier: tuple
    add_table: Mapping
    mul_table: Mapping
    zero: str
    one: str

    def __post_init__(self):
        c = self.carrier
        if len(set(c)) != len(c):
            raise ValidationError("semiring carrier atoms must be distinct")
        for table, what in ((self.add_table, "add"), (self.mul_table, "mul")):
            for a, b in product(c, repeat=2):
                if table.get((a, b)) not in c:
                    raise ValidationError(f"{what} table not closed at ({a},{b})")
        add, mul = self.add, self.mul
        for a, b in product(c, repeat=2):
            if add(a, b) != add(b, a):
                raise ValidationError(f"addition not commutative at ({a},{b})")
            if mul(a, b) != mul(b, a):
                raise ValidationError(f"multiplication not commutative at ({a},{b})")
        for a in c:
            if add(a, self.zero) != a:
                raise ValidationError(f"{self.zero} is not additively neutral at {a}")
            if mul(a, self.one) != a:
                raise ValidationError(f"{self.one} is not a multiplicative identity at {a}")
            if mul(a, self.zero) != self.zero:
                raise ValidationError(f"{self.zero} is not absorbing at {a}")
        for a, b, d in product(c, repeat=3):
            if add(add(a, b), d) != add(a, add(b, d)):
                raise ValidationError(f"addition not associative at ({a},{b},{d})")
            if mul(mul(a, b), d) != mul(a, mul(b, d)):
                raise ValidationError(f"multiplication not associative at ({a},{b},{d})")
            if mul(a, add(b, d)) != add(mul(a, b), mul(a, d)):
                raise ValidationError(f"distributivity fails at ({a},{b},{d})")

    def add(self, a: str, b: str) -> str:
        return self.add_table[(a, b)]

    def mul(self, a: str, b: str) -> str:
        return self.mul_table[(a, b)]

    def neg(self, a: str) -> Optional[str]:
        for b in self.carrier:
            if self.add(a, b) == self.zero:
                return b
        return None

    @classmethod
    def integers_mod(cls, n: int) -> "FiniteSemiring":
        c = tuple(str(i) for i in range(n))
        return cls(
            c,
            {(a, b): str((int(a) + int(b)) % n) for a in c for b in c},
            {(a, b): str((int(a) * int(b)) % n) for a in c for b in c},
            "0", "1",
        )


@dataclass(frozen=True)
class MonoidSurjection:
    """A map of multiplicative monoids from a finite semiring onto target atoms."""

    source: FiniteSemiring
    target_carrier: tuple
    mapping: Mapping

    def __post_init__(self):
        src = self.source
        missing = [r for r in src.carrier if r not in self.mapping]
        if missing:
            raise QuotientError(f"map undefined on {missing[0]}", (missing[0],))
        for r in src.carrier:
            if self.mapping[r] not in self.target_carrier:
                raise QuotientError(f"image of {r} not in target", (r,))
        for t in self.target_carrier:
            if not self.fiber(t):
                raise QuotientError(f"map is not surjective: {t} has an empty fiber", (t,))
        self.induced_mul()   # raises on a non-multiplicative map

    def __call__(self, r: str) -> str:
        return self.mapping[r]

    def fiber(self, t: str) -> tuple:
        return tuple(r for r in self.source.carrier if self.mapping[r] == t)

    def induced_mul(self) -> Dict:
        table: Dict = {}
        for r1, r2 in product(self.source.carrier, repeat=2):
            key = (self(r1), self(r2))
            val = self(self.source.mul(r1, r2))
            if table.setdefault(key, val) != val:
                raise QuotientError(
                    f"map is not multiplicative: products over fibers {key} disagree",
                    (r1, r2))
        return table


def quotient(R: FiniteSemiring, phi: MonoidSurjection, name: str = "quotient") -> FiniteHyperstructure:
    """Hyperring on the target with a1 + a2 = phi(phi^-1(a1) + phi^-1(a2))."""
    if phi.source != R:
        raise QuotientError("surjection source differs from R")
    targets = phi.target_carrier
    add = {}
    for a1, a2 in product(targets, repeat=2):
        add[(a1, a2)] = sorted({phi(R.add(r1, r2)) for r1 in phi.fiber(a1) for r2 in phi.fiber(a2)})
    neg = None
    if all(R.neg(r) is not None for r in R.carrier):
        neg = {}
        for r in R.carrier:
            val = phi(R.neg(r))
            if neg.setdefault(phi(r), val) != val:
                neg = None
                break
    return FiniteHyperstructure(name, targets, zero=phi(R.zero), one=phi(R.one),
                                mul_table=phi.induced_mul(), add_table=add, neg_table=neg)


# ----------------------------------------------------------- supertropical


@dataclass(frozen=True, order=True)
class SuperElement:
    """Tangible or ghost value; ``value is None`` is the zero -inf."""

    value: Optional[Fraction]
    ghost: bool = False

    def __str__(self):
        if self.value is None:
            return "-inf"
        return f"{self.value}{'^nu' if self.ghost else ''}"


class Supertropical:
    """Izhakian's extended tropical semiring: tangibles, ghosts and -inf."""

    zero = SuperElement(None)
    one = SuperElement(Fraction(0))

    @staticmethod
    def tangible(x) -> SuperElement:
        return SuperElement(Fraction(x))

    @staticmethod
    def ghost(x) -> SuperElement:
        return SuperElement(Fraction(x), True)

    def add(self, a: SuperElement, b: SuperElement) -> SuperElement:
        if a.value is None:
            return b
        if b.value is None:
            return a
        if a.value != b.value:
            return a if a.value > b.value else b
        return SuperElement(a.value, True)

    def mul(self, a: SuperElement, b: SuperElement) -> SuperElement:
        if a.value is None or b.value is None:
            return self.zero
        return SuperElement(a.value + b.value, a.ghost or b.ghost)


def supertropical() -> Supertropical:
    return Supertropical()


# ----------------------------------------------------------------- registry

BUILTINS: Dict[str, Callable[[], Hyperstructure]] = {
    "krasner": krasner,
    "signs": signs,
    "tropical": tropical,
    "triangle": triangle,
    "phase": phase,
    "lopez": lopez_interval,
    "maxplus1": lambda: pathological_maxplus(1),
    "maxplus2": lambda: pathological_maxplus(2),
}


def get_builtin(name: str) -> Hyperstructure:
    try:
        return BUILTINS[name]()
    except KeyError:
        raise ValidationError(
            f"unknown builtin {name!r}; choose from {', '.join(BUILTINS)}") from None
