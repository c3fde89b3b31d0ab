"""Carrier elements, canonical set values and the hyperstructure interface.

Every real-valued quantity is an exact :class:`fractions.Fraction`; circle
points are measured in full turns and kept in ``[0, 1)``.  A :class:`SetValue`
is a finite union of structured pieces held in a canonical form, so equality
of set values is plain structural equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence, Union

__all__ = [
    "Element", "atom", "rat", "turn", "NEG_INF", "ZERO_POINT", "HALF",
    "Points", "Interval", "DownRay", "UpRay", "RealLine", "Arc", "FullCircle",
    "SetValue", "Carrier", "Hyperstructure",
    "HyperkitError", "ValidationError", "NotInCarrier", "UnsupportedOperation",
    "InexactLift", "sv_normalize", "sv_relate", "hyperadd", "mul",
    "hyperinverses", "negate", "as_element",
]

HALF = Fraction(1, 2)


class HyperkitError(Exception):
    """Base class for library errors."""


class ValidationError(HyperkitError, ValueError):
    pass


class NotInCarrier(HyperkitError, ValueError):
    pass


class UnsupportedOperation(HyperkitError):
    pass


class InexactLift(HyperkitError):
    """Raised when a set-level operation has no exact closed form."""


# ---------------------------------------------------------------- elements

_KIND_RANK = {"neg_inf": 0, "rational": 1, "atom": 2, "zero_point": 3, "turn": 4}


@dataclass(frozen=True)
class Element:
    """A carrier point.

    ``kind`` is one of ``atom``, ``rational``, ``neg_inf``, ``turn`` or
    ``zero_point``; ``value`` holds the atom name or the rational.
    """

    kind: str
    value: Union[str, Fraction, None] = None

    def __post_init__(self):
        if self.kind not in _KIND_RANK:
            raise ValidationError(f"unknown element kind {self.kind!r}")
        if self.kind in ("rational", "turn") and not isinstance(self.value, Fraction):
            raise ValidationError(f"{self.kind} element needs a Fraction, got {self.value!r}")
        if self.kind == "turn" and not (0 <= self.value < 1):
            raise ValidationError(f"turn {self.value} not normalized into [0, 1)")

    @property
    def sort_key(self):
        if self.kind in ("neg_inf", "zero_point"):
            return (_KIND_RANK[self.kind], 0)
        if self.kind == "atom":
            return (_KIND_RANK["atom"], _atom_key(self.value))
        return (_KIND_RANK[self.kind], self.value)

    def __lt__(self, other: "Element") -> bool:
        return self.sort_key < other.sort_key

    @property
    def is_real(self) -> bool:
        return self.kind == "rational"

    def __str__(self) -> str:
        if self.kind == "atom":
            return self.value
        if self.kind == "rational":
            return str(self.value)
        if self.kind == "neg_inf":
            return "-inf"
        if self.kind == "turn":
            return f"t:{self.value}"
        return "0"

    def __repr__(self) -> str:
        return f"Element({self})"


def _atom_key(name: str):
    # numeric-looking atoms sort numerically so tables print as -1, 0, 1
    try:
        return (0, Fraction(name), name)
    except (ValueError, ZeroDivisionError):
        return (1, Fraction(0), name)


def atom(name: str) -> Element:
    return Element("atom", str(name))


def rat(x) -> Element:
    return Element("rational", Fraction(x))


def turn(x) -> Element:
    return Element("turn", Fraction(x) % 1)


NEG_INF = Element("neg_inf")
ZERO_POINT = Element("zero_point")


def as_element(x) -> Element:
    """Coerce ints, Fractions and strings like ``"3/2"`` or ``"-inf"``."""
    if isinstance(x, Element):
        return x
    if isinstance(x, (int, Fraction)):
        return rat(x)
    if isinstance(x, str):
        s = x.strip()
        if s == "-inf":
            return NEG_INF
        if s.startswith("t:"):
            return turn(Fraction(s[2:]))
        return rat(Fraction(s))
    raise ValidationError(f"cannot interpret {x!r} as an element")


# ------------------------------------------------------------------ pieces


@dataclass(frozen=True)
class Points:
    elements: tuple

    def __str__(self):
        return "{" + ", ".join(str(e) for e in self.elements) + "}"


@dataclass(frozen=True)
class Interval:
    """Closed interval ``[lo, hi]`` of rationals."""

    lo: Fraction
    hi: Fraction

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


@dataclass(frozen=True)
class DownRay:
    """``(-inf, top]``; contains the ``-inf`` element as well."""

    top: Fraction

    def __str__(self):
        return f"(-inf, {self.top}]"


@dataclass(frozen=True)
class UpRay:
    """``[bottom, +inf)``."""

    bottom: Fraction

    def __str__(self):
        return f"[{self.bottom}, +inf)"


@dataclass(frozen=True)
class RealLine:
    def __str__(self):
        return "R"


@dataclass(frozen=True)
class Arc:
    """Closed arc traversed counterclockwise from ``start`` to ``end`` (turns)."""

    start: Fraction
    end: Fraction

    @property
    def length(self) -> Fraction:
        return (self.end - self.start) % 1

    def __str__(self):
        return f"arc[t:{self.start}, t:{self.end}]"


@dataclass(frozen=True)
class FullCircle:
    def __str__(self):
        return "S1"


Piece = Union[Points, Interval, DownRay, UpRay, RealLine, Arc, FullCircle]

_LINE_PIECES = (Interval, DownRay, UpRay, RealLine)
_CIRCLE_PIECES = (Arc, FullCircle)


def _check_piece(p) -> None:
    if isinstance(p, Points):
        for e in p.elements:
            if not isinstance(e, Element):
                raise ValidationError(f"{p}: {e!r} is not an Element")
    elif isinstance(p, Interval):
        if not (isinstance(p.lo, Fraction) and isinstance(p.hi, Fraction)):
            raise ValidationError(f"interval endpoints must be Fractions: {p!r}")
        if p.lo > p.hi:
            raise ValidationError(f"malformed piece {p}: lo > hi")
    elif isinstance(p, DownRay):
        if not isinstance(p.top, Fraction):
            raise ValidationError(f"malformed piece {p!r}")
    elif isinstance(p, UpRay):
        if not isinstance(p.bottom, Fraction):
            raise ValidationError(f"malformed piece {p!r}")
    elif isinstance(p, Arc):
        for v in (p.start, p.end):
            if not isinstance(v, Fraction) or not 0 <= v < 1:
                raise ValidationError(f"malformed piece {p!r}: endpoints must lie in [0, 1)")
    elif not isinstance(p, (RealLine, FullCircle)):
        raise ValidationError(f"not a piece: {p!r}")


def _merge_line(segments, points):
    """Merge closed segments ``(lo, hi)`` where ``None`` marks an infinite end."""
    segs = sorted(segments, key=lambda s: (s[0] is not None, s[0] if s[0] is not None else 0))
    merged: list = []
    for lo, hi in segs:
        if merged:
            plo, phi = merged[-1]
            if phi is None or (lo is not None and lo <= phi) or lo is None:
                merged[-1] = (plo, None if (phi is None or hi is None) else max(phi, hi))
                continue
        merged.append((lo, hi))
    pieces = []
    for lo, hi in merged:
        if lo is None and hi is None:
            pieces.append(RealLine())
        elif lo is None:
            pieces.append(DownRay(hi))
        elif hi is None:
            pieces.append(UpRay(lo))
        elif lo == hi:
            points.add(rat(lo))
        else:
            pieces.append(Interval(lo, hi))
    return pieces


def _merge_circle(arcs, points):
    """Merge arcs given as ``(start, length)`` pairs; returns pieces or a full circle."""
    spans = sorted((s, s + length) for s, length in arcs)
    merged: list = []
    for s, e in spans:
        if merged and s <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], e))
        else:
            merged.append((s, e))
    while len(merged) > 1 and merged[-1][1] - 1 >= merged[0][0]:
        first = merged.pop(0)
        last = merged[-1]
        merged[-1] = (last[0], max(last[1], first[1] + 1))
    if any(e - s >= 1 for s, e in merged):
        return [FullCircle()]
    pieces = []
    for s, e in merged:
        if s == e:
            points.add(turn(s))
        else:
            pieces.append(Arc(s % 1, e % 1))
    return pieces


def _piece_rank(p) -> tuple:
    if isinstance(p, Points):
        return (0,)
    if isinstance(p, Interval):
        return (1, p.lo)
    if isinstance(p, DownRay):
        return (2, p.top)
    if isinstance(p, UpRay):
        return (3, p.bottom)
    if isinstance(p, RealLine):
        return (4,)
    if isinstance(p, Arc):
        return (5, p.start)
    return (6,)


def sv_normalize(pieces: Iterable) -> "SetValue":
    """Return the canonical :class:`SetValue` for a list of pieces."""
    pieces = list(pieces)
    for p in pieces:
        _check_piece(p)
    points: set = set()
    segments = []
    arcs = []
    full = False
    for p in pieces:
        if isinstance(p, Points):
            points.update(p.elements)
        elif isinstance(p, Interval):
            segments.append((p.lo, p.hi))
        elif isinstance(p, DownRay):
            segments.append((None, p.top))
        elif isinstance(p, UpRay):
            segments.append((p.bottom, None))
        elif isinstance(p, RealLine):
            segments.append((None, None))
        elif isinstance(p, Arc):
            arcs.append((p.start, p.length))
        else:
            full = True
    line = _merge_line(segments, points)
    circle = [FullCircle()] if full else _merge_circle(arcs, points)
    continuous = line + circle

    def absorbed(e: Element) -> bool:
        return any(_piece_contains(c, e) for c in continuous)

    kept = tuple(sorted(e for e in points if not absorbed(e)))
    out = ([Points(kept)] if kept else []) + sorted(continuous, key=_piece_rank)
    return SetValue(tuple(out), _trusted=True)


def _piece_contains(p, e: Element) -> bool:
    if isinstance(p, Points):
        return e in p.elements
    if isinstance(p, Interval):
        return e.kind == "rational" and p.lo <= e.value <= p.hi
    if isinstance(p, DownRay):
        return e.kind == "neg_inf" or (e.kind == "rational" and e.value <= p.top)
    if isinstance(p, UpRay):
        return e.kind == "rational" and e.value >= p.bottom
    if isinstance(p, RealLine):
        return e.kind in ("rational", "neg_inf")
    if isinstance(p, Arc):
        return e.kind == "turn" and (e.value - p.start) % 1 <= p.length
    return e.kind == "turn"


def _piece_within(p, container) -> bool:
    """Is continuous piece ``p`` contained in the single canonical piece ``container``?"""
    if isinstance(p, _LINE_PIECES):
        lo, hi = _bounds(p)
        if not isinstance(container, _LINE_PIECES):
            return False
        clo, chi = _bounds(container)
        lo_ok = clo is None or (lo is not None and clo <= lo)
        hi_ok = chi is None or (hi is not None and hi <= chi)
        return lo_ok and hi_ok
    if isinstance(container, FullCircle):
        return True
    if isinstance(p, FullCircle) or not isinstance(container, Arc):
        return False
    offset = (p.start - container.start) % 1
    return offset + p.length <= container.length


def _bounds(p):
    if isinstance(p, Interval):
        return p.lo, p.hi
    if isinstance(p, DownRay):
        return None, p.top
    if isinstance(p, UpRay):
        return p.bottom, None
    return None, None


@dataclass(frozen=True)
class SetValue:
    """Canonical finite union of pieces.  Build with :meth:`of` or :func:`sv_normalize`."""

    pieces: tuple = ()
    _trusted: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self):
        if not self._trusted:
            canon = sv_normalize(self.pieces)
            object.__setattr__(self, "pieces", canon.pieces)
        object.__setattr__(self, "_trusted", True)

    @classmethod
    def of(cls, *pieces) -> "SetValue":
        return sv_normalize(pieces)

    @classmethod
    def points(cls, *elements) -> "SetValue":
        return sv_normalize([Points(tuple(as_element(e) for e in elements))])

    @classmethod
    def empty(cls) -> "SetValue":
        return SetValue((), _trusted=True)

    # -- queries
    def __contains__(self, e: Element) -> bool:
        return any(_piece_contains(p, e) for p in self.pieces)

    def __bool__(self) -> bool:
        return bool(self.pieces)

    def __len__(self) -> int:
        if not self.is_finite:
            raise TypeError(f"{self} is not a finite set")
        return len(self.pieces[0].elements) if self.pieces else 0

    def __iter__(self) -> Iterator[Element]:
        if not self.is_finite:
            raise TypeError(f"cannot iterate over infinite set {self}")
        return iter(self.pieces[0].elements if self.pieces else ())

    @property
    def is_finite(self) -> bool:
        return all(isinstance(p, Points) for p in self.pieces)

    @property
    def finite_part(self) -> tuple:
        if self.pieces and isinstance(self.pieces[0], Points):
            return self.pieces[0].elements
        return ()

    @property
    def continuous_part(self) -> tuple:
        return tuple(p for p in self.pieces if not isinstance(p, Points))

    @property
    def is_singleton(self) -> bool:
        return self.is_finite and len(self) == 1

    @property
    def element(self) -> Element:
        if not self.is_singleton:
            raise ValueError(f"{self} is not a singleton")
        return self.pieces[0].elements[0]

    def issubset(self, other: "SetValue") -> bool:
        for p in self.pieces:
            if isinstance(p, Points):
                if not all(e in other for e in p.elements):
                    return False
            elif not any(_piece_within(p, q) for q in other.continuous_part):
                return False
        return True

    def __le__(self, other: "SetValue") -> bool:
        return self.issubset(other)

    def __lt__(self, other: "SetValue") -> bool:
        return self.issubset(other) and self != other

    def __or__(self, other: "SetValue") -> "SetValue":
        return sv_normalize(self.pieces + other.pieces)

    def map_points(self, f) -> "SetValue":
        return sv_normalize([Points(tuple(f(e) for e in self))])

    def sort_key(self):
        return tuple(_piece_key(p) for p in self.pieces)

    def __str__(self) -> str:
        if not self.pieces:
            return "{}"
        return " u ".join(str(p) for p in self.pieces)

    def __repr__(self) -> str:
        return f"SetValue({self})"


def _piece_key(p):
    if isinstance(p, Points):
        return (0, tuple(e.sort_key for e in p.elements))
    return _piece_rank(p) + (_bounds(p) if isinstance(p, Interval) else ()) + (
        (p.end,) if isinstance(p, Arc) else ())


def union(values: Iterable[SetValue]) -> SetValue:
    pieces: list = []
    for v in values:
        pieces.extend(v.pieces)
    return sv_normalize(pieces)


_ELEMENT_FAMILY = {"atom": "atom", "rational": "line", "neg_inf": "line",
                   "turn": "circle", "zero_point": "circle"}


def _families(v: SetValue) -> set:
    out = set()
    for p in v.pieces:
        if isinstance(p, Points):
            out |= {_ELEMENT_FAMILY[e.kind] for e in p.elements}
        else:
            out.add("circle" if isinstance(p, _CIRCLE_PIECES) else "line")
    return out


def sv_relate(x: SetValue, y: SetValue, rel: str) -> bool:
    """Decide ``member_of`` (x a singleton), ``subset`` or ``equal``."""
    fx, fy = _families(x), _families(y)
    if len(fx | fy) > 1:
        raise ValidationError(f"cannot relate {x} and {y}: mixed carriers")
    if rel == "member_of":
        return x.element in y
    if rel == "subset":
        return x.issubset(y)
    if rel == "equal":
        return x == y
    raise ValidationError(f"unknown relation {rel!r}")


# ----------------------------------------------------------------- carriers


@dataclass(frozen=True)
class Carrier:
    """Describes which elements belong to a structure."""

    kind: str
    atoms: tuple = ()

    KINDS = ("finite", "reals_with_neg_infinity", "nonneg_reals",
             "unit_circle_with_zero", "reals")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValidationError(f"unknown carrier kind {self.kind!r}")
        if self.kind == "finite" and len(set(self.atoms)) != len(self.atoms):
            raise ValidationError("finite carrier atoms must be distinct")

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    def __contains__(self, e: Element) -> bool:
        if self.kind == "finite":
            return e in self.atoms
        if self.kind == "reals":
            return e.kind == "rational"
        if self.kind == "reals_with_neg_infinity":
            return e.kind in ("rational", "neg_inf")
        if self.kind == "nonneg_reals":
            return e.kind == "rational" and e.value >= 0
        return e.kind in ("turn", "zero_point")

    def admits(self, s: SetValue) -> bool:
        for p in s.pieces:
            if isinstance(p, Points):
                if not all(e in self for e in p.elements):
                    return False
            elif self.kind == "nonneg_reals":
                if not isinstance(p, Interval) or p.lo < 0:
                    return False
            elif self.kind in ("reals", "reals_with_neg_infinity"):
                if not isinstance(p, _LINE_PIECES):
                    return False
            elif self.kind == "unit_circle_with_zero":
                if not isinstance(p, _CIRCLE_PIECES):
                    return False
            else:
                return False
        return True


# ----------------------------------------------------------- hyperstructure


class Hyperstructure:
    """A carrier with multiplication, hyperaddition, neutrals and optional negation.

    Subclasses implement the element-level operations; the set-level hooks
    :meth:`set_add`, :meth:`set_mul` and :meth:`set_neg` default to
    elementwise enumeration, which only works on finite set values.
    """

    name: str = "structure"
    carrier: Carrier
    zero: Optional[Element] = None
    one: Optional[Element] = None
    has_neutral: bool = True
    has_mul: bool = True
    has_negation: bool = False
    # False only for structures known to break element associativity
    associative: Optional[bool] = None
    # distinguished elements tried before random samples
    hints: tuple = ()

    # -- element level
    def _hyperadd(self, a: Element, b: Element) -> SetValue:
        raise NotImplementedError

    def _mul(self, a: Element, b: Element) -> Element:
        raise UnsupportedOperation(f"{self.name} has no multiplication")

    def _negate(self, a: Element) -> Element:
        raise UnsupportedOperation(f"{self.name} has no negation map")

    def _hyperinverses(self, a: Element) -> SetValue:
        raise NotImplementedError

    def mul_inverse(self, a: Element) -> Optional[Element]:
        """Multiplicative inverse of a nonzero element, or None."""
        return None

    def is_tangible(self, a: Element) -> bool:
        return a in self.carrier

    def check(self, *elements: Element) -> None:
        for e in elements:
            if not isinstance(e, Element) or e not in self.carrier:
                raise NotInCarrier(f"{e} is not in the carrier of {self.name}")

    def hyperadd(self, a: Element, b: Element) -> SetValue:
        self.check(a, b)
        return self._hyperadd(a, b)

    def mul(self, a: Element, b: Element) -> Element:
        self.check(a, b)
        if not self.has_mul:
            raise UnsupportedOperation(f"{self.name} has no multiplication")
        return self._mul(a, b)

    def negate(self, a: Element) -> Element:
        self.check(a)
        if not self.has_negation:
            raise UnsupportedOperation(f"{self.name} has no negation map")
        return self._negate(a)

    def hyperinverses(self, a: Element) -> SetValue:
        self.check(a)
        return self._hyperinverses(a)

    # -- set level
    def set_add(self, s: SetValue, t: SetValue) -> SetValue:
        if not (s.is_finite and t.is_finite):
            raise InexactLift(f"{self.name}: no closed form for {s} (+) {t}")
        return union(self._hyperadd(a, b) for a in s for b in t)

    def set_mul(self, s: SetValue, t: SetValue) -> SetValue:
        if not self.has_mul:
            raise UnsupportedOperation(f"{self.name} has no multiplication")
        if not (s.is_finite and t.is_finite):
            raise InexactLift(f"{self.name}: no closed form for {s} * {t}")
        return SetValue.points(*(self._mul(a, b) for a in s for b in t))

    def set_neg(self, s: SetValue) -> SetValue:
        if not self.has_negation:
            raise UnsupportedOperation(f"{self.name} has no negation map")
        if not s.is_finite:
            raise InexactLift(f"{self.name}: no closed form for -({s})")
        return s.map_points(self._negate)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"


# module-level spellings of the element operations


def hyperadd(A: Hyperstructure, a: Element, b: Element) -> SetValue:
    return A.hyperadd(a, b)


def mul(A: Hyperstructure, a: Element, b: Element) -> Element:
    return A.mul(a, b)


def hyperinverses(A: Hyperstructure, a: Element) -> SetValue:
    return A.hyperinverses(a)


def negate(A: Hyperstructure, a: Element) -> Element:
    return A.negate(a)


def singleton(e: Element) -> SetValue:
    return SetValue((Points((e,)),), _trusted=True)


def elements_of(values: Sequence) -> list:
    return [as_element(v) for v in values]
