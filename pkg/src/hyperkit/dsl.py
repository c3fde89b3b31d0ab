"""Structure files and multilinear term identities.

Structure files are line based, order insensitive, and allow ``#`` comments::

    name signs
    carrier 0 1 -1
    zero 0
    one 1
    mul 1 -1 -> -1
    add 1 -1 -> {0, 1, -1}
    neg 1 -> -1

``add`` rows name unordered pairs, so a table is commutative by construction.
Every ordered pair needs a ``mul`` row and every unordered pair an ``add`` row.

Identities are terms over variables, ``0``, ``1``, ``+``, ``*`` and unary ``-``
joined by ``=`` or ``<=`` (set inclusion).  Terms are evaluated on set values
with every operator lifted elementwise.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from itertools import product
from typing import Dict, List, Mapping, Optional, Tuple, Union

from .axioms import FAIL, PASS, STRICT, LawReport, Sampler, _merge, _run
from .builtins import FiniteHyperstructure
from .core import HyperkitError, Hyperstructure, SetValue, ValidationError, singleton
from .power import lift_add, lift_mul, lift_negation

__all__ = [
    "ParseError", "parse_structure", "print_structure", "Var", "Zero", "One", "Add", "Mul",
    "Neg", "Term", "IdentitySpec", "parse_identity", "parse_term", "eval_term",
    "check_identity", "variables_of", "is_multilinear",
]


class ParseError(HyperkitError, ValueError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        where = ""
        if line is not None:
            where = f"line {line}: "
        elif column is not None:
            where = f"column {column}: "
        super().__init__(where + message)
        self.line = line
        self.column = column


# ------------------------------------------------------------ structure files

_SET_RE = re.compile(r"^\{(.*)\}$")


def _split_arrow(rest: str, lineno: int) -> Tuple[List[str], str]:
    if "->" not in rest:
        raise ParseError("expected '->'", lineno)
    lhs, rhs = rest.split("->", 1)
    return lhs.split(), rhs.strip()


def parse_structure(text: str) -> FiniteHyperstructure:
    header: Dict[str, Tuple[str, int]] = {}
    carrier: Optional[List[str]] = None
    mul: Dict[Tuple[str, str], str] = {}
    add: Dict[frozenset, Tuple[Tuple[str, str], List[str]]] = {}
    neg: Dict[str, str] = {}
    rows: List[Tuple[str, int, str]] = []
    last = 0

    for lineno, raw in enumerate(text.splitlines(), 1):
        last = lineno
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key in ("name", "zero", "one"):
            if key in header:
                raise ParseError(f"duplicate '{key}' line", lineno)
            if not rest or (key != "name" and len(rest.split()) != 1):
                raise ParseError(f"'{key}' takes a single value", lineno)
            header[key] = (rest, lineno)
        elif key == "carrier":
            if carrier is not None:
                raise ParseError("duplicate 'carrier' line", lineno)
            carrier = rest.split()
            if not carrier:
                raise ParseError("empty carrier", lineno)
            if len(set(carrier)) != len(carrier):
                raise ParseError("carrier atoms must be distinct", lineno)
        elif key in ("mul", "add", "neg"):
            rows.append((key, lineno, rest))
        else:
            raise ParseError(f"unknown directive {key!r}", lineno)

    if carrier is None:
        raise ParseError("missing 'carrier' line", last)
    atoms = set(carrier)

    def known(a: str, lineno: int) -> str:
        if a not in atoms:
            raise ParseError(f"unknown atom {a!r}", lineno)
        return a

    for key, lineno, rest in rows:
        args, out = _split_arrow(rest, lineno)
        if key == "mul":
            if len(args) != 2:
                raise ParseError("mul rows take two atoms", lineno)
            pair = (known(args[0], lineno), known(args[1], lineno))
            if pair in mul:
                raise ParseError(f"duplicate mul row for ({pair[0]},{pair[1]})", lineno)
            mul[pair] = known(out, lineno)
        elif key == "add":
            if len(args) != 2:
                raise ParseError("add rows take two atoms", lineno)
            a, b = known(args[0], lineno), known(args[1], lineno)
            m = _SET_RE.match(out)
            if not m:
                raise ParseError("add rows map to a set such as {0, 1}", lineno)
            members = [x.strip() for x in m.group(1).split(",") if x.strip()]
            if not members:
                raise ParseError("empty hypersum", lineno)
            for x in members:
                if x not in atoms:
                    raise ParseError(f"set entry {x!r} is outside the carrier", lineno)
            if frozenset((a, b)) in add:
                raise ParseError(f"duplicate add row for ({a},{b})", lineno)
            add[frozenset((a, b))] = ((a, b), members)
        else:
            if len(args) != 1:
                raise ParseError("neg rows take one atom", lineno)
            a = known(args[0], lineno)
            if a in neg:
                raise ParseError(f"duplicate neg row for {a}", lineno)
            neg[a] = known(out, lineno)

    if "zero" not in header:
        raise ParseError("missing 'zero' line", last)
    zero, zl = header["zero"]
    known(zero, zl)
    one = None
    if "one" in header:
        one = known(*header["one"])
    for a, b in product(carrier, repeat=2):
        if frozenset((a, b)) not in add:
            raise ParseError(f"missing hyperadd row for ({a},{b})", last)
    if mul:
        if one is None:
            raise ParseError("mul rows need a 'one' line", last)
        for a, b in product(carrier, repeat=2):
            if (a, b) not in mul:
                raise ParseError(f"missing mul row for ({a},{b})", last)
    if neg:
        for a in carrier:
            if a not in neg:
                raise ParseError(f"missing neg row for {a}", last)

    add_table = {pair: members for pair, members in add.values()}
    try:
        return FiniteHyperstructure(
            header.get("name", ("structure", 0))[0], carrier, zero, one,
            mul or None, add_table, neg or None)
    except ValidationError as exc:
        raise ParseError(str(exc), last) from exc


def print_structure(A: FiniteHyperstructure) -> str:
    """Canonical text form; ``parse_structure`` reads it back to an equal structure."""
    if not A.carrier.is_finite:
        raise ValidationError(f"{A.name} has an infinite carrier and cannot be printed")
    atoms = list(A.carrier.atoms)
    lines = [f"name {A.name}", "carrier " + " ".join(str(a) for a in atoms), f"zero {A.zero}"]
    if A.one is not None:
        lines.append(f"one {A.one}")
    if A.has_mul:
        lines += [f"mul {a} {b} -> {A.mul(a, b)}" for a, b in product(atoms, repeat=2)]
    for i, a in enumerate(atoms):
        for b in atoms[i:]:
            members = ", ".join(str(x) for x in A.hyperadd(a, b))
            lines.append(f"add {a} {b} -> {{{members}}}")
    if A.has_negation:
        lines += [f"neg {a} -> {A.negate(a)}" for a in atoms]
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------------- terms


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Zero:
    def __str__(self):
        return "0"


@dataclass(frozen=True)
class One:
    def __str__(self):
        return "1"


@dataclass(frozen=True)
class Add:
    left: "Term"
    right: "Term"

    def __str__(self):
        return f"({self.left} + {self.right})"


@dataclass(frozen=True)
class Mul:
    left: "Term"
    right: "Term"

    def __str__(self):
        return f"{self.left} * {self.right}"


@dataclass(frozen=True)
class Neg:
    child: "Term"

    def __str__(self):
        return f"-{self.child}"


Term = Union[Var, Zero, One, Add, Mul, Neg]


def _occurrences(t: Term, acc: Dict[str, int]) -> Dict[str, int]:
    if isinstance(t, Var):
        acc[t.name] = acc.get(t.name, 0) + 1
    elif isinstance(t, (Add, Mul)):
        _occurrences(t.left, acc)
        _occurrences(t.right, acc)
    elif isinstance(t, Neg):
        _occurrences(t.child, acc)
    return acc


def is_multilinear(t: Term) -> bool:
    """Each variable of the term occurs exactly once."""
    return all(n == 1 for n in _occurrences(t, {}).values())


def _natural(name: str):
    return [int(p) if p.isdigit() else p for p in re.split(r"(\d+)", name)]


def variables_of(*terms: Term) -> Tuple[str, ...]:
    names: Dict[str, int] = {}
    for t in terms:
        _occurrences(t, names)
    return tuple(sorted(names, key=_natural))


@dataclass(frozen=True)
class IdentitySpec:
    lhs: Term
    relation: str
    rhs: Term
    variables: Tuple[str, ...]

    @property
    def lhs_multilinear(self) -> bool:
        return is_multilinear(self.lhs)

    @property
    def rhs_multilinear(self) -> bool:
        return is_multilinear(self.rhs)

    @property
    def multilinear(self) -> bool:
        return self.lhs_multilinear and self.rhs_multilinear

    def __str__(self):
        rel = "=" if self.relation == "equal" else "<="
        return f"{self.lhs} {rel} {self.rhs}"


_TOKEN = re.compile(r"\s*(?:(<=|=|\+|\*|-|\(|\))|([A-Za-z_][A-Za-z0-9_]*)|(\d+))")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    out, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:].strip()[:1]!r}", column=pos + 1)
        col = m.start() + len(m.group(0)) - len(m.group(0).lstrip()) + 1
        if m.group(1):
            out.append(("op", m.group(1), col))
        elif m.group(2):
            out.append(("var", m.group(2), col))
        else:
            if m.group(3) not in ("0", "1"):
                raise ParseError(f"only the constants 0 and 1 are allowed, got {m.group(3)}",
                                 column=col)
            out.append(("const", m.group(3), col))
        pos = m.end()
    out.append(("end", "", len(text) + 1))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, value: Optional[str] = None):
        tok = self.toks[self.i]
        if value is not None and tok[1] != value:
            found = tok[1] or "end of input"
            raise ParseError(f"expected {value!r}, found {found!r}", column=tok[2])
        self.i += 1
        return tok

    def expr(self) -> Term:
        t = self.term()
        while self.peek()[1] == "+":
            self.take()
            t = Add(t, self.term())
        return t

    def term(self) -> Term:
        t = self.unary()
        while self.peek()[1] == "*":
            self.take()
            t = Mul(t, self.unary())
        return t

    def unary(self) -> Term:
        if self.peek()[1] == "-":
            self.take()
            return Neg(self.unary())
        return self.atom()

    def atom(self) -> Term:
        kind, value, col = self.take()
        if kind == "var":
            return Var(value)
        if kind == "const":
            return Zero() if value == "0" else One()
        if value == "(":
            t = self.expr()
            self.take(")")
            return t
        raise ParseError(f"unexpected {value or 'end of input'!r}", column=col)


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.expr()
    kind, value, col = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {value!r}", column=col)
    return t


def parse_identity(text: str) -> IdentitySpec:
    p = _Parser(text)
    lhs = p.expr()
    kind, value, col = p.take()
    if value not in ("=", "<="):
        raise ParseError(f"expected relation '=' or '<=', found {value or 'end of input'!r}",
                         column=col)
    rhs = p.expr()
    kind, extra, col = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {extra!r}", column=col)
    return IdentitySpec(lhs, "equal" if value == "=" else "subset", rhs, variables_of(lhs, rhs))


# --------------------------------------------------------------- evaluation


def eval_term(A: Hyperstructure, term: Term, env: Mapping[str, SetValue]) -> SetValue:
    """Evaluate with every operator lifted to set values."""
    if isinstance(term, Var):
        try:
            return env[term.name]
        except KeyError:
            raise ValidationError(f"no value for variable {term.name}") from None
    if isinstance(term, Zero):
        return singleton(A.zero)
    if isinstance(term, One):
        if A.one is None:
            raise ValidationError(f"{A.name} has no multiplicative identity")
        return singleton(A.one)
    if isinstance(term, Add):
        return lift_add(A, eval_term(A, term.left, env), eval_term(A, term.right, env))
    if isinstance(term, Mul):
        return lift_mul(A, eval_term(A, term.left, env), eval_term(A, term.right, env))
    if isinstance(term, Neg):
        return lift_negation(A, eval_term(A, term.child, env))
    raise TypeError(f"not a term: {term!r}")


def _sides(A, spec: IdentitySpec, values) -> tuple:
    env = dict(zip(spec.variables, values))
    return eval_term(A, spec.lhs, env), eval_term(A, spec.rhs, env)


def check_identity(A: Hyperstructure, spec: IdentitySpec,
                   sampler: Optional[Sampler] = None) -> LawReport:
    """Check an identity on singleton environments, then on set-valued ones.

    Set environments range over the tilde closure (exhaustively when finite).
    A multilinear identity that holds on every singleton environment must also
    hold on sets; a violation of that raises, since it would be an engine bug.
    """
    sampler = sampler or Sampler()
    law = "identity"
    k = len(spec.variables)
    rel = spec.relation
    if k == 0:
        rep = _run(law, [((), *_sides(A, spec, ()))], True, rel)
        return _annotate(rep, spec)
    it, ex = sampler.tuples(A, k, law + "/elements")
    on_points = _run(law, ((w, *_sides(A, spec, w)) for w in
                           (tuple(singleton(e) for e in t) for t in it)), ex, rel)
    its, exs = sampler.set_tuples(A, k, law + "/sets")
    on_sets = _run(law, ((w, *_sides(A, spec, w)) for w in its), exs, rel)
    if spec.multilinear and on_points.exhaustive and on_points.status in (PASS, STRICT) \
            and on_sets.status == FAIL:
        raise HyperkitError(
            f"multilinear identity {spec} holds on singletons but fails on sets at "
            f"{tuple(str(x) for x in on_sets.witness)}")
    return _annotate(_merge(law, [on_points, on_sets], rel), spec)


def _annotate(rep: LawReport, spec: IdentitySpec) -> LawReport:
    return replace(rep, note="" if spec.multilinear else "not multilinear")
