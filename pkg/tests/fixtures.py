"""Finite quotient structures shared by several test modules."""

from hyperkit.builtins import FiniteSemiring, MonoidSurjection, quotient


def _q(n, target, mapping, name):
    R = FiniteSemiring.integers_mod(n)
    return quotient(R, MonoidSurjection(R, target, mapping), name)


def quotient_fixtures():
    """Quotients of Z/n by monoid surjections whose fibres are unions of cosets."""
    return {
        "z3_krasner": _q(3, ("0", "1"), {"0": "0", "1": "1", "2": "1"}, "z3_krasner"),
        "z2_identity": _q(2, ("0", "1"), {"0": "0", "1": "1"}, "z2_identity"),
        "z5_collapse": _q(5, ("0", "1"), {"0": "0", **{str(i): "1" for i in range(1, 5)}},
                          "z5_collapse"),
        "z3_identity": _q(3, ("0", "1", "2"), {r: r for r in "012"}, "z3_identity"),
    }


def square_class_quotient(p):
    """Z/p modulo the nonzero squares: atoms 0, q (squares) and n (non-squares)."""
    squares = {(x * x) % p for x in range(1, p)}
    mapping = {"0": "0", **{str(r): ("q" if r in squares else "n") for r in range(1, p)}}
    return _q(p, ("0", "q", "n"), mapping, f"z{p}_squares")


# Multilinear identities on the signature {+, *, -, 0, 1}, some true and some false.
MULTILINEAR = [
    "(x1+x2)+x3 = x1+(x2+x3)",
    "x1+x2 = x2+x1",
    "x1+0 = x1",
    "x1*1 = x1",
    "(x1*x2)*x3 = x1*(x2*x3)",
    "x1*x2 = x2*x1",
    "-(x1+x2) = -x1 + -x2",
    "-(x1*x2) = -x1*x2",
    "x1*-x2 = -x1*x2",
    "x1*0 = 0",
    "x1*(x2+x3) <= x3*x1 + x2",
    "x1 + x2 = x1",
    "x1 <= x1 + x2",
    "-x1 = x1",
]
