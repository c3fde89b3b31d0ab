from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from hyperkit.axioms import FAIL, PASS, Sampler
from hyperkit.builtins import FiniteHyperstructure, Supertropical, get_builtin, supertropical, tropical
from hyperkit.core import NEG_INF, DownRay, SetValue, atom, rat, singleton
from hyperkit.morphisms import (
    MapSpec, MorphismError, check_weak_morphism, compose, from_supertropical,
    left_mul_weak_morphism, to_supertropical, tropical_supertropical_iso,
)
from hyperkit.power import lift_add, lift_mul


def pts(*names):
    return SetValue.points(*map(atom, names))


def table_map(source, target, table, name="f"):
    return MapSpec(source, target, lambda a: atom(table[str(a)]), name)


SIGNS, KRASNER = get_builtin("signs"), get_builtin("krasner")
ABS = {"0": "0", "1": "1", "-1": "1"}


def crafted_signs():
    """Sign multiplication, but 1 + (-1) collapses to {0}."""
    mul = {(a, b): str(SIGNS.mul(atom(a), atom(b))) for a, b in product(("0", "1", "-1"), repeat=2)}
    add = {("0", "0"): ["0"], ("0", "1"): ["1"], ("0", "-1"): ["-1"], ("1", "1"): ["1"],
           ("-1", "-1"): ["-1"], ("1", "-1"): ["0"]}
    return FiniteHyperstructure("crafted", ["0", "1", "-1"], "0", "1", mul, add,
                                {"0": "0", "1": "-1", "-1": "1"})


class TestWeakMorphism:
    def test_identity(self):
        r = check_weak_morphism(MapSpec(SIGNS, SIGNS, lambda a: a, "id"))
        assert r.status == PASS and r.exhaustive

    def test_absolute_value(self):
        r = check_weak_morphism(table_map(SIGNS, KRASNER, ABS, "abs"))
        assert r.status == PASS and r.exhaustive and r.samples_used == 18
        # the inclusion is proper at (1, 1): f({1}) = {1} inside 1 + 1 = {0, 1}
        f = table_map(SIGNS, KRASNER, ABS)
        assert f(SIGNS.hyperadd(atom("1"), atom("1"))) == pts("1")

    def test_additive_failure(self):
        r = check_weak_morphism(MapSpec(SIGNS, crafted_signs(), lambda a: a, "id"))
        assert r.status == FAIL
        assert r.witness == (atom("1"), atom("-1"))
        assert (r.lhs, r.rhs) == (pts("0", "1", "-1"), pts("0"))

    def test_multiplicative_failure(self):
        r = check_weak_morphism(MapSpec(SIGNS, SIGNS, SIGNS.negate, "neg"))
        assert r.status == FAIL
        assert r.lhs != r.rhs and r.lhs.is_singleton

    def test_escaping_the_carrier(self):
        f = MapSpec(SIGNS, KRASNER, lambda a: atom("-1"), "bad")
        with pytest.raises(MorphismError) as err:
            check_weak_morphism(f)
        assert err.value.witness == (atom("0"),)

    def test_compose_mismatch(self):
        with pytest.raises(MorphismError):
            compose(table_map(SIGNS, KRASNER, ABS), MapSpec(SIGNS, SIGNS, lambda a: a))


def _all_maps(source, target):
    names = [str(a) for a in source.carrier.atoms]
    for values in product([str(b) for b in target.carrier.atoms], repeat=len(names)):
        yield table_map(source, target, dict(zip(names, values)), "m" + "".join(values))


def test_composition_of_weak_morphisms():
    endos = [f for f in _all_maps(SIGNS, SIGNS) if check_weak_morphism(f).status == PASS]
    downs = [g for g in _all_maps(SIGNS, KRASNER) if check_weak_morphism(g).status == PASS]
    assert len(endos) >= 2 and len(downs) >= 2
    for f, g in product(endos, downs):
        assert check_weak_morphism(compose(f, g)).status == PASS, (f.name, g.name)
    for f, g in product(endos, endos):
        assert check_weak_morphism(compose(f, g)).status == PASS, (f.name, g.name)


class TestLeftMultiplication:
    @pytest.mark.parametrize("name", ["triangle", "signs", "tropical", "krasner"])
    def test_equality(self, name):
        assert left_mul_weak_morphism(get_builtin(name)).status == PASS

    def test_triangle_two(self):
        R = get_builtin("triangle")
        S = R.hyperadd(rat(1), rat(3))
        assert lift_mul(R, singleton(rat(2)), S) == \
            lift_add(R, singleton(rat(2)), singleton(rat(6)))

    def test_krasner_zero(self):
        K = KRASNER
        assert lift_mul(K, pts("0"), pts("0", "1")) == pts("0")

    def test_signs_minus_one(self):
        S = SIGNS
        m = singleton(atom("-1"))
        for a, b in product(S.carrier.atoms, repeat=2):
            assert lift_mul(S, m, S.hyperadd(a, b)) == \
                S.hyperadd(S.mul(atom("-1"), a), S.mul(atom("-1"), b))


# ------------------------------------------------------------ supertropical


ray3 = SetValue.of(DownRay(F(3)))


class TestIsomorphism:
    @pytest.mark.parametrize("b, expected", [
        (5, Supertropical.tangible(5)),
        (3, Supertropical.ghost(3)),
        (2, Supertropical.ghost(3)),
    ])
    def test_ray_plus_point(self, b, expected):
        T, S = tropical(), supertropical()
        assert to_supertropical(lift_add(T, ray3, singleton(rat(b)))) == expected
        assert S.add(Supertropical.ghost(3), Supertropical.tangible(b)) == expected

    def test_passes_on_1000_pairs(self):
        r = tropical_supertropical_iso(Sampler(samples=1000))
        assert r.status == PASS and r.samples_used == 1000

    def test_round_trip(self):
        for v in (singleton(NEG_INF), singleton(rat(2)), ray3):
            assert from_supertropical(to_supertropical(v)) == v

    def test_outside_the_closure(self):
        with pytest.raises(MorphismError):
            to_supertropical(SetValue.points(1, 2))


small = st.fractions(min_value=-6, max_value=6, max_denominator=3)


@st.composite
def tilde_members(draw):
    kind = draw(st.sampled_from(["inf", "pt", "ray"]))
    if kind == "inf":
        return singleton(NEG_INF)
    a = draw(small)
    return singleton(rat(a)) if kind == "pt" else SetValue.of(DownRay(a))


@settings(max_examples=300, deadline=None)
@given(tilde_members(), tilde_members())
def test_phi_is_a_homomorphism(x, y):
    T, S = tropical(), supertropical()
    assert to_supertropical(lift_add(T, x, y)) == S.add(to_supertropical(x), to_supertropical(y))
    assert to_supertropical(lift_mul(T, x, y)) == S.mul(to_supertropical(x), to_supertropical(y))
