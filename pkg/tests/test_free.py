"""Constructors, folds, bind, interpretation hooks, equality, and rendering."""

import pytest

from freecheck.containers import (
    ContainerError,
    ContainerMismatchError,
    Ext,
    builtin_container,
)
from freecheck.effects import NOTHING, Just, builtin_transform, monad_join, monad_ret
from freecheck.enumgen import enum_free
from freecheck.free import (
    Impure,
    Pure,
    bind,
    eq_free,
    fail_,
    fold_free,
    for_free,
    impure_,
    impure_at,
    induce,
    nothing_,
    pure_,
    render_free,
)

zero = builtin_container("zero")
one = builtin_container("one")
const = builtin_container("const", errors=("front: empty queue", "boom"))
statef = builtin_container("statef", states=(0, 1))
choice = builtin_container("choice", max_arity=2)


def absurd(_):
    raise AssertionError("unreachable branch was demanded")


class TestConstructors:
    def test_pure_is_pure(self):
        v = pure_(one, 5)
        assert isinstance(v, Pure)
        assert v.value == 5

    def test_pure_never_equals_impure(self):
        for x in (0, 1):
            assert not eq_free(pure_(one, x), nothing_(one))

    def test_impure_rejects_foreign_shape(self):
        with pytest.raises(ContainerError):
            impure_(one, Ext(3, ()))
        with pytest.raises(ContainerError):
            impure_(zero, Ext("tt", ()))

    def test_impure_rejects_short_payload(self):
        with pytest.raises(ContainerError):
            impure_(choice, Ext(2, (pure_(choice, 1),)))

    def test_impure_rejects_mixed_containers(self):
        with pytest.raises(ContainerMismatchError):
            impure_at(choice, 1, [pure_(one, 1)])

    def test_nothing_is_the_empty_unit_layer(self):
        v = nothing_(one)
        assert isinstance(v, Impure)
        assert v.layer == Ext("tt", ())
        assert eq_free(nothing_(one), nothing_(one))

    def test_fail_carries_message_as_shape(self):
        v = fail_(const, "front: empty queue")
        assert isinstance(v, Impure)
        assert v.layer.shape == "front: empty queue"
        assert v.layer.payload == ()

    def test_smart_constructors_demand_their_container(self):
        with pytest.raises(ContainerError):
            nothing_(const)
        with pytest.raises(ContainerError):
            fail_(one, "nope")
        with pytest.raises(ContainerError):
            fail_(const, "not in the universe")


class TestFoldFree:
    def test_pure_case_over_zero(self):
        assert fold_free(lambda x: x, absurd, pure_(zero, 3)) == 3

    def test_one_impure_layer(self):
        got = fold_free(str, lambda _: "none", nothing_(one))
        assert got == "none"

    def test_choice_collects_children(self):
        v = impure_at(choice, 2, [pure_(choice, 1), pure_(choice, 2)])
        got = fold_free(
            lambda x: [x],
            lambda fv: [x for branch in fv.branches for x in branch],
            v,
        )
        assert got == [1, 2]


class TestBind:
    def test_left_value_feeds_through(self):
        out = bind(pure_(one, 1), lambda x: pure_(one, x + 1))
        assert out == pure_(one, 2)

    def test_zero_position_layer_absorbs(self):
        out = bind(nothing_(one), lambda x: pure_(one, x + 1))
        assert eq_free(out, nothing_(one))

    def test_children_are_rebound(self):
        v = impure_at(choice, 2, [pure_(choice, 1), pure_(choice, 2)])
        out = bind(v, lambda x: pure_(choice, 10 * x))
        want = impure_at(choice, 2, [pure_(choice, 10), pure_(choice, 20)])
        assert eq_free(out, want)


class TestInduce:
    def test_pure_maps_to_ret(self):
        nt = builtin_transform(one)
        got = induce(pure_(one, 5), nt, monad_ret(one), monad_join(one))
        assert got == Just(5)

    def test_empty_layer_maps_to_nothing(self):
        nt = builtin_transform(one)
        got = induce(nothing_(one), nt, monad_ret(one), monad_join(one))
        assert got == NOTHING

    def test_statef_layer_reads_and_steps(self):
        swap = (1, 0)
        v = impure_at(statef, swap, [pure_(statef, 0), pure_(statef, 1)])
        nt = builtin_transform(statef)
        got = induce(v, nt, monad_ret(statef), monad_join(statef))
        assert got.table == ((0, 1), (1, 0))


class TestEqFree:
    def test_equal_pures(self):
        assert eq_free(pure_(one, 1), pure_(one, 1))

    def test_distinct_constructors(self):
        assert not eq_free(nothing_(one), pure_(one, 1))

    def test_pointwise_payload_comparison(self):
        a = impure_at(choice, 2, [pure_(choice, 1), pure_(choice, 2)])
        b = impure_at(choice, 2, [pure_(choice, 1), pure_(choice, 3)])
        assert not eq_free(a, b)

    def test_mismatched_containers_rejected(self):
        with pytest.raises(ContainerMismatchError):
            eq_free(pure_(one, 1), pure_(zero, 1))

    @pytest.mark.parametrize("c", [one, const, statef, choice], ids=lambda c: c.name)
    def test_equivalence_relation_on_enumerated_values(self, c):
        values = enum_free(c, (0, 1), 1)
        for a in values:
            assert eq_free(a, a)
        for a in values:
            for b in values:
                assert eq_free(a, b) == eq_free(b, a)
                if eq_free(a, b):
                    for d in values:
                        if eq_free(b, d):
                            assert eq_free(a, d)


class TestForFree:
    def test_pure_checks_payload(self):
        assert for_free(lambda x: x % 2 == 0, pure_(one, 2))

    def test_vacuous_on_zero_position_layer(self):
        assert for_free(lambda x: x % 2 == 0, nothing_(one))

    def test_fails_at_some_position(self):
        v = impure_at(choice, 2, [pure_(choice, 2), pure_(choice, 3)])
        assert not for_free(lambda x: x % 2 == 0, v)

    def test_stable_under_right_identity(self):
        even = lambda x: x % 2 == 0
        for c in (one, const, statef, choice):
            for m in enum_free(c, (0, 2), 1):
                if for_free(even, m):
                    assert for_free(even, bind(m, lambda x: pure_(c, x)))


class TestRendering:
    def test_pure_atom(self):
        assert render_free(pure_(one, 3)) == "pure 3"

    def test_empty_layer(self):
        assert render_free(nothing_(one)) == "impure(tt;)"

    def test_nested_bindings(self):
        v = impure_at(choice, 2, [pure_(choice, 1), impure_at(choice, 0, [])])
        assert render_free(v) == "impure(2; 0→pure 1, 1→impure(0;))"

    def test_error_shape_prints_its_text(self):
        assert render_free(fail_(const, "boom")) == "impure(boom;)"

    def test_statef_shape_prints_its_graph(self):
        v = impure_at(statef, (1, 0), [pure_(statef, 0), pure_(statef, 1)])
        assert render_free(v) == "impure(σ[0↦1,1↦0]; 0→pure 0, 1→pure 1)"

    def test_booleans_render_lowercase(self):
        assert render_free(pure_(one, True)) == "pure true"

    @pytest.mark.parametrize("c", [one, const, statef, choice], ids=lambda c: c.name)
    def test_injective_on_distinguishable_values(self, c):
        values = enum_free(c, (0, 1), 1)
        for a in values:
            for b in values:
                if not eq_free(a, b):
                    assert render_free(a) != render_free(b)
