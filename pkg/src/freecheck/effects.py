"""Target monads and the interpretation of effect values into them.

Each builtin container has a matching monad: identity, maybe, error, state,
and list.  A natural transformation maps one functor layer into the monad;
``interpret`` extends it to whole values.  For monads that carry more
structure than the syntax trees do (state, list), structural equality on the
trees is too fine, so ``eq_via_induce`` compares the interpretations instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .containers import (
    CHOICE,
    CONST,
    ONE,
    STATEF,
    ZERO,
    ChoiceF,
    ConstF,
    ContainerError,
    ContainerSpec,
    StateF,
    UnitF,
)
from .free import Free, induce

# Effect names accepted by the public entry points, normalized to the kind of
# the container that models them.
EFFECT_KINDS = {
    "identity": ZERO,
    "maybe": ONE,
    "error": CONST,
    "state": STATEF,
    "list": CHOICE,
    ZERO: ZERO,
    ONE: ONE,
    CONST: CONST,
    STATEF: STATEF,
    CHOICE: CHOICE,
}

KIND_EFFECTS = {ZERO: "identity", ONE: "maybe", CONST: "error", STATEF: "state", CHOICE: "list"}


@dataclass(frozen=True, slots=True)
class Just:
    value: object


@dataclass(frozen=True, slots=True)
class MaybeNothing:
    pass


NOTHING = MaybeNothing()


@dataclass(frozen=True, slots=True)
class Ok:
    value: object


@dataclass(frozen=True, slots=True)
class Err:
    error: str


@dataclass(frozen=True, slots=True)
class StateV:
    """A total map from states to (result, next state), in state order."""

    table: tuple

    def at(self, i: int):
        return self.table[i]


def normalize_kind(kind: str) -> str:
    if kind not in EFFECT_KINDS:
        raise ContainerError(f"unknown effect {kind!r}")
    return EFFECT_KINDS[kind]


def _check_kind(kind: str, fx: Free) -> ContainerSpec:
    c = fx.container
    if normalize_kind(kind) != c.name:
        raise ContainerError(
            f"effect {kind!r} does not match the value's container {c.name!r}"
        )
    return c


def monad_ret(c: ContainerSpec) -> Callable:
    if c.name == ZERO:
        return lambda x: x
    if c.name == ONE:
        return Just
    if c.name == CONST:
        return Ok
    if c.name == STATEF:
        return lambda x: StateV(tuple((x, s) for s in c.states))
    if c.name == CHOICE:
        return lambda x: (x,)
    raise ContainerError(f"no target monad for container {c.name!r}")


def monad_join(c: ContainerSpec) -> Callable:
    if c.name == ZERO:
        return lambda m: m
    if c.name == ONE:
        return lambda m: m.value if isinstance(m, Just) else NOTHING
    if c.name == CONST:
        return lambda m: m.value if isinstance(m, Ok) else m
    if c.name == STATEF:

        def join_state(mm: StateV) -> StateV:
            out = []
            for i, _ in enumerate(c.states):
                inner, s1 = mm.table[i]
                out.append(inner.at(c.state_index(s1)))
            return StateV(tuple(out))

        return join_state
    if c.name == CHOICE:
        return lambda mm: tuple(x for m in mm for x in m)
    raise ContainerError(f"no target monad for container {c.name!r}")


def monad_bind(c: ContainerSpec, m, f: Callable):
    if c.name == ZERO:
        return f(m)
    if c.name == ONE:
        return f(m.value) if isinstance(m, Just) else NOTHING
    if c.name == CONST:
        return f(m.value) if isinstance(m, Ok) else m
    if c.name == STATEF:
        out = []
        for i, _ in enumerate(c.states):
            x, s1 = m.table[i]
            out.append(f(x).at(c.state_index(s1)))
        return StateV(tuple(out))
    if c.name == CHOICE:
        return tuple(y for x in m for y in f(x))
    raise ContainerError(f"no target monad for container {c.name!r}")


def monad_eq(c: ContainerSpec, m1, m2, atom_eq: Callable = None) -> bool:
    """Equality in the target monad; extensional over all states for state."""
    eq = (lambda x, y: x == y) if atom_eq is None else atom_eq
    if c.name == ZERO:
        return eq(m1, m2)
    if c.name == ONE:
        if isinstance(m1, Just) and isinstance(m2, Just):
            return eq(m1.value, m2.value)
        return m1 == m2
    if c.name == CONST:
        if isinstance(m1, Ok) and isinstance(m2, Ok):
            return eq(m1.value, m2.value)
        return m1 == m2
    if c.name == STATEF:
        return all(
            eq(x1, x2) and s1 == s2
            for (x1, s1), (x2, s2) in zip(m1.table, m2.table)
        )
    if c.name == CHOICE:
        return len(m1) == len(m2) and all(eq(x, y) for x, y in zip(m1, m2))
    raise ContainerError(f"no target monad for container {c.name!r}")


def builtin_transform(c: ContainerSpec) -> Callable:
    """The natural transformation from one functor layer into the monad."""
    if c.name == ZERO:

        def absurd(v):
            raise ContainerError("no functor values exist for the zero container")

        return absurd
    if c.name == ONE:
        return lambda v: NOTHING
    if c.name == CONST:
        return lambda v: Err(v.error)
    if c.name == STATEF:
        # A transition paired with per-state payloads becomes the state
        # computation s -> (payload(s), transition(s)).
        def to_state(v: StateF) -> StateV:
            return StateV(tuple(zip(v.outputs, v.transition)))

        return to_state
    if c.name == CHOICE:
        return lambda v: tuple(v.branches)
    raise ContainerError(f"no target monad for container {c.name!r}")


def interpret(kind: str, fx: Free):
    """Map a value into its target monad through the builtin transformation."""
    c = _check_kind(kind, fx)
    return induce(fx, builtin_transform(c), monad_ret(c), monad_join(c))


def eq_via_induce(kind: str, fx: Free, fy: Free, atom_eq: Callable = None) -> bool:
    """Equality decided in the target monad rather than on the syntax trees.

    Structurally distinct trees can interpret to the same monadic value; this
    is the coarser equality appropriate for monads with extra structure.
    """
    c = _check_kind(kind, fx)
    _check_kind(kind, fy)
    return monad_eq(c, interpret(kind, fx), interpret(kind, fy), atom_eq)
