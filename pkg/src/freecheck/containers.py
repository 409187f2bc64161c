"""Container descriptors (shapes and positions) and their extension functor.

A container describes a data type by a finite set of shapes and, per shape, a
finite ordered set of positions.  Its extension pairs a shape with a payload
table assigning a value to every position of that shape.  Five builtin
containers are provided:

  zero    no shapes at all (the effect-free case)
  one     a single shape with no positions (partiality)
  const   one shape per error message, no positions (failure with a message)
  statef  one shape per total state transition, one position per state
  choice  shapes 0..k, shape n having n positions (bounded nondeterminism)

Payloads are always normalized to a tuple aligned with the shape's position
order, so equality and rendering are decidable by pointwise comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable

ZERO = "zero"
ONE = "one"
CONST = "const"
STATEF = "statef"
CHOICE = "choice"

KINDS = (ZERO, ONE, CONST, STATEF, CHOICE)

UNIT_SHAPE = "tt"


class ContainerError(ValueError):
    """Malformed container parameters, or a shape foreign to a container."""


class ContainerMismatchError(ContainerError):
    """Two values governed by different containers were combined."""


@dataclass(frozen=True, slots=True)
class ContainerSpec:
    """A container descriptor with finitely enumerable shapes and positions.

    ``shapes`` is ordered and duplicate-free.  ``positions`` is deterministic:
    repeated calls for the same shape yield the same ordered tuple.
    """

    name: str
    shapes: tuple
    errors: tuple[str, ...] = ()
    states: tuple[int, ...] = ()
    max_arity: int = 0

    def positions(self, shape) -> tuple:
        if not self.has_shape(shape):
            raise ContainerError(f"shape {shape!r} does not belong to container {self.name!r}")
        if self.name == STATEF:
            return self.states
        if self.name == CHOICE:
            return tuple(range(shape))
        return ()

    def shape_eq(self, s1, s2) -> bool:
        return s1 == s2

    def has_shape(self, shape) -> bool:
        return any(self.shape_eq(shape, s) for s in self.shapes)

    def state_index(self, state) -> int:
        return self.states.index(state)


def builtin_container(
    kind: str,
    *,
    errors: Iterable[str] | None = None,
    states: Iterable[int] | None = None,
    max_arity: int | None = None,
) -> ContainerSpec:
    """Build one of the builtin containers.

    ``errors`` is the error universe for ``const`` (must be nonempty),
    ``states`` the state universe for ``statef`` (must be nonempty), and
    ``max_arity`` the largest branching width for ``choice`` (must be >= 0).
    """
    if kind == ZERO:
        return ContainerSpec(ZERO, shapes=())
    if kind == ONE:
        return ContainerSpec(ONE, shapes=(UNIT_SHAPE,))
    if kind == CONST:
        errs = tuple(errors or ())
        if not errs:
            raise ContainerError("const requires a nonempty error universe")
        return ContainerSpec(CONST, shapes=errs, errors=errs)
    if kind == STATEF:
        sts = tuple(states or ())
        if not sts:
            raise ContainerError("statef requires a nonempty state universe")
        # One shape per total map S -> S, as the tuple of images in state order.
        shapes = tuple(product(sts, repeat=len(sts)))
        return ContainerSpec(STATEF, shapes=shapes, states=sts)
    if kind == CHOICE:
        k = 0 if max_arity is None else max_arity
        if k < 0:
            raise ContainerError("choice requires max_arity >= 0")
        return ContainerSpec(CHOICE, shapes=tuple(range(k + 1)), max_arity=k)
    raise ContainerError(f"unknown container kind {kind!r}")


@dataclass(frozen=True, slots=True)
class Ext:
    """One container layer: a shape plus a payload table in position order."""

    shape: object
    payload: tuple


def make_ext(c: ContainerSpec, shape, at: Callable) -> Ext:
    """Tabulate an arbitrary position mapping into a normalized extension."""
    return Ext(shape, tuple(at(p) for p in c.positions(shape)))


def ext_at(c: ContainerSpec, e: Ext, pos):
    """Query the payload at a position; every listed position succeeds."""
    for i, p in enumerate(c.positions(e.shape)):
        if p == pos:
            return e.payload[i]
    raise ContainerError(f"position {pos!r} not valid for shape {e.shape!r}")


def check_ext(c: ContainerSpec, e: Ext) -> Ext:
    """Validate that an extension belongs to a container and is total."""
    n = len(c.positions(e.shape))
    if len(e.payload) != n:
        raise ContainerError(
            f"payload of length {len(e.payload)} for shape {e.shape!r} with {n} positions"
        )
    return e


def cmap(f: Callable, e: Ext) -> Ext:
    """Map a function over the payload; the shape is preserved."""
    return Ext(e.shape, tuple(f(x) for x in e.payload))


def ext_eq(c: ContainerSpec, e1: Ext, e2: Ext, value_eq: Callable = None) -> bool:
    """Pointwise extension equality over the enumerated positions."""
    if not c.shape_eq(e1.shape, e2.shape):
        return False
    if len(e1.payload) != len(e2.payload):
        return False
    if value_eq is None:
        return all(x == y for x, y in zip(e1.payload, e2.payload))
    return all(value_eq(x, y) for x, y in zip(e1.payload, e2.payload))


# Concrete functor values, one tagged representation per builtin container.


class FunctorValue:
    """Marker base for the concrete functor representation of a container."""

    __slots__ = ()


@dataclass(frozen=True, slots=True)
class UnitF(FunctorValue):
    """The single inhabitant of the partiality functor."""


@dataclass(frozen=True, slots=True)
class ConstF(FunctorValue):
    error: str


@dataclass(frozen=True, slots=True)
class StateF(FunctorValue):
    """A state transition paired with a per-state payload, in state order."""

    transition: tuple
    outputs: tuple


@dataclass(frozen=True, slots=True)
class ChoiceF(FunctorValue):
    branches: tuple


def to_functor(c: ContainerSpec, e: Ext) -> FunctorValue:
    """Convert an extension into the concrete functor value it represents."""
    check_ext(c, e)
    if c.name == ONE:
        return UnitF()
    if c.name == CONST:
        return ConstF(e.shape)
    if c.name == STATEF:
        return StateF(e.shape, e.payload)
    if c.name == CHOICE:
        return ChoiceF(e.payload)
    raise ContainerError(f"container {c.name!r} has no functor values")


def from_functor(c: ContainerSpec, v: FunctorValue) -> Ext:
    """Convert a concrete functor value into its extension."""
    if c.name == ONE and isinstance(v, UnitF):
        return Ext(UNIT_SHAPE, ())
    if c.name == CONST and isinstance(v, ConstF):
        if not c.has_shape(v.error):
            raise ContainerError(f"error {v.error!r} outside the universe {c.errors!r}")
        return Ext(v.error, ())
    if c.name == STATEF and isinstance(v, StateF):
        return check_ext(c, Ext(v.transition, v.outputs))
    if c.name == CHOICE and isinstance(v, ChoiceF):
        if len(v.branches) > c.max_arity:
            raise ContainerError(
                f"sequence of length {len(v.branches)} exceeds max arity {c.max_arity}"
            )
        return Ext(len(v.branches), tuple(v.branches))
    raise ContainerError(f"functor value {v!r} does not belong to container {c.name!r}")
