"""Syntax trees for computations over a container: pure results or effect layers.

A value is either ``Pure`` (a finished result) or ``Impure`` (one container
layer whose payload holds the continuations, one per position).  Every value
carries its governing container so that mixing containers is a detectable
error rather than silent nonsense.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .containers import (
    CONST,
    ONE,
    STATEF,
    UNIT_SHAPE,
    ContainerError,
    ContainerMismatchError,
    ContainerSpec,
    Ext,
    check_ext,
    cmap,
    to_functor,
)


class Free:
    """Base for the two value constructors; never instantiated directly."""

    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Pure(Free):
    container: ContainerSpec
    value: object


@dataclass(frozen=True, slots=True)
class Impure(Free):
    container: ContainerSpec
    layer: Ext


def pure_(c: ContainerSpec, x) -> Free:
    return Pure(c, x)


def impure_(c: ContainerSpec, layer: Ext) -> Free:
    """Wrap one effect layer; rejects shapes foreign to the container."""
    if not c.has_shape(layer.shape):
        raise ContainerError(f"shape {layer.shape!r} does not belong to container {c.name!r}")
    check_ext(c, layer)
    for child in layer.payload:
        if not isinstance(child, Free):
            raise ContainerError(f"payload entry {child!r} is not an effect value")
        if child.container is not c and child.container != c:
            raise ContainerMismatchError("payload value governed by a different container")
    return Impure(c, layer)


def impure_at(c: ContainerSpec, shape, children) -> Free:
    """Convenience constructor taking the children in position order."""
    return impure_(c, Ext(shape, tuple(children)))


def nothing_(c: ContainerSpec) -> Free:
    """The distinguished undefined value of the partiality container."""
    if c.name != ONE:
        raise ContainerError("nothing_ requires the 'one' container")
    return Impure(c, Ext(UNIT_SHAPE, ()))


def fail_(c: ContainerSpec, msg: str) -> Free:
    """A failure carrying ``msg`` as its shape, for the error container."""
    if c.name != CONST:
        raise ContainerError("fail_ requires the 'const' container")
    if not c.has_shape(msg):
        raise ContainerError(f"message {msg!r} outside the error universe {c.errors!r}")
    return Impure(c, Ext(msg, ()))


def fold_free(pur: Callable, imp: Callable, fx: Free):
    """Collapse a value: ``pur`` on results, ``imp`` on folded functor layers."""
    match fx:
        case Pure(_, x):
            return pur(x)
        case Impure(c, layer):
            return imp(to_functor(c, cmap(lambda child: fold_free(pur, imp, child), layer)))
    raise TypeError(f"not an effect value: {fx!r}")


def bind(fx: Free, f: Callable[[object], Free]) -> Free:
    """Sequence ``f`` after ``fx``, threading it through every effect layer."""
    match fx:
        case Pure(_, x):
            return f(x)
        case Impure(c, layer):
            return Impure(c, cmap(lambda child: bind(child, f), layer))
    raise TypeError(f"not an effect value: {fx!r}")


def induce(fx: Free, nt: Callable, ret: Callable, join: Callable):
    """Interpret into a monad given a natural transformation on functor values.

    The result is the unique monad homomorphism extending ``nt``: it sends
    ``Pure`` to ``ret`` and collapses each effect layer with ``join``.
    """
    return fold_free(ret, lambda v: join(nt(v)), fx)


def eq_free(fx: Free, fy: Free, atom_eq: Callable = None) -> bool:
    """Structural equality, comparing payloads pointwise at every position.

    Values governed by different containers cannot be compared.  ``atom_eq``
    decides equality of the ``Pure`` payloads and defaults to ``==`` (which on
    the structures used here recurses correctly through nested values).
    """
    if fx.container != fy.container:
        raise ContainerMismatchError("cannot compare values of different containers")

    def go(a: Free, b: Free) -> bool:
        match a, b:
            case Pure(_, x), Pure(_, y):
                return x == y if atom_eq is None else atom_eq(x, y)
            case Impure(c, la), Impure(_, lb):
                if not c.shape_eq(la.shape, lb.shape):
                    return False
                return all(go(p, q) for p, q in zip(la.payload, lb.payload))
        return False

    return go(fx, fy)


def for_free(pred: Callable[[object], bool], fx: Free) -> bool:
    """Lift a payload predicate through every effect layer.

    Holds for ``Pure x`` iff ``pred(x)``; holds for an effect layer iff it
    holds for the continuation at every position (vacuously for none).
    """
    match fx:
        case Pure(_, x):
            return bool(pred(x))
        case Impure(_, layer):
            return all(for_free(pred, child) for child in layer.payload)
    raise TypeError(f"not an effect value: {fx!r}")


# Rendering.  The grammar is fixed because reports compare output bit-exactly:
#   freeval := "pure " atom | "impure(" shape ";" [" " binding {", " binding}] ")"
#   binding := pos "→" freeval


def show_atom(x) -> str:
    """Default atom renderer for the small scalar domains used in checks."""
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


def render_shape(c: ContainerSpec, shape) -> str:
    if c.name == STATEF:
        graph = ",".join(f"{s}↦{shape[i]}" for i, s in enumerate(c.states))
        return f"σ[{graph}]"
    return str(shape)


def render_free(fx: Free, show: Callable[[object], str] = show_atom) -> str:
    match fx:
        case Pure(_, x):
            return "pure " + show(x)
        case Impure(c, layer):
            shape = render_shape(c, layer.shape)
            if not layer.payload:
                return f"impure({shape};)"
            bindings = ", ".join(
                f"{pos}→{render_free(child, show)}"
                for pos, child in zip(c.positions(layer.shape), layer.payload)
            )
            return f"impure({shape}; {bindings})"
    raise TypeError(f"not an effect value: {fx!r}")
