"""Lists whose element slots and spine tails are effect values.

A list value is ``Nil`` or ``Cons(head, tail)`` where both fields are effect
values; the whole list lives inside the effect as well.  ``append`` is a
single recursive definition: it pattern matches the spine under ``bind`` and
re-wraps the effect layers it meets.  ``from_plain``/``to_plain`` bridge to
ordinary sequences for oracle testing in the effect-free world.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .containers import ContainerMismatchError, ContainerSpec, cmap
from .free import Free, Impure, Pure, bind, pure_, render_free


@dataclass(frozen=True, slots=True)
class Nil:
    pass


@dataclass(frozen=True, slots=True)
class Cons:
    head: Free
    tail: Free


NIL = Nil()


def _same_container(*values: Free) -> ContainerSpec:
    c = values[0].container
    for v in values[1:]:
        if v.container != c:
            raise ContainerMismatchError("list parts governed by different containers")
    return c


def nil_(c: ContainerSpec) -> Free:
    return pure_(c, NIL)


def cons_(fx: Free, fxs: Free) -> Free:
    c = _same_container(fx, fxs)
    return pure_(c, Cons(fx, fxs))


def append(fxs: Free, fys: Free) -> Free:
    c = _same_container(fxs, fys)

    def app(xs) -> Free:
        match xs:
            case Nil():
                return fys
            case Cons(fz, fzs):
                return cons_(fz, bind(fzs, app))
        raise TypeError(f"not a list value: {xs!r}")

    return bind(fxs, app)


def reverse_(fxs: Free) -> Free:
    """Accumulator reversal; effects in the spine are demanded and propagate."""
    c = fxs.container

    def rev(fxs: Free, acc: Free) -> Free:
        def step(xs) -> Free:
            match xs:
                case Nil():
                    return acc
                case Cons(fz, fzs):
                    return rev(fzs, cons_(fz, acc))
            raise TypeError(f"not a list value: {xs!r}")

        return bind(fxs, step)

    return rev(fxs, nil_(c))


def null_(fxs: Free) -> Free:
    c = fxs.container
    return bind(fxs, lambda xs: pure_(c, isinstance(xs, Nil)))


def total_list(fxs: Free) -> bool:
    """True iff the spine is a chain of defined cells ending in a defined Nil.

    Element slots are not inspected; a defined list may hold effectful
    elements and still count as total.
    """
    while True:
        if not isinstance(fxs, Pure):
            return False
        match fxs.value:
            case Nil():
                return True
            case Cons(_, tail):
                fxs = tail
            case _:
                raise TypeError(f"not a list value: {fxs.value!r}")


def from_plain(c: ContainerSpec, xs: Sequence) -> Free:
    """Build a fully defined list with defined elements from a sequence."""
    out = nil_(c)
    for x in reversed(xs):
        out = cons_(pure_(c, x), out)
    return out


def to_plain(fxs: Free) -> list | None:
    """Recover the plain sequence, or ``None`` when any slot is effectful."""
    out = []
    while True:
        if not isinstance(fxs, Pure):
            return None
        match fxs.value:
            case Nil():
                return out
            case Cons(head, tail):
                if not isinstance(head, Pure):
                    return None
                out.append(head.value)
                fxs = tail
            case _:
                raise TypeError(f"not a list value: {fxs.value!r}")


def fold_list(nil_case, cons_case: Callable, fxs: Free) -> Free:
    """List recursion through both the spine and its effect layers."""
    c = fxs.container
    match fxs:
        case Pure(_, Nil()):
            return pure_(c, nil_case)
        case Pure(_, Cons(fz, fzs)):
            return pure_(c, cons_case(fz, fold_list(nil_case, cons_case, fzs)))
        case Impure(_, layer):
            return Impure(c, cmap(lambda child: fold_list(nil_case, cons_case, child), layer))
    raise TypeError(f"not a list value: {fxs!r}")


def show_list(show_elem: Callable[[object], str] = None) -> Callable[[object], str]:
    """Atom renderer for list payloads, reusing the effect-value grammar."""
    from .free import show_atom

    elem = show_atom if show_elem is None else show_elem

    def show(xs) -> str:
        match xs:
            case Nil():
                return "nil"
            case Cons(head, tail):
                return f"cons({render_free(head, elem)}, {render_free(tail, show)})"
        return elem(xs)

    return show
