"""Two queue implementations over effectful lists, and the laws relating them.

The reference queue is a single list; the candidate pairs a front and a back
list so that adding is cheap.  ``to_queue`` maps the pair form back to the
reference form.  The relating laws are executable checks in the style of
property-based testing: a premise that does not come out definitely true
discards the case instead of checking the conclusion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .containers import CHOICE, CONST, ONE, STATEF, ZERO, ContainerError, ContainerMismatchError, ContainerSpec
from .effects import Just, Ok, interpret
from .free import Free, Pure, bind, fail_, nothing_, pure_, render_free
from .mlist import Cons, Nil, append, cons_, nil_, null_, reverse_, total_list


@dataclass(frozen=True, slots=True)
class PairM:
    first: Free
    second: Free


def pair_(ff: Free, fb: Free) -> PairM:
    if ff.container != fb.container:
        raise ContainerMismatchError("pair components governed by different containers")
    return PairM(ff, fb)


# Lifted booleans.  The left operand's effect always runs first; the right
# operand is only demanded when the left comes out pure and non-deciding.


def not_(fb: Free) -> Free:
    c = fb.container
    return bind(fb, lambda b: pure_(c, not b))


def and_(fb1: Free, fb2: Free) -> Free:
    c = fb1.container
    return bind(fb1, lambda b: fb2 if b else pure_(c, False))


def or_(fb1: Free, fb2: Free) -> Free:
    c = fb1.container
    return bind(fb1, lambda b: pure_(c, True) if b else fb2)


# Check outcomes.  A law evaluates to holds, fails (with both sides kept for
# rendering), or discarded when its premise was not definitely true.

HOLDS = "holds"
FAILS = "fails"
DISCARDED = "discarded"


@dataclass(frozen=True, slots=True)
class Outcome:
    status: str
    lhs: Free | None = None
    rhs: Free | None = None


def holds() -> Outcome:
    return Outcome(HOLDS)


def fails(lhs: Free, rhs: Free) -> Outcome:
    return Outcome(FAILS, lhs, rhs)


def discarded() -> Outcome:
    return Outcome(DISCARDED)


def check_eq(lhs: Free, rhs: Free, eq: Callable[[Free, Free], bool]) -> Outcome:
    return holds() if eq(lhs, rhs) else fails(lhs, rhs)


def definitely_true(fb: Free) -> bool:
    """Whether a lifted boolean interprets to true at every reachable outcome.

    An effectful premise never counts as true: undefined stays undefined, a
    failure stays a failure, an empty branch set has no true outcome.
    """
    kind = fb.container.name
    m = interpret(kind, fb)
    if kind == ZERO:
        return m is True
    if kind == ONE:
        return isinstance(m, Just) and m.value is True
    if kind == CONST:
        return isinstance(m, Ok) and m.value is True
    if kind == STATEF:
        return all(x is True for x, _ in m.table)
    if kind == CHOICE:
        return len(m) > 0 and all(x is True for x in m)
    raise ContainerError(f"no premise reading for container {kind!r}")


def implies(premise: Free, conclusion: Outcome) -> Outcome:
    """Property-style implication: discard unless the premise is surely true."""
    if not definitely_true(premise):
        return discarded()
    return conclusion


# Single-list queue.


def empty_(c: ContainerSpec) -> Free:
    return nil_(c)


def is_empty_(fq: Free) -> Free:
    return null_(fq)


def add_(fa: Free, fq: Free) -> Free:
    c = fq.container
    return append(fq, cons_(fa, nil_(c)))


def _empty_front_effect(c: ContainerSpec) -> Free:
    if c.name == ONE:
        return nothing_(c)
    if c.name == CONST:
        return fail_(c, "front: empty queue")
    raise ContainerError("front_ requires the partiality or error container")


def front_(fq: Free) -> Free:
    """Head of the queue; empty queues produce the container's effect."""
    c = fq.container
    _empty_front_effect(c)  # reject unsupported containers before binding

    def step(q) -> Free:
        match q:
            case Nil():
                return _empty_front_effect(c)
            case Cons(head, _):
                return head
        raise TypeError(f"not a list value: {q!r}")

    return bind(fq, step)


# Two-list queue.


def empty_i(c: ContainerSpec) -> Free:
    return pure_(c, PairM(nil_(c), nil_(c)))


def fst_(fqi: Free) -> Free:
    return bind(fqi, lambda p: p.first)


def snd_(fqi: Free) -> Free:
    return bind(fqi, lambda p: p.second)


def is_empty_i(fqi: Free) -> Free:
    return null_(fst_(fqi))


def flip_q(fqi: Free) -> Free:
    """Move the back list to the front when the front has run empty.

    Inspecting the front consumes its effect, so the unchanged case rebuilds
    the pair from the matched parts rather than replaying the original front.
    """
    c = fqi.container

    def step(p: PairM) -> Free:
        def inspect(f) -> Free:
            match f:
                case Nil():
                    return pure_(c, PairM(reverse_(p.second), nil_(c)))
                case Cons(head, tail):
                    return pure_(c, PairM(cons_(head, tail), p.second))
            raise TypeError(f"not a list value: {f!r}")

        return bind(p.first, inspect)

    return bind(fqi, step)


def add_i(fa: Free, fqi: Free) -> Free:
    c = fqi.container
    grown = bind(fqi, lambda p: pure_(c, PairM(p.first, cons_(fa, p.second))))
    return flip_q(grown)


def front_i(fqi: Free) -> Free:
    c = fqi.container
    _empty_front_effect(c)

    def step(f) -> Free:
        match f:
            case Nil():
                return _empty_front_effect(c)
            case Cons(head, _):
                return head
        raise TypeError(f"not a list value: {f!r}")

    return bind(fst_(fqi), step)


def to_queue(fqi: Free) -> Free:
    """Collapse the pair form to the reference form: front then reversed back."""
    return bind(fqi, lambda p: append(p.first, reverse_(p.second)))


def invariant_(fqi: Free) -> Free:
    """Back may only be nonempty while the front is nonempty."""
    return or_(null_(snd_(fqi)), not_(null_(fst_(fqi))))


def total_queue(fqi: Free) -> bool:
    """Defined pair with defined spines on both sides (elements may be anything)."""
    if not isinstance(fqi, Pure):
        return False
    p = fqi.value
    return total_list(p.first) and total_list(p.second)


# The relating laws.


def prop_is_empty(fqi: Free, eq: Callable[[Free, Free], bool]) -> Outcome:
    if not total_queue(fqi):
        return discarded()
    return implies(
        invariant_(fqi),
        check_eq(is_empty_i(fqi), is_empty_(to_queue(fqi)), eq),
    )


def prop_add(fa: Free, fqi: Free, eq: Callable[[Free, Free], bool]) -> Outcome:
    return check_eq(to_queue(add_i(fa, fqi)), add_(fa, to_queue(fqi)), eq)


def prop_front(fqi: Free, eq: Callable[[Free, Free], bool]) -> Outcome:
    if not total_queue(fqi):
        return discarded()
    return implies(
        and_(invariant_(fqi), not_(is_empty_i(fqi))),
        check_eq(front_i(fqi), front_(to_queue(fqi)), eq),
    )


def show_pair(show_first: Callable, show_second: Callable) -> Callable[[object], str]:
    """Atom renderer for pair payloads, reusing the effect-value grammar."""

    def show(p) -> str:
        if isinstance(p, PairM):
            return f"pair({render_free(p.first, show_first)}, {render_free(p.second, show_second)})"
        return str(p)

    return show
