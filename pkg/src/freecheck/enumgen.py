"""Deterministic exhaustive enumeration of effect values at small bounds.

Everything here is ordered and duplicate-free so that law suites are
decision procedures within their bounds and reports are reproducible
byte-for-byte.  Case spaces that would explode combinatorially (triples of
lists, queues) are enumerated as plain structures sharing one length budget,
plus every variant obtained by injecting a single effect layer at one slot;
that keeps each run small while still driving every effect-handling branch,
including effect layers whose positions carry recursive continuations.
"""

from __future__ import annotations

from itertools import product
from typing import Callable, Iterator

from .containers import (
    CHOICE,
    CONST,
    ONE,
    STATEF,
    ChoiceF,
    ConstF,
    ContainerSpec,
    Ext,
    StateF,
    UnitF,
)
from .free import Free, Impure, impure_, pure_
from .mlist import cons_, nil_
from .queue import PairM


def enum_free(c: ContainerSpec, domain: tuple, depth: int) -> list[Free]:
    """All values with at most ``depth`` nested effect layers over ``domain``."""
    out: list[Free] = [pure_(c, x) for x in domain]
    if depth >= 1:
        inner = enum_free(c, domain, depth - 1)
        for shape in c.shapes:
            arity = len(c.positions(shape))
            for children in product(inner, repeat=arity):
                out.append(Impure(c, Ext(shape, children)))
    return out


def enum_ext(c: ContainerSpec, domain: tuple) -> list[Ext]:
    """All extensions of the container with payloads drawn from ``domain``."""
    out: list[Ext] = []
    for shape in c.shapes:
        arity = len(c.positions(shape))
        for payload in product(domain, repeat=arity):
            out.append(Ext(shape, payload))
    return out


def enum_functor_values(c: ContainerSpec, domain: tuple) -> list:
    """All concrete functor values over ``domain``, built independently of Ext."""
    if c.name == ONE:
        return [UnitF()]
    if c.name == CONST:
        return [ConstF(e) for e in c.errors]
    if c.name == STATEF:
        return [
            StateF(transition, outputs)
            for transition in product(c.states, repeat=len(c.states))
            for outputs in product(domain, repeat=len(c.states))
        ]
    if c.name == CHOICE:
        return [
            ChoiceF(branches)
            for n in range(c.max_arity + 1)
            for branches in product(domain, repeat=n)
        ]
    return []


def enum_mlist(c: ContainerSpec, domain: tuple, max_len: int, depth: int) -> list[Free]:
    """All list values with at most ``max_len`` cells.

    Element slots range over ``enum_free(c, domain, depth)``.  A spine slot
    may be an effect layer whose continuations are shorter lists with one
    less layer of spine budget, so effect layers also consume a cell.
    """
    elems = enum_free(c, domain, depth)

    def spines(cells: int, layers: int) -> list[Free]:
        if cells < 0:
            return []
        out: list[Free] = [nil_(c)]
        if cells >= 1:
            for tail in spines(cells - 1, layers):
                for e in elems:
                    out.append(cons_(e, tail))
        if layers >= 1:
            inner = spines(cells - 1, layers - 1)
            for shape in c.shapes:
                arity = len(c.positions(shape))
                for children in product(inner, repeat=arity):
                    out.append(Impure(c, Ext(shape, children)))
        return out

    return spines(max_len, depth)


# Function spaces for quantified laws.  Full tables into a deep codomain are
# combinatorially hopeless for the wider containers, so laws use either all
# tables into a shallow codomain or a small documented family.


def fun_tables(c: ContainerSpec, domain: tuple, depth: int) -> list[dict]:
    """All total functions from ``domain`` into ``enum_free(c, domain, depth)``."""
    values = enum_free(c, domain, depth)
    return [dict(zip(domain, combo)) for combo in product(values, repeat=len(domain))]


def shape_constant(c: ContainerSpec, shape, domain: tuple) -> Free:
    """A canonical one-layer value for a shape, children cycling the domain."""
    arity = len(c.positions(shape))
    children = tuple(pure_(c, domain[i % len(domain)]) for i in range(arity))
    return Impure(c, Ext(shape, children))


def law_fun_family(c: ContainerSpec, domain: tuple, depth: int, table_cap: int = 32) -> list[dict]:
    """Function family for doubly quantified laws.

    All tables into the one-layer codomain when that space is small enough,
    otherwise all pure tables plus one effectful constant per shape.
    """
    if depth >= 1:
        shallow = len(enum_free(c, domain, 1)) ** len(domain)
        if shallow <= table_cap:
            return fun_tables(c, domain, 1)
    family = fun_tables(c, domain, 0)
    if depth >= 1:
        for shape in c.shapes:
            v = shape_constant(c, shape, domain)
            family.append({x: v for x in domain})
    return family


def render_table(table: dict, render_value: Callable) -> str:
    return "{" + ", ".join(f"{x}→{render_value(v)}" for x, v in table.items()) + "}"


# Structured case spaces: plain skeletons plus single-layer injections.


def impure_elems(c: ContainerSpec, domain: tuple) -> list[Free]:
    """The one-layer effect values used as injected elements."""
    return [v for v in enum_free(c, domain, 1) if isinstance(v, Impure)]


def wrap_spine(c: ContainerSpec, shape, cont: Free) -> Free:
    """An effect layer in a spine; every position continues with ``cont``."""
    arity = len(c.positions(shape))
    return impure_(c, Ext(shape, (cont,) * arity))


def build_list(
    c: ContainerSpec,
    elems: tuple,
    elem_inj: tuple[int, Free] | None = None,
    spine_inj: tuple[int, object] | None = None,
) -> Free:
    """Assemble a list from pure element values with at most one injection.

    ``elem_inj = (j, v)`` replaces element ``j`` by the effect value ``v``;
    ``spine_inj = (k, shape)`` wraps the tail after ``k`` cells in one layer
    of ``shape`` (``k == len(elems)`` wraps the final empty tail).
    """
    n = len(elems)
    cur = nil_(c)
    if spine_inj is not None and spine_inj[0] == n:
        cur = wrap_spine(c, spine_inj[1], cur)
    for j in range(n - 1, -1, -1):
        e = elem_inj[1] if elem_inj is not None and elem_inj[0] == j else pure_(c, elems[j])
        cur = cons_(e, cur)
        if spine_inj is not None and spine_inj[0] == j:
            cur = wrap_spine(c, spine_inj[1], cur)
    return cur


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All ordered splits of at most ``total`` over ``parts`` slots."""
    if parts == 0:
        yield ()
        return
    for head in range(total + 1):
        for rest in compositions(total - head, parts - 1):
            yield (head,) + rest


def list_group_cases(
    c: ContainerSpec, domain: tuple, max_len: int, group: int, depth: int
) -> Iterator[tuple[tuple[Free, ...], bool, bool]]:
    """Groups of lists sharing a cell budget, with single-layer variants.

    Yields ``(lists, effectful, branching_spine)`` where ``branching_spine``
    marks a spine layer with at least two positions.
    """
    imp_elems = impure_elems(c, domain) if depth >= 1 else []
    for lengths in compositions(max_len, group):
        slots = sum(lengths)
        for flat in product(domain, repeat=slots):
            per_list = []
            start = 0
            for n in lengths:
                per_list.append(flat[start : start + n])
                start += n
            plain = tuple(build_list(c, es) for es in per_list)
            yield plain, False, False
            if depth < 1:
                continue
            for i, es in enumerate(per_list):
                for j in range(len(es)):
                    for v in imp_elems:
                        group_vals = list(plain)
                        group_vals[i] = build_list(c, es, elem_inj=(j, v))
                        yield tuple(group_vals), True, False
                for k in range(len(es) + 1):
                    for shape in c.shapes:
                        group_vals = list(plain)
                        group_vals[i] = build_list(c, es, spine_inj=(k, shape))
                        branching = len(c.positions(shape)) >= 2
                        yield tuple(group_vals), True, branching


def queue_cases(
    c: ContainerSpec, domain: tuple, max_len: int, depth: int
) -> Iterator[Free]:
    """Pair-form queue values: plain pairs plus single-layer variants.

    The injection may land in either list (element or spine slot) or wrap
    the pair itself in one effect layer.
    """
    imp_elems = impure_elems(c, domain) if depth >= 1 else []
    for front_len, back_len in compositions(max_len, 2):
        slots = front_len + back_len
        for flat in product(domain, repeat=slots):
            front_elems = flat[:front_len]
            back_elems = flat[front_len:]
            front = build_list(c, front_elems)
            back = build_list(c, back_elems)
            plain = pure_(c, PairM(front, back))
            yield plain
            if depth < 1:
                continue
            for side, es in ((0, front_elems), (1, back_elems)):
                for j in range(len(es)):
                    for v in imp_elems:
                        injected = build_list(c, es, elem_inj=(j, v))
                        parts = [front, back]
                        parts[side] = injected
                        yield pure_(c, PairM(parts[0], parts[1]))
                for k in range(len(es) + 1):
                    for shape in c.shapes:
                        injected = build_list(c, es, spine_inj=(k, shape))
                        parts = [front, back]
                        parts[side] = injected
                        yield pure_(c, PairM(parts[0], parts[1]))
            for shape in c.shapes:
                arity = len(c.positions(shape))
                yield impure_(c, Ext(shape, (plain,) * arity))


def plain_lists(domain: tuple, max_len: int) -> list[tuple]:
    """All plain tuples over ``domain`` up to ``max_len``, shortest first."""
    out: list[tuple] = []
    for n in range(max_len + 1):
        out.extend(product(domain, repeat=n))
    return out
