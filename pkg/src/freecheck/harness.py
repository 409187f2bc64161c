"""Law suites, their exhaustive runner, and the report data model.

Each suite replays one family of laws as a finite decision procedure at the
configured bounds.  Reports are deterministic for a fixed configuration:
two runs produce byte-identical output.  Case evaluation is pure, so cases
may be partitioned across workers; partial results merge associatively and
commutatively back into the sequential report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .containers import (
    CHOICE,
    CONST,
    ONE,
    STATEF,
    ZERO,
    ContainerError,
    ContainerSpec,
    Ext,
    builtin_container,
    ext_eq,
    from_functor,
    to_functor,
)
from .effects import eq_via_induce, normalize_kind
from .enumgen import (
    enum_ext,
    enum_free,
    enum_functor_values,
    fun_tables,
    law_fun_family,
    list_group_cases,
    plain_lists,
    queue_cases,
    render_table,
)
from .free import (
    Impure,
    bind,
    eq_free,
    fold_free,
    impure_,
    pure_,
    render_free,
    render_shape,
    show_atom,
)
from .mlist import append, from_plain, reverse_, show_list, to_plain
from .queue import (
    DISCARDED,
    FAILS,
    Outcome,
    PairM,
    prop_add,
    prop_front,
    prop_is_empty,
    show_pair,
    to_queue,
)

SUITE_NAMES = (
    "container_iso",
    "monad_laws",
    "append_assoc",
    "queue_props",
    "oracle_equiv",
    "custom_eq",
)

# Suites restricted to particular containers; everything else runs anywhere.
SUITE_KINDS = {
    "oracle_equiv": (ZERO,),
    "custom_eq": (STATEF, CHOICE),
}

DEFAULT_ERRORS = ("front: empty queue",)


class SuiteNotApplicableError(ContainerError):
    """The requested suite does not apply to the requested effect."""


@dataclass(frozen=True)
class CheckConfig:
    """Bounds for one suite run; the defaults keep every suite fast."""

    kind: str
    suite: str
    max_len: int = 3
    domain_size: int = 2
    depth: int = 1
    state_size: int = 2
    max_arity: int = 2
    errors: tuple[str, ...] = DEFAULT_ERRORS

    def validate(self) -> None:
        for name in ("max_len", "domain_size", "depth", "state_size", "max_arity"):
            if getattr(self, name) < 0:
                raise ContainerError(f"{name} must be >= 0")
        if self.suite not in SUITE_NAMES:
            raise ContainerError(f"unknown suite {self.suite!r}")
        normalize_kind(self.kind)

    @property
    def domain(self) -> tuple:
        return tuple(range(self.domain_size))


def build_container(cfg: CheckConfig) -> ContainerSpec:
    kind = normalize_kind(cfg.kind)
    if kind == CONST:
        return builtin_container(CONST, errors=cfg.errors)
    if kind == STATEF:
        return builtin_container(STATEF, states=tuple(range(cfg.state_size)))
    if kind == CHOICE:
        return builtin_container(CHOICE, max_arity=cfg.max_arity)
    return builtin_container(kind)


@dataclass(frozen=True)
class Failure:
    law: str
    case_index: int
    inputs: str
    lhs: str
    rhs: str


@dataclass
class LawResult:
    """Counts and failures for one law; presentation fields are derived."""

    law: str
    checked: int = 0
    discarded: int = 0
    case_failures: list[Failure] = field(default_factory=list)
    notes: tuple[str, ...] = ()
    extras: tuple[tuple[str, int], ...] = ()
    min_extras: tuple[tuple[str, int], ...] = ()
    skipped: bool = False

    @property
    def failures(self) -> list[Failure]:
        out = list(self.case_failures)
        have = dict(self.extras)
        for key, minimum in self.min_extras:
            if have.get(key, 0) < minimum:
                out.append(
                    Failure(
                        self.law,
                        self.checked + self.discarded,
                        f"{key}={have.get(key, 0)} after {self.checked} checked cases (need >= {minimum})",
                        "",
                        "",
                    )
                )
        return out

    @property
    def status(self) -> str:
        if self.skipped:
            return "skip"
        return "fail" if self.failures else "ok"

    @property
    def detail(self) -> str:
        parts = list(self.notes)
        parts.extend(f"{key}={value}" for key, value in self.extras)
        return " ".join(parts)


@dataclass
class CheckReport:
    suite: str
    container: str
    laws: list[LawResult]

    @property
    def cases_checked(self) -> int:
        return sum(lr.checked for lr in self.laws)

    @property
    def cases_discarded(self) -> int:
        return sum(lr.discarded for lr in self.laws)

    @property
    def failures(self) -> list[Failure]:
        return [f for lr in self.laws for f in lr.failures]

    def tsv_lines(self) -> list[str]:
        return [
            f"{self.suite}\t{lr.law}\t{lr.status}\t{lr.checked}\t{lr.discarded}\t{lr.detail}"
            for lr in self.laws
        ]

    def text_lines(self) -> list[str]:
        lines = [f"suite {self.suite} (container {self.container})"]
        for lr in self.laws:
            head = f"  {lr.law}: {lr.status} checked={lr.checked} discarded={lr.discarded}"
            if lr.detail:
                head += f" [{lr.detail}]"
            lines.append(head)
            for f in lr.failures:
                lines.append(f"    case {f.case_index}: inputs={f.inputs}")
                if f.lhs or f.rhs:
                    lines.append(f"      lhs={f.lhs}")
                    lines.append(f"      rhs={f.rhs}")
        verdict = "PASS" if not self.failures else "FAIL"
        lines.append(f"suite {self.suite}: {verdict}")
        return lines


# Case evaluation.  A check callback returns None for a passing case, the
# string DISCARDED for a filtered one, or a (inputs, lhs, rhs) triple of
# rendered strings for a failing one.  Extra counters are reported through
# the optional second return slot of checks that produce them.

CasePass = None


def run_law(
    name: str,
    cases: Iterable,
    check: Callable,
    notes: tuple[str, ...] = (),
    counters: tuple[str, ...] = (),
    min_extras: tuple[tuple[str, int], ...] = (),
    start_index: int = 0,
) -> LawResult:
    """Evaluate ``check`` over ``cases``, counting and collecting failures."""
    checked = 0
    discarded = 0
    failures: list[Failure] = []
    tally = {key: 0 for key in counters}
    index = start_index
    for case in cases:
        result, bumps = check(case)
        if bumps:
            for key in bumps:
                tally[key] += 1
        if result is CasePass:
            checked += 1
        elif result is DISCARDED:
            discarded += 1
        else:
            checked += 1
            failures.append(Failure(name, index, *result))
        index += 1
    return LawResult(
        law=name,
        checked=checked,
        discarded=discarded,
        case_failures=failures,
        notes=notes,
        extras=tuple(sorted(tally.items())),
        min_extras=min_extras,
    )


def merge_law_results(a: LawResult, b: LawResult) -> LawResult:
    """Combine results of two case partitions of the same law."""
    if (a.law, a.notes, a.min_extras, a.skipped) != (b.law, b.notes, b.min_extras, b.skipped):
        raise ValueError("cannot merge results of different laws")
    tally = dict(a.extras)
    for key, value in b.extras:
        tally[key] = tally.get(key, 0) + value
    return LawResult(
        law=a.law,
        checked=a.checked + b.checked,
        discarded=a.discarded + b.discarded,
        case_failures=sorted(a.case_failures + b.case_failures, key=lambda f: f.case_index),
        notes=a.notes,
        extras=tuple(sorted(tally.items())),
        min_extras=a.min_extras,
        skipped=a.skipped,
    )


def merge_reports(a: CheckReport, b: CheckReport) -> CheckReport:
    if (a.suite, a.container) != (b.suite, b.container):
        raise ValueError("cannot merge reports of different runs")
    by_name = {lr.law: lr for lr in a.laws}
    merged = [merge_law_results(by_name[lr.law], lr) for lr in b.laws]
    return CheckReport(a.suite, a.container, merged)


def render_ext(c: ContainerSpec, e: Ext, show: Callable = show_atom) -> str:
    shape = render_shape(c, e.shape)
    if not e.payload:
        return f"ext({shape};)"
    bindings = ", ".join(
        f"{pos}→{show(v)}" for pos, v in zip(c.positions(e.shape), e.payload)
    )
    return f"ext({shape}; {bindings})"


# The suites.


def suite_container_iso(c: ContainerSpec, cfg: CheckConfig) -> list[LawResult]:
    domain = cfg.domain
    exts = enum_ext(c, domain)
    values = enum_functor_values(c, domain)

    def check_from_to(e):
        back = from_functor(c, to_functor(c, e))
        if ext_eq(c, back, e):
            return CasePass, None
        return (render_ext(c, e), render_ext(c, back), render_ext(c, e)), None

    def check_to_from(v):
        back = to_functor(c, from_functor(c, v))
        if back == v:
            return CasePass, None
        return (repr(v), repr(back), repr(v)), None

    return [
        run_law("from_to", exts, check_from_to),
        run_law("to_from", values, check_to_from),
    ]


def suite_monad_laws(c: ContainerSpec, cfg: CheckConfig) -> list[LawResult]:
    domain = cfg.domain
    values = enum_free(c, domain, cfg.depth)
    shallow_funs = fun_tables(c, domain, min(cfg.depth, 1))
    family = law_fun_family(c, domain, cfg.depth)

    def rfun(table: dict) -> str:
        return render_table(table, render_free)

    def check_left_identity(case):
        x, f = case
        lhs = bind(pure_(c, x), lambda v: f[v])
        rhs = f[x]
        if eq_free(lhs, rhs):
            return CasePass, None
        return (f"x={x} f={rfun(f)}", render_free(lhs), render_free(rhs)), None

    def check_right_identity(m):
        lhs = bind(m, lambda v: pure_(c, v))
        if eq_free(lhs, m):
            return CasePass, None
        return (render_free(m), render_free(lhs), render_free(m)), None

    def check_associativity(case):
        m, f, g = case
        lhs = bind(bind(m, lambda v: f[v]), lambda v: g[v])
        rhs = bind(m, lambda v: bind(f[v], lambda w: g[w]))
        if eq_free(lhs, rhs):
            return CasePass, None
        inputs = f"m={render_free(m)} f={rfun(f)} g={rfun(g)}"
        return (inputs, render_free(lhs), render_free(rhs)), None

    def check_fold_fusion(m):
        rebuilt = fold_free(
            lambda x: pure_(c, x),
            lambda fv: impure_(c, from_functor(c, fv)),
            m,
        )
        if eq_free(rebuilt, m):
            return CasePass, None
        return (render_free(m), render_free(rebuilt), render_free(m)), None

    left_cases = ((x, f) for f in shallow_funs for x in domain)
    assoc_cases = ((m, f, g) for m in values for f in family for g in family)
    return [
        run_law("left_identity", left_cases, check_left_identity),
        run_law("right_identity", values, check_right_identity),
        run_law("associativity", assoc_cases, check_associativity),
        run_law("fold_fusion", values, check_fold_fusion),
    ]


def suite_append_assoc(c: ContainerSpec, cfg: CheckConfig) -> list[LawResult]:
    show = show_list()

    def check(case):
        (fxs, fys, fzs), effectful, branching = case
        bumps = []
        if effectful:
            bumps.append("impure_cases")
        if branching:
            bumps.append("branching_spine_cases")
        lhs = append(fxs, append(fys, fzs))
        rhs = append(append(fxs, fys), fzs)
        if eq_free(lhs, rhs):
            return CasePass, bumps
        inputs = " ".join(
            f"{name}={render_free(v, show)}"
            for name, v in (("fxs", fxs), ("fys", fys), ("fzs", fzs))
        )
        return (inputs, render_free(lhs, show), render_free(rhs, show)), bumps

    cases = list_group_cases(c, cfg.domain, cfg.max_len, 3, cfg.depth)
    return [
        run_law(
            "append_assoc",
            cases,
            check,
            counters=("impure_cases", "branching_spine_cases"),
        )
    ]


def suite_queue_props(c: ContainerSpec, cfg: CheckConfig) -> list[LawResult]:
    domain = cfg.domain
    show_queue = show_pair(show_list(), show_list())
    show = show_list()
    queues = list(queue_cases(c, domain, cfg.max_len, cfg.depth))
    eq = eq_free

    def from_outcome(outcome: Outcome, inputs: Callable[[], str]):
        if outcome.status == FAILS:
            return (
                inputs(),
                render_free(outcome.lhs, show),
                render_free(outcome.rhs, show),
            ), None
        if outcome.status == DISCARDED:
            return DISCARDED, None
        return CasePass, None

    def check_is_empty(fqi):
        return from_outcome(prop_is_empty(fqi, eq), lambda: render_free(fqi, show_queue))

    def check_add(case):
        fa, fqi = case
        return from_outcome(
            prop_add(fa, fqi, eq),
            lambda: f"fa={render_free(fa)} fqi={render_free(fqi, show_queue)}",
        )

    def check_front(fqi):
        return from_outcome(prop_front(fqi, eq), lambda: render_free(fqi, show_queue))

    add_cases = ((fa, fqi) for fa in enum_free(c, domain, cfg.depth) for fqi in queues)
    laws = [
        run_law("prop_isEmpty", queues, check_is_empty),
        run_law("prop_add", add_cases, check_add),
    ]
    if c.name == ONE:
        laws.append(
            run_law("prop_front", queues, check_front, notes=("front=undefined-on-empty",))
        )
    elif c.name == CONST:
        laws.append(
            run_law(
                "prop_front",
                queues,
                check_front,
                notes=('front=error("front: empty queue")',),
            )
        )
    else:
        effect = {ZERO: "identity", STATEF: "state", CHOICE: "choice"}.get(c.name, c.name)
        laws.append(
            LawResult(
                law="prop_front",
                skipped=True,
                notes=(f"not applicable for effect {effect}",),
            )
        )
    return laws


def suite_oracle_equiv(c: ContainerSpec, cfg: CheckConfig) -> list[LawResult]:
    show = show_list()
    plains = plain_lists(cfg.domain, cfg.max_len)

    def check_append(case):
        xs, ys = case
        got = to_plain(append(from_plain(c, xs), from_plain(c, ys)))
        want = list(xs + ys)
        if got == want:
            return CasePass, None
        return (f"xs={list(xs)} ys={list(ys)}", str(got), str(want)), None

    def check_reverse(xs):
        got = to_plain(reverse_(from_plain(c, xs)))
        want = list(reversed(xs))
        if got == want:
            return CasePass, None
        return (f"xs={list(xs)}", str(got), str(want)), None

    def check_to_queue(case):
        fs, bs = case
        fqi = pure_(c, PairM(from_plain(c, fs), from_plain(c, bs)))
        got = to_plain(to_queue(fqi))
        want = list(fs) + list(reversed(bs))
        if got == want:
            return CasePass, None
        return (f"front={list(fs)} back={list(bs)}", str(got), str(want)), None

    pairs = [(xs, ys) for xs in plains for ys in plains]
    return [
        run_law("append_plain", pairs, check_append),
        run_law("reverse_plain", plains, check_reverse),
        run_law("to_queue_plain", pairs, check_to_queue),
    ]


def suite_custom_eq(c: ContainerSpec, cfg: CheckConfig) -> list[LawResult]:
    domain = cfg.domain
    kind = c.name
    values = enum_free(c, domain, cfg.depth)

    def check_refinement(case):
        a, b = case
        if eq_free(a, b) and not eq_via_induce(kind, a, b):
            return (
                f"a={render_free(a)} b={render_free(b)}",
                "eq_free=true",
                "eq_via_induce=false",
            ), None
        return CasePass, None

    def check_witness_pair(case):
        a, b = case
        if eq_via_induce(kind, a, b) and not eq_free(a, b):
            return CasePass, ("witnesses",)
        return CasePass, None

    def check_state_identity(x):
        identity = tuple(c.states)
        lhs = Impure(c, Ext(identity, tuple(pure_(c, x) for _ in c.states)))
        rhs = pure_(c, x)
        if eq_via_induce(kind, lhs, rhs) and not eq_free(lhs, rhs):
            return CasePass, ("witnesses",)
        return (
            f"x={x}",
            f"eq_via_induce={str(eq_via_induce(kind, lhs, rhs)).lower()}",
            f"eq_free={str(eq_free(lhs, rhs)).lower()}",
        ), None

    refinement_cases = ((a, b) for a in values for b in values)
    laws = [run_law("eq_refinement", refinement_cases, check_refinement)]
    if kind == STATEF:
        laws.append(
            run_law(
                "induce_eq_witness",
                list(domain),
                check_state_identity,
                counters=("witnesses",),
                min_extras=(("witnesses", 1),),
            )
        )
    else:
        witness_cases = (
            (values[i], values[j])
            for i in range(len(values))
            for j in range(i + 1, len(values))
        )
        laws.append(
            run_law(
                "induce_eq_witness",
                witness_cases,
                check_witness_pair,
                counters=("witnesses",),
                min_extras=(("witnesses", 1),),
            )
        )
    return laws


SUITES = {
    "container_iso": suite_container_iso,
    "monad_laws": suite_monad_laws,
    "append_assoc": suite_append_assoc,
    "queue_props": suite_queue_props,
    "oracle_equiv": suite_oracle_equiv,
    "custom_eq": suite_custom_eq,
}


def run_suite(cfg: CheckConfig) -> CheckReport:
    """Run one suite at the configured bounds and return its report."""
    cfg.validate()
    kind = normalize_kind(cfg.kind)
    allowed = SUITE_KINDS.get(cfg.suite)
    if allowed is not None and kind not in allowed:
        raise SuiteNotApplicableError(
            f"suite {cfg.suite!r} does not apply to container {kind!r}"
        )
    c = build_container(cfg)
    laws = SUITES[cfg.suite](c, cfg)
    return CheckReport(cfg.suite, c.name, laws)
