"""Effect-generic lists and queues over containers, with law checking."""

from .containers import (
    CHOICE,
    CONST,
    ONE,
    STATEF,
    ZERO,
    ChoiceF,
    ConstF,
    ContainerError,
    ContainerMismatchError,
    ContainerSpec,
    Ext,
    StateF,
    UnitF,
    builtin_container,
    cmap,
    ext_at,
    ext_eq,
    from_functor,
    make_ext,
    to_functor,
)
from .effects import (
    NOTHING,
    Err,
    Just,
    Ok,
    StateV,
    builtin_transform,
    eq_via_induce,
    interpret,
    monad_bind,
    monad_eq,
    monad_join,
    monad_ret,
)
from .free import (
    Free,
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
from .harness import CheckConfig, CheckReport, run_suite
from .mlist import (
    Cons,
    Nil,
    append,
    cons_,
    fold_list,
    from_plain,
    nil_,
    null_,
    reverse_,
    to_plain,
    total_list,
)
from .queue import (
    PairM,
    add_,
    add_i,
    and_,
    empty_,
    empty_i,
    flip_q,
    front_,
    front_i,
    implies,
    invariant_,
    is_empty_,
    is_empty_i,
    not_,
    or_,
    prop_add,
    prop_front,
    prop_is_empty,
    to_queue,
    total_queue,
)

__all__ = [name for name in dir() if not name.startswith("_")]
