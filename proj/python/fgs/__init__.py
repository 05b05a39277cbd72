"""Free factors around finitely generated subgroups of free groups."""

from fgs._core import (
    InputError,
    BudgetExceeded,
    whitehead_graph,
    reduce,
    closure_basis,
    is_subbasis,
    core,
    boundary,
    cuts,
    explore,
    sandwich,
    run,
)

__all__ = [
    "InputError",
    "BudgetExceeded",
    "whitehead_graph",
    "reduce",
    "closure_basis",
    "is_subbasis",
    "core",
    "boundary",
    "cuts",
    "explore",
    "sandwich",
    "run",
]
