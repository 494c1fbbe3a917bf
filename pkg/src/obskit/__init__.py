"""obskit: exact desk-scale toolkit for containment orders, width parameters,
obstruction sets, and the universal-sequence machinery built on them."""

from .multigraph import (
    MultiGraph,
    K0,
    EnumBudget,
    BudgetExceededError,
    GraphFormatError,
    canonical_form,
    are_isomorphic,
    enum_key,
    enumerate_graphs,
)

__all__ = [
    "MultiGraph",
    "K0",
    "EnumBudget",
    "BudgetExceededError",
    "GraphFormatError",
    "canonical_form",
    "are_isomorphic",
    "enum_key",
    "enumerate_graphs",
]

__version__ = "0.1.0"
