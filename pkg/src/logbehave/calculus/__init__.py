"""Calculus-method checks: coefficient conditions, bound propagation and base prefixes."""

from .checks import (
    check_bounds_invariant,
    check_decomposition,
    check_thm41,
    check_thm42,
    check_threeterm,
    decomposition_matches,
    from_recurrence,
    gegenbauer_decomposition,
    gegenbauer_deriv_decomposition,
    laguerre_decomposition,
    standard_decomposition,
    thm42_key,
    threeterm_key,
    wronskian_conditions,
    wronskians,
)
from .presets import BUNDLED, NEGATIVE_CONTROLS, run_bundled
from .two_index import check_two_index, eulerian_reduced_identity, free_term, y_wronskians
from .types import (
    DECREASING,
    INCREASING,
    CalculusConditionSet,
    CalculusError,
    CalculusReport,
    DecompTerm,
    GridPoint,
    TermDecomposition,
    TwoIndexReport,
)

__all__ = [
    "check_bounds_invariant", "check_decomposition", "check_thm41", "check_thm42", "check_threeterm",
    "decomposition_matches", "from_recurrence", "gegenbauer_decomposition",
    "gegenbauer_deriv_decomposition", "laguerre_decomposition", "standard_decomposition",
    "thm42_key", "threeterm_key", "wronskian_conditions", "wronskians",
    "BUNDLED", "NEGATIVE_CONTROLS", "run_bundled",
    "check_two_index", "eulerian_reduced_identity", "free_term", "y_wronskians",
    "DECREASING", "INCREASING", "CalculusConditionSet", "CalculusError", "CalculusReport",
    "DecompTerm", "GridPoint", "TermDecomposition", "TwoIndexReport",
]
