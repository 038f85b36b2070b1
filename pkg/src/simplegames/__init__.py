"""Simple games in explicit and succinct forms: conversions and property tests."""

from .convert import (
    dual_of,
    losing_of,
    maximal_losing_of,
    minimal_winning_of,
    winning_of,
)
from .core import (
    CoalitionFamily,
    ExplicitGame,
    Form,
    InvalidGameError,
    ResourceLimitError,
    SimpleGameError,
    Verdict,
    coalition,
    complement_members,
    is_downward_closed,
    is_upward_closed,
    maximize,
    members,
    minimize,
    validate_form,
)
from .lp import FeasibilityResult, RationalLP, lp_feasible, verify_certificate
from .recognize import is_decisive, is_majority, is_proper, is_strong
from .weighted import (
    WeightedRealization,
    is_homogeneous_realization,
    min_winning_of_realization,
    realization_is_majority,
    realization_is_proper,
    realization_is_strong,
    test_homogeneous_explicit,
    test_weighted,
)

__version__ = "0.1.0"

__all__ = [
    "FeasibilityResult",
    "RationalLP",
    "is_decisive",
    "is_majority",
    "is_proper",
    "is_strong",
    "lp_feasible",
    "verify_certificate",
    "CoalitionFamily",
    "ExplicitGame",
    "Form",
    "InvalidGameError",
    "ResourceLimitError",
    "SimpleGameError",
    "Verdict",
    "WeightedRealization",
    "coalition",
    "complement_members",
    "dual_of",
    "is_downward_closed",
    "is_homogeneous_realization",
    "is_upward_closed",
    "losing_of",
    "maximal_losing_of",
    "maximize",
    "members",
    "min_winning_of_realization",
    "minimal_winning_of",
    "minimize",
    "realization_is_majority",
    "realization_is_proper",
    "realization_is_strong",
    "test_homogeneous_explicit",
    "test_weighted",
    "validate_form",
    "winning_of",
]
