"""Property deciders for explicitly listed simple games.

Each decider follows the cheapest route the input form allows and reports it
in ``Verdict.method``.  Routes tagged ``exponential-conversion`` expand the
game through all ``2**n`` coalitions and are subject to the size guard.
Negative answers carry a witness pair taken from the extremal families:
two maximal losing coalitions covering N for weakness, two disjoint minimal
winning coalitions for improperness.
"""

from __future__ import annotations

from .convert import maximal_losing_of, minimal_winning_of, winning_of
from .core import (
    CoalitionFamily,
    ExplicitGame,
    Form,
    Verdict,
    grand,
    maximize,
    minimize,
    require_valid,
    validate_form,
)
from .weighted import test_weighted

__all__ = [
    "covering_pair",
    "disjoint_pair",
    "is_decisive",
    "is_majority",
    "is_proper",
    "is_strong",
    "validate_form",
]


def covering_pair(family: CoalitionFamily) -> tuple[int, int] | None:
    """First pair (a, b), a before or equal to b, with a | b = N."""
    full = grand(family.n)
    sets = family.sets
    for i, a in enumerate(sets):
        for b in sets[i:]:
            if a | b == full:
                return a, b
    return None


def disjoint_pair(family: CoalitionFamily) -> tuple[int, int] | None:
    """First pair (a, b), a before or equal to b, with a & b = 0."""
    sets = family.sets
    for i, a in enumerate(sets):
        for b in sets[i:]:
            if a & b == 0:
                return a, b
    return None


def _containing(family: CoalitionFamily, s: int) -> int:
    return next(t for t in family if t & s == s)


def _contained(family: CoalitionFamily, s: int) -> int:
    return next(t for t in family if t & s == t)


def is_strong(game: ExplicitGame) -> Verdict:
    require_valid(game)
    full = grand(game.n)
    if game.form is Form.LOSING:
        losing = game.family
        for s in losing:
            if full ^ s in losing:
                top = maximize(losing)
                return Verdict(False, "complement-scan",
                               (_containing(top, s), _containing(top, full ^ s)))
        return Verdict(True, "complement-scan")

    if game.form is Form.MAX_LOSING:
        method = "max-losing-pair-scan"
    elif game.form is Form.WINNING:
        method = "shift-to-max-losing+pair-scan"
    else:
        method = "exponential-conversion+pair-scan"
    pair = covering_pair(maximal_losing_of(game))
    if pair is None:
        return Verdict(True, method)
    return Verdict(False, method, pair)


def is_proper(game: ExplicitGame) -> Verdict:
    require_valid(game)
    full = grand(game.n)
    if game.form is Form.WINNING:
        winning = game.family
        for s in winning:
            if full ^ s in winning:
                bottom = minimize(winning)
                return Verdict(False, "complement-scan",
                               (_contained(bottom, s), _contained(bottom, full ^ s)))
        return Verdict(True, "complement-scan")

    if game.form is Form.MIN_WINNING:
        method = "min-winning-pair-scan"
    elif game.form is Form.LOSING:
        method = "shift-to-min-winning+pair-scan"
    else:
        method = "exponential-conversion+pair-scan"
    pair = disjoint_pair(minimal_winning_of(game))
    if pair is None:
        return Verdict(True, method)
    return Verdict(False, method, pair)


def is_decisive(game: ExplicitGame) -> Verdict:
    """Proper and strong.

    A proper game has at most one winner in each of the 2**(n-1) complementary
    pairs, so it is also strong exactly when it has 2**(n-1) winning
    coalitions.  The count alone is not enough.
    """
    require_valid(game)
    if game.form is Form.WINNING:
        count, route = len(game.family), "count"
    elif game.form is Form.LOSING:
        count, route = (1 << game.n) - len(game.family), "count"
    else:
        count, route = len(winning_of(game)), "exponential-conversion+count"
    half = 1 << (game.n - 1)
    if count != half:
        return Verdict(False, route, count=count)
    proper = is_proper(game)
    method = f"{route}+{proper.method}"
    if not proper:
        return Verdict(False, method, proper.witness, count)
    return Verdict(True, method, count=count)


def is_majority(game: ExplicitGame) -> Verdict:
    """Weighted and decisive; a positive answer's witness is empty, see test_weighted."""
    decisive = is_decisive(game)
    if not decisive:
        return Verdict(False, decisive.method, decisive.witness, decisive.count)
    realization = test_weighted(game)
    method = f"{decisive.method}+exact-lp"
    return Verdict(realization is not None, method, count=decisive.count)
