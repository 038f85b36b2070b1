"""Conversions between the four explicit forms of a simple game.

Winning/losing sources reach the minimal winning and maximal losing forms in
polynomial time through one-player shifts of the listed coalitions.  Every
other direction can blow up exponentially and goes through a dense table of
all ``2**n`` coalitions, guarded by :func:`simplegames.core.check_enum_guard`.
"""

from __future__ import annotations

import numpy as np

from .core import (
    CoalitionFamily,
    ExplicitGame,
    Form,
    check_enum_guard,
    complement_members,
    downward_closure_table,
    grand,
    maximal_in_table,
    maximize,
    minimal_in_table,
    minimize,
    require_valid,
    upward_closure_table,
)

__all__ = [
    "convert",
    "dual_of",
    "losing_of",
    "maximal_losing_of",
    "minimal_winning_of",
    "removal_shifts",
    "winning_of",
    "winning_table",
]


def removal_shifts(family: CoalitionFamily) -> CoalitionFamily:
    """Union over players i of {S minus i : i in S, S in family}."""
    out = set()
    for s in family:
        rest = s
        while rest:
            bit = rest & -rest
            out.add(s ^ bit)
            rest ^= bit
    return CoalitionFamily(family.n, tuple(out))


def addition_shifts(family: CoalitionFamily) -> CoalitionFamily:
    """Union over players i of {S plus i : i not in S, S in family}."""
    full = grand(family.n)
    out = set()
    for s in family:
        rest = full & ~s
        while rest:
            bit = rest & -rest
            out.add(s | bit)
            rest ^= bit
    return CoalitionFamily(family.n, tuple(out))


def _difference(a: CoalitionFamily, b: CoalitionFamily) -> CoalitionFamily:
    return CoalitionFamily(a.n, tuple(s for s in a if s not in b))


def winning_table(game: ExplicitGame) -> np.ndarray:
    """Boolean table over all 2**n masks, True exactly on winning coalitions."""
    check_enum_guard(game.n, f"expanding the {game.form.value} form")
    form = game.form
    if form is Form.WINNING:
        return game.family.to_table()
    if form is Form.LOSING:
        return ~game.family.to_table()
    if form is Form.MIN_WINNING:
        return upward_closure_table(game.family)
    return ~downward_closure_table(game.family)


def minimal_winning_of(game: ExplicitGame) -> CoalitionFamily:
    require_valid(game)
    form = game.form
    if form is Form.MIN_WINNING:
        return game.family
    if form is Form.WINNING:
        return minimize(game.family)
    if form is Form.LOSING:
        # every minimal winning S equals (S minus i) plus i with S minus i losing
        return minimize(_difference(addition_shifts(game.family), game.family))
    table = winning_table(game)
    return CoalitionFamily.from_table(game.n, minimal_in_table(table, game.n))


def maximal_losing_of(game: ExplicitGame) -> CoalitionFamily:
    require_valid(game)
    form = game.form
    if form is Form.MAX_LOSING:
        return game.family
    if form is Form.LOSING:
        return maximize(game.family)
    if form is Form.WINNING:
        return maximize(_difference(removal_shifts(game.family), game.family))
    losing = ~winning_table(game)
    return CoalitionFamily.from_table(game.n, maximal_in_table(losing, game.n))


def winning_of(game: ExplicitGame) -> CoalitionFamily:
    require_valid(game)
    if game.form is Form.WINNING:
        return game.family
    return CoalitionFamily.from_table(game.n, winning_table(game))


def losing_of(game: ExplicitGame) -> CoalitionFamily:
    require_valid(game)
    if game.form is Form.LOSING:
        return game.family
    return CoalitionFamily.from_table(game.n, ~winning_table(game))


_TARGETS = {
    Form.WINNING: winning_of,
    Form.LOSING: losing_of,
    Form.MIN_WINNING: minimal_winning_of,
    Form.MAX_LOSING: maximal_losing_of,
}


def convert(game: ExplicitGame, to) -> ExplicitGame:
    """Re-express ``game`` in the explicit form ``to``."""
    to = to if isinstance(to, Form) else Form.parse(to)
    return ExplicitGame(game.n, to, _TARGETS[to](game))


_DUAL_FORM = {
    Form.WINNING: Form.LOSING,
    Form.LOSING: Form.WINNING,
    Form.MIN_WINNING: Form.MAX_LOSING,
    Form.MAX_LOSING: Form.MIN_WINNING,
}


def dual_of(game: ExplicitGame) -> ExplicitGame:
    """The dual game, where S wins iff its complement loses in ``game``.

    Complementing every listed coalition swaps winning with losing and
    minimal with maximal, so no expansion is needed.
    """
    require_valid(game)
    return ExplicitGame(game.n, _DUAL_FORM[game.form], complement_members(game.family))
