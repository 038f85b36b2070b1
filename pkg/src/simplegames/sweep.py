"""Exhaustive cross-validation of the deciders against the brute-force oracle."""

from __future__ import annotations

from dataclasses import dataclass, field

from .convert import convert, dual_of, winning_of
from .core import ExplicitGame, Form, validate_form
from .lp import verify_certificate
from .oracle import (
    WEIGHT_SEARCH_MAX_BOUND,
    count_monotone_games,
    enumerate_games,
    game_predicate,
    oracle_is_weighted,
    oracle_report,
)
from .recognize import is_decisive, is_proper, is_strong
from .weighted import decide_weighted


@dataclass
class SweepReport:
    n: int
    count: int = 0
    independent_count: int = 0
    checks: int = 0
    weighted_games: int = 0
    escalations: list[str] = field(default_factory=list)
    disagreements: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements and self.count == self.independent_count


def all_forms(game: ExplicitGame) -> dict[Form, ExplicitGame]:
    return {form: convert(game, form) for form in Form}


def _check(report: SweepReport, ok: bool, what: str) -> None:
    report.checks += 1
    if not ok:
        report.disagreements.append(what)


def cross_validate(n: int, bound: int = 8) -> SweepReport:
    """Compare every decider on every form of every n-player game with the oracle."""
    report = SweepReport(n, independent_count=count_monotone_games(n))
    for base in enumerate_games(n):
        report.count += 1
        label = repr(base)
        truth = oracle_report(n, game_predicate(base))
        forms = all_forms(base)
        winning = winning_of(base)
        for form, game in forms.items():
            tag = f"{label} as {form.value}"
            _check(report, validate_form(n, form, game.family), f"{tag}: validate_form")
            _check(report, set(winning_of(game)) == set(winning), f"{tag}: winning set")
            _check(report, is_strong(game).value == truth.is_strong, f"{tag}: is_strong")
            _check(report, is_proper(game).value == truth.is_proper, f"{tag}: is_proper")
            _check(report, is_decisive(game).value == truth.is_decisive, f"{tag}: is_decisive")
            _check(report, dual_of(dual_of(game)) == game, f"{tag}: dual involution")
            for target in Form:
                if target is not form:
                    back = convert(convert(game, target), form)
                    _check(report, back == game, f"{tag}: round trip via {target.value}")

        decision = decide_weighted(forms[Form.WINNING])
        found = oracle_is_weighted(n, game_predicate(base), bound)
        b = bound
        while decision.realization is not None and found is None and b < WEIGHT_SEARCH_MAX_BOUND:
            b += 1
            report.escalations.append(f"{label}: weight bound raised to {b}")
            found = oracle_is_weighted(n, game_predicate(base), b)
        _check(report, (decision.realization is None) == (found is None), f"{label}: weighted")
        if decision.realization is not None:
            report.weighted_games += 1
            r = decision.realization
            pred = game_predicate(base)
            _check(report, all(r.wins(s) == pred(s) for s in range(1 << n)),
                   f"{label}: realization {r} reproduces the game")
            _check(report, truth.is_strong or truth.is_proper, f"{label}: weighted yet weak and improper")
        else:
            _check(report, verify_certificate(decision.lp, decision.feasibility.certificate),
                   f"{label}: infeasibility certificate")
    return report
