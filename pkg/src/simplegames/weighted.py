"""Weighted and homogeneous games.

Explicit games are tested for weightedness by an exact linear program over
the minimal winning and maximal losing coalitions.  Games given directly by
an integer realization ``(q; w)`` are tested for strongness, properness and
homogeneity of the realization by subset-sum reachability over the weights,
which is pseudo-polynomial in ``w(N)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .convert import maximal_losing_of, minimal_winning_of
from .core import (
    CoalitionFamily,
    ExplicitGame,
    Form,
    InvalidGameError,
    ResourceLimitError,
    SimpleGameError,
    Verdict,
    check_enum_guard,
    grand,
    members,
    minimal_in_table,
)
from .lp import FeasibilityResult, RationalLP, lp_feasible

DP_MAX_TOTAL = 10**6


@dataclass(frozen=True)
class WeightedRealization:
    """Integer quota and nonnegative integer weights, ``0 < q <= w(N)``."""

    quota: int
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        for v in (self.quota, *self.weights):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                raise InvalidGameError(f"quota and weights must be integers, got {v!r}")
        object.__setattr__(self, "quota", int(self.quota))
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if not self.weights:
            raise InvalidGameError("a realization needs at least one player")
        if min(self.weights) < 0:
            raise InvalidGameError(f"weights must be nonnegative: {self.weights}")
        if not 0 < self.quota <= sum(self.weights):
            raise InvalidGameError(f"quota {self.quota} outside (0, {sum(self.weights)}]")

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def total(self) -> int:
        return sum(self.weights)

    def weight(self, mask: int) -> int:
        return sum(w for i, w in enumerate(self.weights) if mask >> i & 1)

    def wins(self, mask: int) -> bool:
        return self.weight(mask) >= self.quota

    def scaled(self, factor: int) -> "WeightedRealization":
        return WeightedRealization(self.quota * factor, tuple(w * factor for w in self.weights))

    def __str__(self) -> str:
        return f"({self.quota}; {', '.join(map(str, self.weights))})"


# -- explicit games: exact LP ------------------------------------------------


def weighted_lp(n: int, min_winning: CoalitionFamily, max_losing: CoalitionFamily,
                homogeneous: bool = False) -> RationalLP:
    """Weights w_1..w_n and quota q, all nonnegative.

    Minimal winning coalitions reach the quota (exactly, if ``homogeneous``);
    maximal losing ones stay at least one unit below it.  A margin of one
    loses nothing because the strict system is invariant under scaling.
    """
    variables = [f"w{i}" for i in range(1, n + 1)] + ["q"]
    rows = []
    for s in min_winning:
        coeffs = {f"w{i}": 1 for i in members(s)}
        coeffs["q"] = -1
        rel = "==" if homogeneous else ">="
        rows.append((coeffs, rel, 0, f"winning {list(members(s))}: w(S) {rel} q"))
    for s in max_losing:
        coeffs = {f"w{i}": 1 for i in members(s)}
        coeffs["q"] = -1
        rows.append((coeffs, "<=", -1, f"losing {list(members(s))}: w(S) <= q - 1"))
    rows.append(({"q": 1}, ">=", 1, "q >= 1"))
    return RationalLP.build(variables, rows)


def _integer_point(point) -> tuple[int, ...]:
    scale = 1
    for x in point:
        scale = scale * x.denominator // gcd(scale, x.denominator)
    values = [int(x * scale) for x in point]
    g = 0
    for v in values:
        g = gcd(g, v)
    return tuple(v // g for v in values) if g > 1 else tuple(values)


def realizes(r: WeightedRealization, min_winning: CoalitionFamily, max_losing: CoalitionFamily,
             homogeneous: bool = False) -> bool:
    """Check ``r`` against the extremal families; with nonnegative weights this settles every coalition."""
    for s in min_winning:
        w = r.weight(s)
        if w < r.quota or (homogeneous and w != r.quota):
            return False
    return all(r.weight(s) < r.quota for s in max_losing)


@dataclass(frozen=True)
class WeightednessResult:
    realization: WeightedRealization | None
    lp: RationalLP
    feasibility: FeasibilityResult
    method: str


def decide_weighted(game: ExplicitGame, homogeneous: bool = False) -> WeightednessResult:
    if game.form in (Form.WINNING, Form.LOSING):
        method = "shift-to-extremal-forms+exact-lp"
    else:
        method = "exponential-conversion+exact-lp"
    wm = minimal_winning_of(game)
    lm = maximal_losing_of(game)
    lp = weighted_lp(game.n, wm, lm, homogeneous)
    result = lp_feasible(lp)
    if not result.feasible:
        return WeightednessResult(None, lp, result, method)
    *weights, quota = _integer_point(result.solution)
    realization = WeightedRealization(quota, tuple(weights))
    if not realizes(realization, wm, lm, homogeneous):
        raise SimpleGameError(f"LP solution {realization} does not realize the game")
    return WeightednessResult(realization, lp, result, method)


def test_weighted(game: ExplicitGame) -> WeightedRealization | None:
    """An integer realization of ``game``, or None if it is not weighted."""
    return decide_weighted(game).realization


def test_homogeneous_explicit(game: ExplicitGame) -> WeightedRealization | None:
    """A realization in which every minimal winning coalition weighs exactly q, or None."""
    return decide_weighted(game, homogeneous=True).realization


# Test collection would otherwise pick these names up when imported into a test module.
test_weighted.__test__ = False
test_homogeneous_explicit.__test__ = False


# -- integer realizations ----------------------------------------------------


def coalition_weights(r: WeightedRealization) -> np.ndarray:
    """Weight of every coalition, indexed by mask."""
    check_enum_guard(r.n, "coalition weight table")
    sums = np.zeros(1, dtype=np.int64)
    for w in r.weights:
        sums = np.concatenate([sums, sums + w])
    return sums


def min_winning_of_realization(r: WeightedRealization) -> CoalitionFamily:
    winning = coalition_weights(r) >= r.quota
    return CoalitionFamily.from_table(r.n, minimal_in_table(winning, r.n))


def _reach_tables(weights) -> list[int]:
    """tables[k] has bit s set iff some subset of weights[:k] sums to s."""
    total = sum(weights)
    if total > DP_MAX_TOTAL:
        raise ResourceLimitError(f"w(N) = {total} exceeds the subset-sum limit {DP_MAX_TOTAL}")
    tables = [1]
    for w in weights:
        tables.append(tables[-1] | tables[-1] << w)
    return tables


def _first_in_window(reach: int, lo: int, hi: int) -> int | None:
    lo = max(lo, 0)
    if hi < lo:
        return None
    window = reach >> lo & ((1 << (hi - lo + 1)) - 1)
    if not window:
        return None
    return lo + (window & -window).bit_length() - 1


def _pick(weights, tables, target: int) -> list[int]:
    """Indices into ``weights`` of a subset summing to ``target``."""
    chosen = []
    for k in range(len(weights), 0, -1):
        if not tables[k - 1] >> target & 1:
            chosen.append(k - 1)
            target -= weights[k - 1]
    assert target == 0
    return chosen


def _mask(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def _split_with_sum_in(r: WeightedRealization, lo: int, hi: int) -> int | None:
    tables = _reach_tables(r.weights)
    s = _first_in_window(tables[-1], lo, hi)
    if s is None:
        return None
    return _mask(_pick(r.weights, tables, s))


def realization_is_strong(r: WeightedRealization) -> Verdict:
    # weak iff some S has w(S) <= q - 1 and w(N) - w(S) <= q - 1
    s = _split_with_sum_in(r, r.total - r.quota + 1, r.quota - 1)
    if s is None:
        return Verdict(True, "subset-sum-dp")
    return Verdict(False, "subset-sum-dp", (s, grand(r.n) ^ s))


def realization_is_proper(r: WeightedRealization) -> Verdict:
    # improper iff some S has w(S) >= q and w(N) - w(S) >= q
    s = _split_with_sum_in(r, r.quota, r.total - r.quota)
    if s is None:
        return Verdict(True, "subset-sum-dp")
    return Verdict(False, "subset-sum-dp", (s, grand(r.n) ^ s))


def realization_is_majority(r: WeightedRealization) -> Verdict:
    strong = realization_is_strong(r)
    if not strong:
        return strong
    return realization_is_proper(r)


def is_homogeneous_realization(r: WeightedRealization) -> Verdict:
    """Whether every minimal winning coalition of ``(q; w)`` weighs exactly q.

    A winning S is minimal iff dropping its lightest member makes it lose.
    For each anchor player j, taken as that lightest member (ties go to the
    smallest index), look for co-members heavier than j, or equally heavy
    with a larger index, whose weights s satisfy s + w_j >= q + 1 and
    s <= q - 1.  Such an S is minimal winning and too heavy.
    """
    q, weights = r.quota, r.weights
    order = sorted(range(r.n), key=lambda i: (weights[i], i))
    position = {p: k for k, p in enumerate(order)}
    ordered = [weights[p] for p in order]
    if r.total > DP_MAX_TOTAL:
        raise ResourceLimitError(f"w(N) = {r.total} exceeds the subset-sum limit {DP_MAX_TOTAL}")
    # suffix[k]: sums reachable with players order[k:]
    suffix = [0] * (r.n + 1)
    suffix[r.n] = 1
    for k in range(r.n - 1, -1, -1):
        suffix[k] = suffix[k + 1] | suffix[k + 1] << ordered[k]
    for j in range(r.n):
        k = position[j]
        s = _first_in_window(suffix[k + 1], q + 1 - weights[j], q - 1)
        if s is None:
            continue
        picked = [j]
        for t in range(k + 1, r.n):
            if not suffix[t + 1] >> s & 1:
                picked.append(order[t])
                s -= ordered[t]
        assert s == 0
        return Verdict(False, "anchored-subset-sum-dp", (_mask(picked),))
    return Verdict(True, "anchored-subset-sum-dp")
