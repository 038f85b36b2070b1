"""Brute-force reference answers.

Everything here quantifies over all coalitions straight from the
definitions and depends on nothing but the coalition types in ``core``.
The rest of the package is cross-checked against these functions, so keep
them naive.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from .core import CoalitionFamily, ExplicitGame, Form, ResourceLimitError

ORACLE_MAX_N = 16
WEIGHT_SEARCH_MAX_N = 5
WEIGHT_SEARCH_MAX_BOUND = 10
ENUMERATE_MAX_N = 4

Predicate = Callable[[int], bool]


@dataclass(frozen=True)
class PropertyReport:
    is_simple: bool
    is_strong: bool
    is_proper: bool
    is_decisive: bool
    winning_count: int


def _guard(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise ResourceLimitError(f"{what} is limited to n <= {limit}, got n = {n}")


def oracle_report(n: int, winning: Predicate) -> PropertyReport:
    _guard(n, ORACLE_MAX_N, "oracle_report")
    full = (1 << n) - 1
    wins = [bool(winning(s)) for s in range(1 << n)]
    monotone = all(
        wins[r]
        for s in range(1 << n) if wins[s]
        for r in range(1 << n) if r & s == s
    ) if n <= 10 else all(
        wins[s | 1 << i] for s in range(1 << n) if wins[s] for i in range(n)
    )
    simple = wins[full] and not wins[0] and monotone
    strong = all(wins[full ^ s] for s in range(1 << n) if not wins[s])
    proper = all(not wins[full ^ s] for s in range(1 << n) if wins[s])
    return PropertyReport(simple, strong, proper, strong and proper, sum(wins))


def game_predicate(game: ExplicitGame) -> Predicate:
    """Membership test for W read directly off any explicit form."""
    fam = set(game.family.sets)
    if game.form is Form.WINNING:
        return lambda s: s in fam
    if game.form is Form.LOSING:
        return lambda s: s not in fam
    if game.form is Form.MIN_WINNING:
        return lambda s: any(t & s == t for t in fam)
    return lambda s: not any(s & t == s for t in fam)


def oracle_is_weighted(n: int, winning: Predicate, bound: int = 8):
    """First integer realization, in lexicographic order of (w_1..w_n, q), with weights <= bound.

    Returns a :class:`simplegames.weighted.WeightedRealization` or None.
    """
    from .weighted import WeightedRealization  # result type only

    _guard(n, WEIGHT_SEARCH_MAX_N, "oracle_is_weighted")
    if bound > WEIGHT_SEARCH_MAX_BOUND or bound < 1:
        raise ResourceLimitError(f"weight bound must be in 1..{WEIGHT_SEARCH_MAX_BOUND}, got {bound}")
    masks = np.arange(1 << n)
    incidence = np.array([(masks >> i) & 1 for i in range(n)], dtype=np.int64)
    wins = np.array([bool(winning(int(s))) for s in masks])
    vectors = np.array(list(itertools.product(range(bound + 1), repeat=n)), dtype=np.int64)
    sums = vectors @ incidence
    big = np.iinfo(np.int64).max
    min_win = np.where(wins, sums, big).min(axis=1)
    max_lose = np.where(~wins, sums, -1).max(axis=1)
    # the smallest valid quota for a weight vector is max(max_lose + 1, 1)
    quota = np.maximum(max_lose + 1, 1)
    ok = (quota <= min_win) & (quota <= sums[:, -1])
    hits = np.flatnonzero(ok)
    if not hits.size:
        return None
    k = hits[0]
    return WeightedRealization(int(quota[k]), tuple(int(x) for x in vectors[k]))


def _nonempty_subsets(n: int) -> list[int]:
    return sorted(range(1, 1 << n), key=lambda s: (bin(s).count("1"), s))


def enumerate_games(n: int) -> Iterator[ExplicitGame]:
    """Every simple game on n players, once each, as its minimal winning family."""
    _guard(n, ENUMERATE_MAX_N, "enumerate_games")
    candidates = _nonempty_subsets(n)

    def extend(start: int, chosen: list[int]):
        if chosen:
            yield ExplicitGame(n, Form.MIN_WINNING, CoalitionFamily(n, tuple(chosen)))
        for k in range(start, len(candidates)):
            s = candidates[k]
            if all(t & s != t and t & s != s for t in chosen):
                chosen.append(s)
                yield from extend(k + 1, chosen)
                chosen.pop()

    yield from extend(0, [])


def count_monotone_games(n: int) -> int:
    """Number of simple games on n players counted as monotone Boolean functions.

    Independent of :func:`enumerate_games`: scans every Boolean function on
    n variables and keeps the nonconstant monotone ones.
    """
    _guard(n, ENUMERATE_MAX_N, "count_monotone_games")
    size = 1 << n
    count = 0
    for table in range(1 << size):
        if table in (0, (1 << size) - 1):
            continue
        if all(table >> (s | 1 << i) & 1 for s in range(size) if table >> s & 1 for i in range(n)):
            count += 1
    return count


def oracle_min_winning(n: int, winning: Predicate) -> set[int]:
    wins = [bool(winning(s)) for s in range(1 << n)]
    return {s for s in range(1 << n)
            if wins[s] and all(not wins[s & ~(1 << i)] for i in range(n) if s >> i & 1)}


def oracle_homogeneous_realization(quota: int, weights) -> bool:
    """Every minimal winning coalition of (quota; weights) weighs exactly quota."""
    n = len(weights)
    _guard(n, ORACLE_MAX_N, "oracle_homogeneous_realization")

    def weight(s):
        return sum(w for i, w in enumerate(weights) if s >> i & 1)

    return all(weight(s) == quota for s in oracle_min_winning(n, lambda s: weight(s) >= quota))


def partition_exists(values) -> bool:
    """Whether the values split into two parts of equal sum."""
    total = sum(values)
    if total % 2:
        return False
    reachable = {0}
    for v in values:
        reachable |= {r + v for r in reachable}
    return total // 2 in reachable


def splitting_exists(n: int, collection) -> bool:
    """Whether some P leaves no member of ``collection`` inside P or inside N minus P."""
    _guard(n, ORACLE_MAX_N, "splitting_exists")
    full = (1 << n) - 1
    sets = list(collection)
    for p in range(1 << n):
        rest = full ^ p
        if all(s & p != s and s & rest != s for s in sets):
            return True
    return False
