"""Hardness reductions used as instance generators.

Each reduction maps an instance of a classical NP-complete problem to a game
whose property (weak, improper, non-majority, non-minimal formula) holds
exactly when the source instance is a YES instance.  The tests and the CLI
use them to produce instances with a known answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Literal

import numpy as np

from .core import (
    CoalitionFamily,
    ExplicitGame,
    Form,
    InvalidGameError,
    complement_members,
    minimize,
    require_valid,
)
from .succinct import And, Formula, Not, Or, Var, evaluate, exactly_one, max_variable
from .weighted import WeightedRealization

Variant = Literal["strong", "proper", "majority"]
VARIANTS = ("strong", "proper", "majority")

# f(x) for odd totals: a decisive weighted game, i.e. YES for all three checks
ODD_TOTAL_IMAGE = WeightedRealization(2, (1, 1, 1))


@dataclass(frozen=True)
class PartitionInstance:
    x: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(int(v) for v in self.x))
        if not self.x:
            raise InvalidGameError("a PARTITION instance needs at least one value")
        if min(self.x) < 0:
            raise InvalidGameError(f"values must be nonnegative: {self.x}")


@dataclass(frozen=True)
class SetSplittingInstance:
    ground: int
    collection: CoalitionFamily

    def __post_init__(self):
        if self.collection.n != self.ground:
            raise InvalidGameError("collection is over a different ground set")
        if 0 in self.collection:
            raise InvalidGameError("set splitting members must be nonempty")


def partition_reduction(inst: PartitionInstance, variant: Variant) -> WeightedRealization:
    """Quota s + 1 for the strong variant and s otherwise, where s is half the total."""
    if variant not in VARIANTS:
        raise InvalidGameError(f"variant must be one of {VARIANTS}, got {variant!r}")
    total = sum(inst.x)
    if total == 0:
        raise InvalidGameError("all-zero values admit no realization with a positive quota")
    if total % 2:
        return ODD_TOTAL_IMAGE
    half = total // 2
    quota = half + 1 if variant == "strong" else half
    return WeightedRealization(quota, inst.x)


def set_splitting_reduction(inst: SetSplittingInstance) -> ExplicitGame:
    """A splitting exists iff the resulting minimal winning game is weak."""
    if not len(inst.collection):
        raise InvalidGameError("empty collection gives no minimal winning coalition")
    return require_valid(ExplicitGame(inst.ground, Form.MIN_WINNING, minimize(inst.collection)))


def strong_to_proper_reduction(game: ExplicitGame) -> ExplicitGame:
    """The dual in maximal losing form: ``game`` is weak iff the result is improper."""
    if game.form is not Form.MIN_WINNING:
        raise InvalidGameError("strong_to_proper_reduction expects a minimal winning game")
    require_valid(game)
    return ExplicitGame(game.n, Form.MAX_LOSING, complement_members(game.family))


def sat_reduction(phi: Formula, n: int) -> Formula:
    """Formula on n + 1 variables that is true on a comparable pair iff ``phi`` is satisfiable.

    With the extra variable a = x_{n+1}: a = 1 copies ``phi`` on the first n
    variables; a = 0 is true exactly on the unit vectors.  Unit vectors are
    pairwise incomparable, and any satisfying assignment of ``phi`` (never
    all-zero) lies above one of them once a is raised.
    """
    if max_variable(phi) > n:
        raise InvalidGameError(f"formula mentions x{max_variable(phi)} but n = {n}")
    if evaluate(phi, 0, n):
        raise InvalidGameError("sat_reduction requires phi(0, ..., 0) = 0")
    a = Var(n + 1)
    return Or((And((a, phi)), And((Not(a), exactly_one(range(1, n + 1))))))


# -- instance families and seeded generators ---------------------------------


def lemma5_game(k: int) -> ExplicitGame:
    """Pairs {2i-1, 2i}, i = 1..k, as a minimal winning game on 2k players."""
    if k < 1:
        raise InvalidGameError("k must be positive")
    return ExplicitGame.from_lists(2 * k, Form.MIN_WINNING, [[2 * i - 1, 2 * i] for i in range(1, k + 1)])


def random_partition_instance(rng: np.random.Generator, max_n: int = 15,
                              max_value: int = 50) -> PartitionInstance:
    while True:
        n = int(rng.integers(1, max_n + 1))
        x = tuple(int(v) for v in rng.integers(0, max_value + 1, size=n))
        if sum(x):
            return PartitionInstance(x)


def random_set_splitting_instance(rng: np.random.Generator, max_ground: int = 12,
                                  max_sets: int = 8) -> SetSplittingInstance:
    ground = int(rng.integers(2, max_ground + 1))
    width = min(ground, 4)
    available = sum(comb(ground, k) for k in range(1, width + 1))
    count = int(rng.integers(1, min(max_sets, available) + 1))
    sets = set()
    while len(sets) < count:
        size = int(rng.integers(1, width + 1))
        sets.add(sum(1 << int(i) for i in rng.choice(ground, size=size, replace=False)))
    return SetSplittingInstance(ground, CoalitionFamily(ground, tuple(sets)))


def random_cnf(rng: np.random.Generator, n: int, clauses: int, width: int = 3) -> Formula:
    """Random CNF conjoined with (x_1 or ... or x_n), so it is false on all-zero."""
    out = [Or(tuple(Var(i) for i in range(1, n + 1)))]
    for _ in range(clauses):
        picked = rng.choice(n, size=min(width, n), replace=False)
        lits = tuple(Var(int(i) + 1) if rng.random() < 0.5 else Not(Var(int(i) + 1)) for i in picked)
        out.append(Or(lits))
    return And(tuple(out))
