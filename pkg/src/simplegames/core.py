"""Coalitions, coalition families and explicit games.

A coalition over players ``1..n`` is stored as a Python ``int`` bit mask where
player ``i`` occupies bit ``i - 1``.  Families are immutable, duplicate-free
and kept in canonical order (cardinality first, then numeric mask value), so
two families describing the same sets compare equal.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_PLAYERS = 64
DEFAULT_MAX_ENUM_N = 24
ENUM_ENV_VAR = "SG_MAX_ENUM_N"

Coalition = int


class SimpleGameError(Exception):
    """Base class for all errors raised by this package."""


class InvalidGameError(SimpleGameError, ValueError):
    """Input does not describe a valid family, game or realization."""


class ResourceLimitError(SimpleGameError):
    """An exponential path was requested beyond the configured size guard."""


def max_enum_n() -> int:
    raw = os.environ.get(ENUM_ENV_VAR)
    if raw is None:
        return DEFAULT_MAX_ENUM_N
    try:
        return int(raw)
    except ValueError:
        raise InvalidGameError(f"{ENUM_ENV_VAR} must be an integer, got {raw!r}") from None


def check_enum_guard(n: int, what: str = "enumeration") -> None:
    """Raise ResourceLimitError if a 2**n enumeration is not allowed."""
    limit = max_enum_n()
    if n > limit:
        raise ResourceLimitError(
            f"{what} needs 2^{n} coalitions; guard is n <= {limit} (set {ENUM_ENV_VAR})"
        )


# -- single coalitions -------------------------------------------------------


def coalition(players: Iterable[int]) -> Coalition:
    mask = 0
    for p in players:
        if isinstance(p, bool) or not isinstance(p, (int, np.integer)) or p < 1:
            raise InvalidGameError(f"player indices are positive integers, got {p!r}")
        mask |= 1 << (int(p) - 1)
    return mask


def members(mask: Coalition) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def grand(n: int) -> Coalition:
    return (1 << n) - 1


def canonical_key(mask: Coalition) -> tuple[int, int]:
    return (mask.bit_count(), mask)


# -- families ----------------------------------------------------------------


@dataclass(frozen=True)
class CoalitionFamily:
    """Finite family of coalitions over players ``1..n`` in canonical order."""

    n: int
    sets: tuple[Coalition, ...] = ()

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or not 1 <= self.n <= MAX_PLAYERS:
            raise InvalidGameError(f"player count must be in 1..{MAX_PLAYERS}, got {self.n!r}")
        limit = 1 << self.n
        unique = set()
        for s in self.sets:
            s = int(s)
            if not 0 <= s < limit:
                raise InvalidGameError(f"coalition mask {s:#x} out of range for n={self.n}")
            unique.add(s)
        object.__setattr__(self, "sets", tuple(sorted(unique, key=canonical_key)))

    @classmethod
    def from_lists(cls, n: int, coalitions: Iterable[Sequence[int]]) -> "CoalitionFamily":
        sets = []
        for c in coalitions:
            mask = coalition(c)
            if mask >> n:
                raise InvalidGameError(f"coalition {list(c)} mentions a player outside 1..{n}")
            sets.append(mask)
        return cls(n, tuple(sets))

    @classmethod
    def from_table(cls, n: int, table: np.ndarray) -> "CoalitionFamily":
        """Family of all masks whose entry in a length-2**n boolean table is set."""
        return cls(n, tuple(int(s) for s in np.flatnonzero(table)))

    @cached_property
    def _lookup(self) -> frozenset:
        return frozenset(self.sets)

    def __contains__(self, mask) -> bool:
        return mask in self._lookup

    def __iter__(self) -> Iterator[Coalition]:
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def to_lists(self) -> list[list[int]]:
        return [list(members(s)) for s in self.sets]

    def to_table(self) -> np.ndarray:
        table = np.zeros(1 << self.n, dtype=bool)
        if self.sets:
            table[np.fromiter(self.sets, dtype=np.int64, count=len(self.sets))] = True
        return table

    def __repr__(self) -> str:
        return f"CoalitionFamily(n={self.n}, {self.to_lists()})"


class Form(enum.Enum):
    WINNING = "winning"
    LOSING = "losing"
    MIN_WINNING = "min_winning"
    MAX_LOSING = "max_losing"

    @property
    def short(self) -> str:
        return _SHORT[self]

    @classmethod
    def parse(cls, text: str) -> "Form":
        text = text.strip().lower()
        for form in cls:
            if text in (form.value, form.short):
                return form
        raise InvalidGameError(f"unknown form {text!r}")


_SHORT = {Form.WINNING: "w", Form.LOSING: "l", Form.MIN_WINNING: "wm", Form.MAX_LOSING: "lm"}


@dataclass(frozen=True)
class ExplicitGame:
    """A simple game given by one of the four explicit coalition listings."""

    n: int
    form: Form
    family: CoalitionFamily = field(repr=False)

    def __post_init__(self):
        if not isinstance(self.form, Form):
            object.__setattr__(self, "form", Form.parse(self.form))
        if self.family.n != self.n:
            raise InvalidGameError(f"family is over {self.family.n} players, game over {self.n}")

    @classmethod
    def from_lists(cls, n: int, form, coalitions) -> "ExplicitGame":
        return cls(n, form if isinstance(form, Form) else Form.parse(form),
                   CoalitionFamily.from_lists(n, coalitions))

    def __repr__(self) -> str:
        return f"ExplicitGame(n={self.n}, form={self.form.value}, {self.family.to_lists()})"


# -- closure tests and extremal members --------------------------------------


def is_upward_closed(family: CoalitionFamily) -> bool:
    full = grand(family.n)
    for s in family:
        rest = full & ~s
        while rest:
            bit = rest & -rest
            if s | bit not in family:
                return False
            rest ^= bit
    return True


def is_downward_closed(family: CoalitionFamily) -> bool:
    for s in family:
        rest = s
        while rest:
            bit = rest & -rest
            if s ^ bit not in family:
                return False
            rest ^= bit
    return True


def is_antichain(family: CoalitionFamily) -> bool:
    sets = family.sets
    for i, a in enumerate(sets):
        for b in sets[i + 1:]:
            if a & b == a or a & b == b:
                return False
    return True


def minimize(family: CoalitionFamily) -> CoalitionFamily:
    """The inclusion-minimal members of ``family``."""
    kept: list[int] = []
    # canonical order visits every subset of S before S itself
    for s in family:
        if not any(t & s == t for t in kept):
            kept.append(s)
    return CoalitionFamily(family.n, tuple(kept))


def maximize(family: CoalitionFamily) -> CoalitionFamily:
    """The inclusion-maximal members of ``family``."""
    kept: list[int] = []
    for s in reversed(family.sets):
        if not any(t & s == s for t in kept):
            kept.append(s)
    return CoalitionFamily(family.n, tuple(kept))


def complement_members(family: CoalitionFamily) -> CoalitionFamily:
    full = grand(family.n)
    return CoalitionFamily(family.n, tuple(full ^ s for s in family))


# -- dense 2**n tables used by the exponential conversion paths --------------


def _split(table: np.ndarray, i: int) -> np.ndarray:
    # view indexed [high bits, bit i, low bits]
    return table.reshape(-1, 2, 1 << i)


def upward_closure_table(family: CoalitionFamily) -> np.ndarray:
    check_enum_guard(family.n, "upward closure")
    table = family.to_table()
    for i in range(family.n):
        v = _split(table, i)
        v[:, 1, :] |= v[:, 0, :]
    return table


def downward_closure_table(family: CoalitionFamily) -> np.ndarray:
    check_enum_guard(family.n, "downward closure")
    table = family.to_table()
    for i in range(family.n):
        v = _split(table, i)
        v[:, 0, :] |= v[:, 1, :]
    return table


def minimal_in_table(table: np.ndarray, n: int) -> np.ndarray:
    """Entries of an upward-closed table none of whose one-smaller subsets are set."""
    out = table.copy()
    for i in range(n):
        _split(out, i)[:, 1, :] &= ~_split(table, i)[:, 0, :]
    return out


def maximal_in_table(table: np.ndarray, n: int) -> np.ndarray:
    """Entries of a downward-closed table none of whose one-larger supersets are set."""
    out = table.copy()
    for i in range(n):
        _split(out, i)[:, 0, :] &= ~_split(table, i)[:, 1, :]
    return out


# -- form validation -----------------------------------------------------------


def validate_form(n: int, form: Form, family: CoalitionFamily) -> bool:
    """Whether ``family`` is a correct explicit listing of some simple game."""
    if family.n != n:
        return False
    form = form if isinstance(form, Form) else Form.parse(form)
    full = grand(n)
    if form is Form.WINNING:
        return full in family and 0 not in family and is_upward_closed(family)
    if form is Form.LOSING:
        return 0 in family and full not in family and is_downward_closed(family)
    if form is Form.MIN_WINNING:
        return len(family) > 0 and 0 not in family and is_antichain(family)
    return len(family) > 0 and full not in family and is_antichain(family)


def require_valid(game: ExplicitGame) -> ExplicitGame:
    if not validate_form(game.n, game.form, game.family):
        raise InvalidGameError(f"not a valid {game.form.value} listing of a simple game: {game!r}")
    return game


@dataclass(frozen=True)
class Verdict:
    """Answer of a property check plus the evidence behind it.

    ``witness`` holds one or two coalition masks (or assignment masks for
    formula checks) that certify the answer; ``count`` is used when the
    evidence is a cardinality.  ``method`` names the decision path taken.
    """

    value: bool
    method: str
    witness: tuple[Coalition, ...] = ()
    count: int | None = None

    def __bool__(self) -> bool:
        return self.value
