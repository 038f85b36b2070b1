"""Games given by Boolean formulas over player-indicator variables.

Formulas travel as nested JSON arrays: ``["and", f, ...]``, ``["or", f, ...]``,
``["not", f]``, ``["true"]``, ``["false"]``, and a positive integer ``i`` for
the variable of player ``i``.  An assignment is a bit mask (bit ``i - 1`` is
``x_i``) or an explicit 0/1 sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .core import (
    CoalitionFamily,
    ExplicitGame,
    Form,
    InvalidGameError,
    Verdict,
    check_enum_guard,
    grand,
    members,
    upward_closure_table,
)


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Not:
    arg: "Formula"


@dataclass(frozen=True)
class And:
    args: tuple["Formula", ...]


@dataclass(frozen=True)
class Or:
    args: tuple["Formula", ...]


@dataclass(frozen=True)
class Const:
    value: bool


Formula = Union[Var, Not, And, Or, Const]
TRUE, FALSE = Const(True), Const(False)


def parse_formula(data) -> Formula:
    if isinstance(data, bool):
        raise InvalidGameError(f"bad formula node {data!r}")
    if isinstance(data, int):
        if data < 1:
            raise InvalidGameError(f"variables are positive integers, got {data}")
        return Var(data)
    if not isinstance(data, (list, tuple)) or not data or not isinstance(data[0], str):
        raise InvalidGameError(f"bad formula node {data!r}")
    op, *args = data
    if op in ("true", "false"):
        if args:
            raise InvalidGameError(f"{op!r} takes no arguments")
        return Const(op == "true")
    if op == "not":
        if len(args) != 1:
            raise InvalidGameError("'not' takes exactly one argument")
        return Not(parse_formula(args[0]))
    if op == "and":
        return And(tuple(parse_formula(a) for a in args))
    if op == "or":
        return Or(tuple(parse_formula(a) for a in args))
    raise InvalidGameError(f"unknown operator {op!r}")


def formula_to_json(phi: Formula):
    if isinstance(phi, Var):
        return phi.index
    if isinstance(phi, Const):
        return ["true" if phi.value else "false"]
    if isinstance(phi, Not):
        return ["not", formula_to_json(phi.arg)]
    tag = "and" if isinstance(phi, And) else "or"
    return [tag, *(formula_to_json(a) for a in phi.args)]


def max_variable(phi: Formula) -> int:
    if isinstance(phi, Var):
        return phi.index
    if isinstance(phi, Const):
        return 0
    if isinstance(phi, Not):
        return max_variable(phi.arg)
    return max((max_variable(a) for a in phi.args), default=0)


def _check_arity(phi: Formula, n: int) -> None:
    if max_variable(phi) > n:
        raise InvalidGameError(f"formula mentions x{max_variable(phi)} but only {n} variables exist")


def _as_mask(x, n: int) -> int:
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        if not 0 <= x < 1 << n:
            raise InvalidGameError(f"assignment mask {x} out of range for n={n}")
        return int(x)
    bits = list(x)
    if len(bits) != n or any(b not in (0, 1) for b in bits):
        raise InvalidGameError(f"assignment must be {n} bits, got {bits}")
    return sum(1 << i for i, b in enumerate(bits) if b)


def assignment_bits(mask: int, n: int) -> list[int]:
    return [mask >> i & 1 for i in range(n)]


def _eval(phi: Formula, x: int) -> bool:
    if isinstance(phi, Var):
        return bool(x >> (phi.index - 1) & 1)
    if isinstance(phi, Const):
        return phi.value
    if isinstance(phi, Not):
        return not _eval(phi.arg, x)
    if isinstance(phi, And):
        return all(_eval(a, x) for a in phi.args)
    return any(_eval(a, x) for a in phi.args)


def evaluate(phi: Formula, x, n: int | None = None) -> int:
    """Value (0 or 1) of ``phi`` at assignment ``x``."""
    if n is None:
        if isinstance(x, (int, np.integer)):
            raise InvalidGameError("pass n when the assignment is a mask")
        n = len(x)
    _check_arity(phi, n)
    return int(_eval(phi, _as_mask(x, n)))


def truth_table(phi: Formula, n: int) -> np.ndarray:
    """Values of ``phi`` on all 2**n assignments, indexed by mask."""
    check_enum_guard(n, "truth table")
    _check_arity(phi, n)
    masks = np.arange(1 << n, dtype=np.int64)

    def go(f):
        if isinstance(f, Var):
            return (masks >> (f.index - 1) & 1).astype(bool)
        if isinstance(f, Const):
            return np.full(masks.shape, f.value)
        if isinstance(f, Not):
            return ~go(f.arg)
        parts = [go(a) for a in f.args]
        if isinstance(f, And):
            return np.logical_and.reduce(parts) if parts else np.ones(masks.shape, bool)
        return np.logical_or.reduce(parts) if parts else np.zeros(masks.shape, bool)

    return go(phi)


def dnf_of_min_winning(family: CoalitionFamily) -> Formula:
    """The monotone DNF with one conjunction of player variables per minimal winning coalition."""
    if not family.sets or 0 in family:
        raise InvalidGameError("a minimal winning family is nonempty and excludes the empty coalition")
    terms = []
    for s in family:
        vs = tuple(Var(i) for i in members(s))
        terms.append(vs[0] if len(vs) == 1 else And(vs))
    return terms[0] if len(terms) == 1 else Or(tuple(terms))


def _raise_violation(table: np.ndarray, n: int, want_increasing: bool):
    """First (x, x + e_i) where the table drops (or rises, if not want_increasing)."""
    for i in range(n):
        v = table.reshape(-1, 2, 1 << i)
        low, high = v[:, 0, :], v[:, 1, :]
        bad = (low & ~high) if want_increasing else (~low & high)
        if bad.any():
            hi_idx, lo_idx = np.argwhere(bad)[0]
            x = int(hi_idx) << (i + 1) | int(lo_idx)
            return x, x | 1 << i
    return None


def _first_comparable_pair(table: np.ndarray, n: int):
    """First (alpha, beta) with alpha < beta and both true, or None."""
    has_true_subset = upward_closure_table(CoalitionFamily.from_table(n, table))
    # strict[b]: some proper subset of b is true
    strict = np.zeros_like(table)
    for i in range(n):
        v = strict.reshape(-1, 2, 1 << i)
        v[:, 1, :] |= has_true_subset.reshape(-1, 2, 1 << i)[:, 0, :]
    bad = np.flatnonzero(table & strict)
    if not bad.size:
        return None
    beta = int(min(bad, key=lambda b: (int(b).bit_count(), int(b))))
    sub = beta
    candidates = []
    while True:
        sub = (sub - 1) & beta
        if table[sub]:
            candidates.append(sub)
        if sub == 0:
            break
    alpha = min(candidates, key=lambda a: (a.bit_count(), a))
    return alpha, beta


def validate_succinct(n: int, form, phi: Formula) -> Verdict:
    """Whether ``phi`` describes a simple game in the given form, by exhaustive evaluation."""
    form = form if isinstance(form, Form) else Form.parse(form)
    table = truth_table(phi, n)
    full = grand(n)
    if form in (Form.WINNING, Form.LOSING):
        winning = form is Form.WINNING
        pair = _raise_violation(table, n, want_increasing=winning)
        if pair is not None:
            return Verdict(False, "single-bit-monotonicity", pair)
        if bool(table[full]) != winning:
            return Verdict(False, "grand-coalition", (full,))
        if bool(table[0]) == winning:
            return Verdict(False, "empty-coalition", (0,))
        return Verdict(True, "single-bit-monotonicity")
    if not table.any():
        return Verdict(False, "nonempty")
    forbidden = 0 if form is Form.MIN_WINNING else full
    if table[forbidden]:
        return Verdict(False, "excluded-extreme", (forbidden,))
    pair = _first_comparable_pair(table, n)
    if pair is not None:
        return Verdict(False, "antichain", pair)
    return Verdict(True, "antichain")


def explicit_from_succinct(n: int, phi: Formula, form) -> ExplicitGame:
    form = form if isinstance(form, Form) else Form.parse(form)
    verdict = validate_succinct(n, form, phi)
    if not verdict:
        raise InvalidGameError(f"formula is not a valid {form.value} form ({verdict.method})")
    return ExplicitGame(n, form, CoalitionFamily.from_table(n, truth_table(phi, n)))


def exactly_one(indices: Sequence[int]) -> Formula:
    terms = []
    for i in indices:
        terms.append(And((Var(i), *(Not(Var(j)) for j in indices if j != i))))
    return Or(tuple(terms))
