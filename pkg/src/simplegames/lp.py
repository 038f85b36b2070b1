"""Exact rational feasibility for small linear systems.

All variables are nonnegative.  Feasibility is decided by a phase-one simplex
over :class:`fractions.Fraction` with Bland's rule, so every answer is exact:
a feasible verdict carries a point satisfying every constraint, an infeasible
verdict carries Farkas multipliers that can be checked independently with
:func:`verify_certificate`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Mapping, Sequence

from .core import InvalidGameError, SimpleGameError

SENSES = ("<=", ">=", "==")


class MalformedSystemError(InvalidGameError):
    pass


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple[Fraction, ...]
    sense: str
    rhs: Fraction
    label: str = ""

    def holds(self, point: Sequence[Fraction]) -> bool:
        lhs = sum((c * x for c, x in zip(self.coeffs, point)), Fraction(0))
        if self.sense == "<=":
            return lhs <= self.rhs
        if self.sense == ">=":
            return lhs >= self.rhs
        return lhs == self.rhs


@dataclass(frozen=True)
class RationalLP:
    """A conjunction of linear constraints over nonnegative variables."""

    variables: tuple[str, ...]
    constraints: tuple[Constraint, ...] = ()

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise MalformedSystemError("duplicate variable names")
        width = len(self.variables)
        for c in self.constraints:
            if len(c.coeffs) != width:
                raise MalformedSystemError(f"constraint {c.label!r} has {len(c.coeffs)} coefficients, expected {width}")
            if c.sense not in SENSES:
                raise MalformedSystemError(f"unknown relation {c.sense!r}")

    @classmethod
    def build(cls, variables: Sequence[str], rows) -> "RationalLP":
        """Build from ``(coeffs, sense, rhs[, label])`` rows.

        ``coeffs`` is either a full sequence or a mapping from variable name
        to coefficient.
        """
        variables = tuple(variables)
        index = {v: k for k, v in enumerate(variables)}
        out = []
        for row in rows:
            coeffs, sense, rhs, *rest = row
            if isinstance(coeffs, Mapping):
                dense = [Fraction(0)] * len(variables)
                for name, value in coeffs.items():
                    if name not in index:
                        raise MalformedSystemError(f"unknown variable {name!r}")
                    dense[index[name]] += Fraction(value)
                coeffs = dense
            out.append(Constraint(tuple(Fraction(c) for c in coeffs), sense, Fraction(rhs),
                                  rest[0] if rest else ""))
        return cls(variables, tuple(out))


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    solution: tuple[Fraction, ...] | None = None
    # one multiplier per constraint; see verify_certificate
    certificate: tuple[Fraction, ...] | None = None

    def as_dict(self, lp: RationalLP) -> dict:
        if self.feasible:
            return {"status": "feasible",
                    "solution": {v: str(x) for v, x in zip(lp.variables, self.solution)}}
        return {"status": "infeasible", "certificate": certificate_terms(lp, self.certificate)}


def verify_solution(lp: RationalLP, point: Sequence[Fraction]) -> bool:
    return (len(point) == len(lp.variables)
            and all(x >= 0 for x in point)
            and all(c.holds(point) for c in lp.constraints))


def verify_certificate(lp: RationalLP, multipliers: Sequence[Fraction]) -> bool:
    """Check a Farkas certificate of infeasibility in exact arithmetic.

    Multiplier ``m_r`` must be >= 0 on ``<=`` rows, <= 0 on ``>=`` rows and is
    free on equalities.  Then ``sum m_r * row_r`` is a valid ``<=`` inequality
    for every feasible point.  It is contradictory when all its variable
    coefficients are >= 0 (so the left side is >= 0 on x >= 0) while its right
    side is negative.
    """
    if len(multipliers) != len(lp.constraints):
        return False
    for m, c in zip(multipliers, lp.constraints):
        if (c.sense == "<=" and m < 0) or (c.sense == ">=" and m > 0):
            return False
    for j in range(len(lp.variables)):
        if sum((m * c.coeffs[j] for m, c in zip(multipliers, lp.constraints)), Fraction(0)) < 0:
            return False
    return sum((m * c.rhs for m, c in zip(multipliers, lp.constraints)), Fraction(0)) < 0


def certificate_terms(lp: RationalLP, multipliers: Sequence[Fraction]) -> list[dict]:
    return [{"constraint": c.label or f"row {r}", "multiplier": str(m)}
            for r, (m, c) in enumerate(zip(multipliers, lp.constraints)) if m != 0]


def _integral(values: Sequence[Fraction]) -> tuple[Fraction, ...]:
    scale = lcm(*(v.denominator for v in values)) if values else 1
    return tuple(v * scale for v in values)


def lp_feasible(lp: RationalLP) -> FeasibilityResult:
    """Decide feasibility of ``lp`` exactly; never uses floating point."""
    rows = lp.constraints
    m, nv = len(rows), len(lp.variables)
    slack_cols = {}
    for r, c in enumerate(rows):
        if c.sense != "==":
            slack_cols[r] = nv + len(slack_cols)
    ns = len(slack_cols)
    art0 = nv + ns
    width = art0 + m

    # row r is multiplied by sign[r] so that its right-hand side is >= 0
    sign = [1 if c.rhs >= 0 else -1 for c in rows]
    tab: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for r, c in enumerate(rows):
        row = [Fraction(0)] * width
        for j, a in enumerate(c.coeffs):
            row[j] = sign[r] * a
        if r in slack_cols:
            row[slack_cols[r]] = Fraction(sign[r] if c.sense == "<=" else -sign[r])
        row[art0 + r] = Fraction(1)
        tab.append(row)
        rhs.append(sign[r] * c.rhs)
    basis = [art0 + r for r in range(m)]

    # reduced costs of the phase-one objective (sum of artificials)
    cost = [Fraction(0)] * width
    for j in range(width):
        if j >= art0:
            cost[j] = Fraction(1)
    red = [cost[j] - sum((tab[r][j] for r in range(m)), Fraction(0)) for j in range(width)]
    for r in range(m):
        red[art0 + r] = Fraction(0)

    while True:
        entering = next((j for j in range(width) if red[j] < 0), None)
        if entering is None:
            break
        leave, best = None, None
        for r in range(m):
            a = tab[r][entering]
            if a > 0:
                ratio = rhs[r] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    leave, best = r, ratio
        if leave is None:
            # unbounded descent is impossible for a sum of nonnegative artificials
            raise SimpleGameError("phase-one simplex found an unbounded ray")
        piv = tab[leave][entering]
        prow = [a / piv for a in tab[leave]]
        tab[leave] = prow
        rhs[leave] = rhs[leave] / piv
        for r in range(m):
            if r != leave:
                f = tab[r][entering]
                if f:
                    tab[r] = [a - f * b for a, b in zip(tab[r], prow)]
                    rhs[r] -= f * rhs[leave]
        f = red[entering]
        red = [a - f * b for a, b in zip(red, prow)]
        basis[leave] = entering

    infeasibility = sum((rhs[r] for r in range(m) if basis[r] >= art0), Fraction(0))
    if infeasibility == 0:
        point = [Fraction(0)] * nv
        for r, j in enumerate(basis):
            if j < nv:
                point[j] = rhs[r]
        point = tuple(point)
        if not verify_solution(lp, point):
            raise SimpleGameError("simplex returned a point that violates the system")
        return FeasibilityResult(True, solution=point)

    # phase-one duals: y_r = cost(art_r) - reduced cost(art_r)
    duals = [Fraction(1) - red[art0 + r] for r in range(m)]
    multipliers = _integral([-duals[r] * sign[r] for r in range(m)])
    if not verify_certificate(lp, multipliers):
        raise SimpleGameError("simplex produced an invalid infeasibility certificate")
    return FeasibilityResult(False, certificate=multipliers)
