"""Games written as Boolean formulas over player indicators.

Run: python demos/succinct_games.py
"""

from simplegames import ExplicitGame, Form
from simplegames.succinct import (
    And,
    Not,
    Var,
    dnf_of_min_winning,
    evaluate,
    explicit_from_succinct,
    formula_to_json,
    validate_succinct,
)

# Any minimal winning family becomes a monotone DNF with one term per coalition.
pairs = ExplicitGame.from_lists(4, Form.MIN_WINNING, [[1, 2], [3, 4]])
phi = dnf_of_min_winning(pairs.family)
print("DNF:", formula_to_json(phi))
print("phi(1,1,0,0) =", evaluate(phi, (1, 1, 0, 0)), " phi(1,0,1,0) =", evaluate(phi, (1, 0, 1, 0)))

# Read as a winning form, the formula expands back to all seven winning coalitions.
print("winning coalitions:", explicit_from_succinct(4, phi, Form.WINNING).family.to_lists())

# Validation reports the first assignment pair that breaks the law.
v = validate_succinct(2, Form.WINNING, And((Var(1), Not(Var(2)))))
print("x1 and not x2 as a winning form:", v.value, v.method, v.witness)
v = validate_succinct(4, Form.MIN_WINNING, phi)
print("the DNF as a minimal winning form:", v.value, v.method, v.witness)
