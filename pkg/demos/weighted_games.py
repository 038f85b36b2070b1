"""Deciding weightedness exactly, with a certificate either way.

Run: python demos/weighted_games.py
"""

from simplegames import ExplicitGame, Form, WeightedRealization
from simplegames.lp import certificate_terms, verify_certificate
from simplegames.weighted import (
    decide_weighted,
    is_homogeneous_realization,
    realization_is_majority,
    test_weighted,
)

# A dictator-with-veto style game: player 1 plus anyone else wins.
veto = ExplicitGame.from_lists(4, Form.MIN_WINNING, [[1, 2], [1, 3], [1, 4]])
print("veto game realization:", test_weighted(veto))

# Two disjoint pairs is the classic non-weighted game.  Adding the two
# winning rows and subtracting the two crossing losing rows gives 0 <= -2.
pairs = ExplicitGame.from_lists(4, Form.MIN_WINNING, [[1, 2], [3, 4]])
decision = decide_weighted(pairs)
print("pairs game realization:", decision.realization)
cert = decision.feasibility.certificate
print("certificate verifies:", verify_certificate(decision.lp, cert))
for term in certificate_terms(decision.lp, cert):
    print(f"  {term['multiplier']:>3} x  {term['constraint']}")

# Realizations can be checked directly with subset-sum reachability,
# which stays cheap for many players as long as the weights are small.
odd = WeightedRealization(101, tuple([1] * 201))
print("\n(101; 1 x 201) majority:", realization_is_majority(odd).value)
# with an even number of voters a 100/100 split leaves both halves losing
even = WeightedRealization(101, tuple([1] * 200))
v = realization_is_majority(even)
print("(101; 1 x 200) majority:", v.value, "witness sizes:", [m.bit_count() for m in v.witness])

# Homogeneity is a property of the realization, not of the game.
for r in (WeightedRealization(3, (2, 1, 1, 1)), WeightedRealization(3, (2, 2, 1))):
    print(f"{r} homogeneous realization:", is_homogeneous_realization(r).value)
