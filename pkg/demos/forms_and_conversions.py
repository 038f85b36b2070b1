"""Four ways to write down the same simple game, and what each one costs.

Run: python demos/forms_and_conversions.py
"""

from simplegames import ExplicitGame, Form, members
from simplegames.convert import convert, dual_of
from simplegames.recognize import is_decisive, is_proper, is_strong
from simplegames.reductions import lemma5_game

# Three-player majority: any two players win.
majority = ExplicitGame.from_lists(3, Form.MIN_WINNING, [[1, 2], [1, 3], [2, 3]])

for form in Form:
    g = convert(majority, form)
    print(f"{form.value:>12}: {g.family.to_lists()}")

# Majority is its own dual, which is another way of saying it is decisive.
print("dual (max losing form):", dual_of(majority).family.to_lists())
print("strong:", is_strong(majority).value, " proper:", is_proper(majority).value,
      " decisive:", is_decisive(majority).value)

# Disjoint pairs: k minimal winning coalitions but 2^k maximal losing ones.
# Picking one player from each pair is exactly how to lose.
print("\nk  |W^m|  |L^M|")
for k in range(1, 9):
    g = lemma5_game(k)
    print(f"{k}  {len(g.family):>5}  {len(convert(g, Form.MAX_LOSING).family):>5}")

# A failing check comes with a witness: two disjoint losing coalitions.
pairs = lemma5_game(2)
v = is_strong(pairs)
print("\npairs game strong?", v.value, "witness:", [list(members(m)) for m in v.witness], "via", v.method)
