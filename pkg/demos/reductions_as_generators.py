"""Hardness reductions turned into generators of instances with known answers.

Run: python demos/reductions_as_generators.py
"""

import numpy as np

from simplegames.oracle import partition_exists, splitting_exists
from simplegames.recognize import is_strong
from simplegames.reductions import (
    partition_reduction,
    random_cnf,
    random_partition_instance,
    random_set_splitting_instance,
    sat_reduction,
    set_splitting_reduction,
)
from simplegames import CoalitionFamily, Form
from simplegames.reductions import SetSplittingInstance
from simplegames.succinct import And, Not, Var, truth_table, validate_succinct
from simplegames.weighted import realization_is_strong

rng = np.random.default_rng(1)

# Partition: values that split evenly give a weak weighted game.
print("partition values -> realization, splittable?, weak?")
for _ in range(5):
    inst = random_partition_instance(rng, max_n=6, max_value=9)
    r = partition_reduction(inst, "strong")
    print(f"  {inst.x} -> {r}, {partition_exists(inst.x)}, {not realization_is_strong(r).value}")

# Set splitting: a 2-colouring with no monochromatic set gives a weak game.
print("\nset splitting collection -> splittable?, weak?")
path = SetSplittingInstance(4, CoalitionFamily.from_lists(4, [[1, 2], [2, 3], [3, 4]]))
randoms = [random_set_splitting_instance(rng, max_ground=5, max_sets=4) for _ in range(3)]
for inst in [path, *randoms]:
    game = set_splitting_reduction(inst)
    print(f"  {inst.collection.to_lists()} -> {splitting_exists(inst.ground, inst.collection)}, "
          f"{not is_strong(game).value}")

# SAT: the formula game is a valid minimal winning form iff the CNF is unsatisfiable.
print("\nCNF on 3 variables -> satisfiable?, valid min-winning formula?")
contradiction = And((Var(1), Not(Var(1))))
for phi in [contradiction, *(random_cnf(rng, 3, clauses=4) for _ in range(3))]:
    psi = sat_reduction(phi, 3)
    print(f"  {bool(truth_table(phi, 3).any())}, {validate_succinct(4, Form.MIN_WINNING, psi).value}")
