import numpy as np
import pytest

from simplegames.core import Form, InvalidGameError, coalition
from simplegames.oracle import game_predicate, oracle_report, partition_exists, splitting_exists
from simplegames.recognize import is_proper, is_strong
from simplegames.reductions import (
    ODD_TOTAL_IMAGE,
    PartitionInstance,
    SetSplittingInstance,
    lemma5_game,
    partition_reduction,
    random_cnf,
    random_partition_instance,
    random_set_splitting_instance,
    sat_reduction,
    set_splitting_reduction,
    strong_to_proper_reduction,
)
from simplegames.succinct import And, Not, Var, evaluate, truth_table, validate_succinct
from simplegames.weighted import (
    WeightedRealization,
    realization_is_majority,
    realization_is_proper,
    realization_is_strong,
)

from conftest import fam, game


@pytest.mark.parametrize("x, variant, expected", [
    ((1, 1, 2), "strong", WeightedRealization(3, (1, 1, 2))),
    ((1, 1, 2), "proper", WeightedRealization(2, (1, 1, 2))),
    ((1, 1, 2), "majority", WeightedRealization(2, (1, 1, 2))),
    ((1, 1, 1), "strong", WeightedRealization(2, (1, 1, 1))),
    ((1, 1, 1), "proper", WeightedRealization(2, (1, 1, 1))),
    ((1, 1, 1), "majority", WeightedRealization(2, (1, 1, 1))),
])
def test_partition_reduction(x, variant, expected):
    assert partition_reduction(PartitionInstance(x), variant) == expected


def test_partition_reduction_rejects():
    with pytest.raises(InvalidGameError):
        partition_reduction(PartitionInstance((0, 0)), "strong")
    with pytest.raises(InvalidGameError):
        PartitionInstance((1, -1))
    with pytest.raises(InvalidGameError):
        partition_reduction(PartitionInstance((1, 1)), "homogeneous")


def test_partition_iff_on_random_instances():
    rng = np.random.default_rng(99)
    for _ in range(60):
        inst = random_partition_instance(rng, max_n=10, max_value=30)
        yes = partition_exists(inst.x)
        assert (not realization_is_strong(partition_reduction(inst, "strong")).value) == yes
        assert (not realization_is_proper(partition_reduction(inst, "proper")).value) == yes
        assert (not realization_is_majority(partition_reduction(inst, "majority")).value) == yes


def test_odd_totals_map_to_a_decisive_game():
    assert realization_is_strong(ODD_TOTAL_IMAGE).value
    assert realization_is_proper(ODD_TOTAL_IMAGE).value
    assert realization_is_majority(ODD_TOTAL_IMAGE).value


def test_set_splitting_reduction():
    inst = SetSplittingInstance(3, fam(3, [1, 2], [2, 3]))
    g = set_splitting_reduction(inst)
    assert g.form is Form.MIN_WINNING and g.family == fam(3, [1, 2], [2, 3])
    assert set_splitting_reduction(SetSplittingInstance(3, fam(3, [1, 2], [1, 2, 3]))).family == fam(3, [1, 2])
    assert splitting_exists(3, inst.collection)
    v = is_strong(g)
    assert not v.value
    wins = game_predicate(g)
    assert not wins(coalition([2])) and not wins(coalition([1, 3]))
    with pytest.raises(InvalidGameError):
        set_splitting_reduction(SetSplittingInstance(3, fam(3)))
    with pytest.raises(InvalidGameError):
        SetSplittingInstance(3, fam(3, []))


def test_set_splitting_iff_on_random_instances():
    rng = np.random.default_rng(5)
    for _ in range(30):
        inst = random_set_splitting_instance(rng, max_ground=9)
        assert splitting_exists(inst.ground, inst.collection) == (not is_strong(set_splitting_reduction(inst)).value)


def test_strong_to_proper_reduction():
    g = game(4, "min_winning", [1, 2], [3, 4])
    d = strong_to_proper_reduction(g)
    assert d.form is Form.MAX_LOSING and d.family == fam(4, [1, 2], [3, 4])
    assert strong_to_proper_reduction(game(3, "min_winning", [1])).family == fam(3, [2, 3])
    assert not is_strong(g).value and not is_proper(d).value
    wins = game_predicate(d)
    assert wins(coalition([1, 3])) and wins(coalition([2, 4]))
    with pytest.raises(InvalidGameError):
        strong_to_proper_reduction(game(2, "winning", [1], [1, 2]))


def test_strong_to_proper_on_all_small_games(small_games):
    for g in small_games:
        assert (not is_strong(g).value) == (not is_proper(strong_to_proper_reduction(g)).value)


def _has_comparable_true_pair(phi, n):
    t = truth_table(phi, n)
    ones = [s for s in range(1 << n) if t[s]]
    return any(a != b and a & b == a for a in ones for b in ones)


def test_sat_reduction_examples():
    phi = And((Var(1), Var(2)))
    psi = sat_reduction(phi, 2)
    assert evaluate(psi, (1, 1, 1)) == 1
    assert evaluate(psi, (1, 0, 1)) == 0
    assert evaluate(psi, (1, 1, 0)) == 0
    assert evaluate(psi, (0, 0, 0)) == 0
    assert _has_comparable_true_pair(psi, 3)
    contradiction = And((Var(1), Not(Var(1))))
    assert not _has_comparable_true_pair(sat_reduction(contradiction, 2), 3)
    with pytest.raises(InvalidGameError):
        sat_reduction(Not(Var(1)), 1)


def test_sat_reduction_iff_on_random_formulas():
    rng = np.random.default_rng(11)
    seen = set()
    for _ in range(80):
        n = int(rng.integers(1, 6))
        phi = random_cnf(rng, n, clauses=int(rng.integers(1, 3 * n + 2)))
        sat = bool(truth_table(phi, n).any())
        seen.add(sat)
        psi = sat_reduction(phi, n)
        assert _has_comparable_true_pair(psi, n + 1) == sat
        assert (not validate_succinct(n + 1, Form.MIN_WINNING, psi).value) == sat
    assert seen == {True, False}


def test_lemma5_game():
    g = lemma5_game(2)
    assert g.family == fam(4, [1, 2], [3, 4])
    r = oracle_report(4, game_predicate(g))
    assert r.winning_count == 7


def test_set_splitting_generator_terminates_on_tiny_ground_sets():
    rng = np.random.default_rng(0)
    for _ in range(50):
        inst = random_set_splitting_instance(rng, max_ground=2, max_sets=8)
        assert 1 <= len(inst.collection) <= 3
