import numpy as np
import pytest
from hypothesis import given, settings

from simplegames.convert import convert, winning_of
from simplegames.core import ExplicitGame, Form, InvalidGameError, ResourceLimitError, validate_form
from simplegames.succinct import (
    TRUE,
    And,
    Not,
    Or,
    Var,
    dnf_of_min_winning,
    evaluate,
    explicit_from_succinct,
    formula_to_json,
    parse_formula,
    truth_table,
    validate_succinct,
)

from conftest import fam, min_winning_games, random_min_winning

X1_AND_X2 = And((Var(1), Var(2)))


def test_evaluate():
    assert evaluate(X1_AND_X2, (1, 1)) == 1
    assert evaluate(X1_AND_X2, (1, 0)) == 0
    assert evaluate(TRUE, (0, 1, 0)) == 1
    with pytest.raises(InvalidGameError):
        evaluate(And((Var(3),)), (1, 1))


def test_wire_format_round_trip():
    doc = ["or", ["and", 1, 2], ["and", 3, 4]]
    phi = parse_formula(doc)
    assert phi == dnf_of_min_winning(fam(4, [1, 2], [3, 4]))
    assert formula_to_json(phi) == doc
    assert parse_formula(["not", ["true"]]) == Not(TRUE)
    for bad in (0, ["xor", 1], ["not", 1, 2], [], True, "x1"):
        with pytest.raises(InvalidGameError):
            parse_formula(bad)


def test_dnf_shapes():
    assert dnf_of_min_winning(fam(3, [1])) == Var(1)
    with pytest.raises(InvalidGameError):
        dnf_of_min_winning(fam(3))


def test_dnf_matches_winning_set_on_pair_game():
    g = convert(random_min_winning(np.random.default_rng(0), 2), Form.MIN_WINNING)
    for family, n in ((fam(4, [1, 2], [3, 4]), 4), (g.family, g.n)):
        table = truth_table(dnf_of_min_winning(family), n)
        w = winning_of(ExplicitGame(n, Form.MIN_WINNING, family))
        assert [bool(table[s]) for s in range(1 << n)] == [s in w for s in range(1 << n)]


@settings(max_examples=100, deadline=None)
@given(min_winning_games(max_n=10))
def test_dnf_bridge(g):
    phi = dnf_of_min_winning(g.family)
    w = winning_of(g)
    table = truth_table(phi, g.n)
    assert all(bool(table[s]) == (s in w) for s in range(1 << g.n))
    assert all(evaluate(phi, s, g.n) == table[s] for s in range(0, 1 << g.n, 37))


def test_validate_succinct_examples():
    assert validate_succinct(2, Form.WINNING, X1_AND_X2).value
    v = validate_succinct(2, Form.WINNING, And((Var(1), Not(Var(2)))))
    assert not v.value and v.witness == (0b01, 0b11)
    v = validate_succinct(2, Form.MIN_WINNING, Var(1))
    assert not v.value and v.witness == (0b01, 0b11)


def test_validate_succinct_other_forms():
    # losing form: only the empty coalition loses
    assert validate_succinct(2, Form.LOSING, Not(Or((Var(1), Var(2))))).value
    assert not validate_succinct(2, Form.LOSING, Var(1)).value
    assert validate_succinct(4, Form.MIN_WINNING, dnf_of_min_winning(fam(4, [1, 2], [3, 4]))).value is False
    exact_pairs = Or((And((Var(1), Var(2), Not(Var(3)), Not(Var(4)))), And((Var(3), Var(4), Not(Var(1)), Not(Var(2))))))
    assert validate_succinct(4, Form.MIN_WINNING, exact_pairs).value
    assert not validate_succinct(2, Form.MAX_LOSING, TRUE).value
    assert not validate_succinct(2, Form.MIN_WINNING, Not(TRUE)).value


def test_explicit_from_succinct():
    assert explicit_from_succinct(2, X1_AND_X2, Form.WINNING).family == fam(2, [1, 2])
    assert explicit_from_succinct(2, Or((Var(1), Var(2))), Form.WINNING).family == fam(2, [1], [2], [1, 2])
    g = explicit_from_succinct(4, dnf_of_min_winning(fam(4, [1, 2], [3, 4])), Form.WINNING)
    assert len(g.family) == 7
    with pytest.raises(InvalidGameError):
        explicit_from_succinct(2, Var(1), Form.MIN_WINNING)


def test_round_trip_and_agreement_with_explicit_validation(small_games):
    for base in small_games:
        phi = dnf_of_min_winning(base.family)
        g = explicit_from_succinct(base.n, phi, Form.WINNING)
        assert g.family == winning_of(base)
        for form in Form:
            explicit = convert(base, form)
            table = explicit.family.to_table()
            formula = Or(tuple(And(tuple(Var(i + 1) if s >> i & 1 else Not(Var(i + 1)) for i in range(base.n)))
                               for s in explicit.family))
            assert np.array_equal(truth_table(formula, base.n), table)
            assert validate_succinct(base.n, form, formula).value == validate_form(base.n, form, explicit.family)


def test_succinct_validation_rejects_non_monotone_families():
    # the non-monotone family {{1}} as a winning-form formula
    phi = And((Var(1), Not(Var(2))))
    assert validate_succinct(2, Form.WINNING, phi).value == validate_form(2, Form.WINNING, fam(2, [1]))


def test_guard(monkeypatch):
    monkeypatch.setenv("SG_MAX_ENUM_N", "3")
    with pytest.raises(ResourceLimitError):
        validate_succinct(4, Form.WINNING, Var(1))
