import numpy as np
import pytest
from hypothesis import strategies as st

from simplegames.core import CoalitionFamily, ExplicitGame, Form
from simplegames.oracle import enumerate_games


def fam(n, *coalitions):
    return CoalitionFamily.from_lists(n, coalitions)


def game(n, form, *coalitions):
    return ExplicitGame.from_lists(n, form, coalitions)


@pytest.fixture(scope="session")
def small_games():
    """Every simple game on 1..4 players, minimal winning form."""
    return [g for n in range(1, 5) for g in enumerate_games(n)]


@st.composite
def families(draw, max_n=6, max_size=12):
    n = draw(st.integers(1, max_n))
    sets = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=max_size))
    return CoalitionFamily(n, tuple(sets))


@st.composite
def min_winning_games(draw, max_n=8, max_size=6):
    n = draw(st.integers(1, max_n))
    sets = draw(st.lists(st.integers(1, (1 << n) - 1), min_size=1, max_size=max_size))
    from simplegames.core import minimize

    return ExplicitGame(n, Form.MIN_WINNING, minimize(CoalitionFamily(n, tuple(sets))))


def random_min_winning(rng: np.random.Generator, n: int) -> ExplicitGame:
    from simplegames.core import minimize

    count = int(rng.integers(1, 2 * n + 1))
    sets = [int(s) for s in rng.integers(1, 1 << n, size=count)]
    return ExplicitGame(n, Form.MIN_WINNING, minimize(CoalitionFamily(n, tuple(sets))))
