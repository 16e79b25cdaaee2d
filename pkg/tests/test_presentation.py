import pytest
from hypothesis import given, strategies as st

from oracles import free_paths
from pdcalc.errors import WordBoundExceeded
from pdcalc.fincat import find_isomorphism, ordinal, product, validate_category
from pdcalc.presentation import present


def test_free_category_on_a_chain():
    p = present([0, 1, 2], [("f", 0, 1), ("g", 1, 2)], [])
    assert p.category.n_mor == free_paths(3, [(0, 1), (1, 2)]) == 6
    assert find_isomorphism(p.category, ordinal(2)) is not None


def test_commuting_square():
    gens = [("a", 0, 1), ("b", 1, 3), ("c", 0, 2), ("d", 2, 3)]
    p = present([0, 1, 2, 3], gens, [((0, (0, 1)), (0, (2, 3)))])
    assert p.category.n_mor == 9
    assert find_isomorphism(p.category, product(ordinal(1), ordinal(1)).category) is not None


def test_idempotent_and_period_three_loops():
    p = present([0], [("e", 0, 0)], [((0, (0, 0)), (0, (0,)))])
    assert p.category.n_mor == 2
    p = present([0], [("e", 0, 0)], [((0, (0, 0, 0)), (0, (0,)))])
    assert p.category.n_mor == 3
    assert validate_category(p.category) is None


def test_free_loop_does_not_stabilise():
    with pytest.raises(WordBoundExceeded):
        present([0], [("e", 0, 0)], [], word_bound=6)


def test_relation_collapsing_to_identity():
    p = present([0, 1], [("f", 0, 1), ("g", 1, 0)],
                [((0, (0, 1)), (0, ())), ((1, (1, 0)), (1, ()))])
    assert p.category.n_mor == 4


@given(st.integers(1, 5))
def test_cyclic_group_presentation(n):
    p = present([0], [("r", 0, 0)], [((0, (0,) * n), (0, ()))], word_bound=max(8, 2 * n))
    assert p.category.n_mor == n
    assert validate_category(p.category) is None


@given(st.integers(1, 5))
def test_free_chain_counts(n):
    gens = [(i, i, i + 1) for i in range(n)]
    p = present(list(range(n + 1)), gens, [], word_bound=max(8, 2 * n))
    assert p.category.n_mor == free_paths(n + 1, [(i, i + 1) for i in range(n)])
