import pytest
from hypothesis import given, strategies as st

from oracles import free_paths
from pdcalc.errors import NotAQuasicategory, WordBoundExceeded
from pdcalc.fincat import (enumerate_functors, find_isomorphism, iso_interval, ordinal, poset,
                           product, span, validate_category)
from pdcalc.hocat import ho, ho_agrees, ho_functor, ho_presented, ho_quasicategory
from pdcalc.sset import boundary, horn, nerve, nerve_map, sset_coproduct, standard_simplex
from test_fincat import small_posets

B = 3
CATS = [ordinal(0), ordinal(1), ordinal(2), ordinal(3), span(),
        product(ordinal(1), ordinal(1)).category, iso_interval()]


@pytest.mark.parametrize("c", CATS, ids=lambda c: c.name)
def test_ho_of_nerve_recovers_category(c):
    h = ho_quasicategory(nerve(c, B))
    assert (h.category.n_obj, h.category.n_mor) == (c.n_obj, c.n_mor)
    assert find_isomorphism(h.category, c) is not None
    assert h.mode == "exact"
    assert ho_agrees(nerve(c, B))


def test_ho_of_two_simplex_counts():
    h = ho_quasicategory(nerve(ordinal(2), B)).category
    assert (h.n_obj, h.n_mor) == (3, 6)


def test_presented_route_on_non_quasicategories():
    # boundary of Δ[2]: free on 0->1->2 and 0->2
    h = ho_presented(boundary(2, B)).category
    assert (h.n_obj, h.n_mor) == (3, free_paths(3, [(0, 1), (1, 2), (0, 2)])) == (3, 7)
    # horn Λ^1[2]: free on 0->1->2
    h = ho(horn(2, 1, B))
    assert h.mode == "presented"
    assert (h.category.n_obj, h.category.n_mor) == (3, free_paths(3, [(0, 1), (1, 2)])) == (3, 6)
    assert validate_category(h.category) is None


def test_disjoint_intervals():
    d1 = standard_simplex(1, B)
    s, _, _ = sset_coproduct(d1, d1)
    h = ho(s).category
    assert (h.n_obj, h.n_mor) == (4, 6)


def test_horn_is_refused_by_exact_route_with_witness():
    with pytest.raises(NotAQuasicategory) as ei:
        ho_quasicategory(horn(2, 1, B))
    nk, images = ei.value.witness
    assert nk == (2, 1)
    assert len(images) == len(horn(2, 1, B).nd_cells)
    assert "[hocat.ho_quasicategory]" in str(ei.value)


def test_word_bound_exceeded_names_the_count():
    with pytest.raises(WordBoundExceeded) as ei:
        ho_presented(boundary(2, B), word_bound=1)
    assert ei.value.count == 6


def test_ho_functor_of_nerve_map_is_the_functor():
    for F in enumerate_functors(span(), ordinal(1)):
        G = ho_functor(nerve_map(F, B))
        assert list(G.obj_map) == list(F.obj_map)


@given(small_posets(4))
def test_ho_nerve_random_posets(p):
    x = nerve(p, B)
    h = ho_quasicategory(x).category
    assert find_isomorphism(h, p) is not None
    assert ho_agrees(x)


@given(small_posets(3), small_posets(3))
def test_ho_functor_respects_composition_counts(p, q):
    fs = enumerate_functors(p, q)
    if not fs:
        return
    F = fs[len(fs) // 2]
    G = ho_functor(nerve_map(F, B))
    assert G.dom.n_obj == p.n_obj and G.cod.n_obj == q.n_obj
    assert list(G.obj_map) == list(F.obj_map)


@given(st.integers(1, 3))
def test_discrete_sets_have_discrete_ho(n):
    d = poset(list(range(n)), [])
    h = ho(nerve(d, B)).category
    assert (h.n_obj, h.n_mor) == (n, n)
