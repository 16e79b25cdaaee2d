import pytest
from hypothesis import given, strategies as st

from oracles import (boundary_cells, chain, count_monotone, horn_cells, nerve_cells,
                     poset_product, simplex_cells, span_poset)
from pdcalc import config
from pdcalc.errors import BoundError, ResourceError
from pdcalc.fincat import (CatFunctor, codiscrete, enumerate_functors, iso_interval, ordinal,
                           product, span)
from pdcalc.sset import (SimplicialMap, boundary, cell_map, chain_functor, compose_maps, empty_sset, exponential,
                         find_sset_isomorphism, functor_chain, has_rlp, hom_set, horn,
                         identity_map, inclusion, inner_horn_inclusions,
                         is_acyclic_fibration_up_to, is_inner_fibration_up_to,
                         is_levelwise_bijective, is_quasicategory_up_to, nerve, nerve_map, point,
                         quasicategory_witness, sset_coproduct, sset_product, sset_pushout,
                         standard_simplex, terminal_map, validate_map, validate_sset)

B = 3


def counts(x):
    return [len(level) for level in x.cells]


@pytest.mark.parametrize("n", range(4))
def test_standard_simplex_cells(n):
    x = standard_simplex(n, B)
    assert counts(x) == [len(simplex_cells(n, k)) for k in range(B + 1)]
    assert validate_sset(x) is None
    assert x.nd_dim == n


def test_boundary_and_horn_cells():
    for n in (1, 2, 3):
        assert counts(boundary(n, B)) == [len(boundary_cells(n, k)) for k in range(B + 1)]
        for j in range(n + 1):
            h = horn(n, j, B)
            assert counts(h) == [len(horn_cells(n, j, k)) for k in range(B + 1)]
            assert validate_sset(h) is None
    # frozen: horn Λ^1[2] has 3 vertices, 5 edges, 7 two-cells
    assert counts(horn(2, 1, B))[:3] == [3, 5, 7]


def test_nerve_cells_match_chains():
    sq = product(ordinal(1), ordinal(1)).category
    for c, p in ((ordinal(2), chain(2)), (span(), span_poset()), (sq, poset_product(chain(1), chain(1)))):
        x = nerve(c, B)
        assert counts(x) == [len(nerve_cells(p, k)) for k in range(B + 1)]
        assert validate_sset(x) is None


def test_nerve_of_iso_interval_is_infinite_dimensional_in_cells():
    x = nerve(iso_interval(), B)
    # every sequence of objects is a chain in a codiscrete category
    assert counts(x) == [2 ** (k + 1) for k in range(B + 1)]


def test_product_cells_and_nondegenerate_counts():
    d1 = standard_simplex(1, B)
    p = sset_product(d1, d1).sset
    assert counts(p) == [a * a for a in counts(d1)]
    assert [len(p.nondegenerate(k)) for k in range(B + 1)] == [4, 5, 2, 0]
    assert validate_sset(p) is None


def test_pushout_of_two_triangles_is_the_square():
    d1, d2 = standard_simplex(1, B), standard_simplex(2, B)
    long_edge = SimplicialMap.from_function(d1, d2, lambda n, c: tuple(2 * v for v in c))
    P, iB, iC = sset_pushout(long_edge, long_edge)
    sq = sset_product(d1, d1).sset
    assert counts(P) == counts(sq) == [4, 9, 16, 25]
    assert find_sset_isomorphism(P, sq) is not None
    assert validate_map(iB) is None and validate_map(iC) is None


def test_yoneda_hom_counts():
    for n in range(3):
        for c in (ordinal(2), span()):
            x = nerve(c, B)
            assert len(hom_set(standard_simplex(n, B), x)) == len(x.cells[n])


def test_hom_between_nerves_matches_functors():
    sq = product(ordinal(1), ordinal(1)).category
    cases = [(ordinal(1), ordinal(2), 6), (span(), ordinal(1), 5), (sq, ordinal(2), 20)]
    for j, k, expected in cases:
        maps = hom_set(nerve(j, B), nerve(k, B))
        assert len(maps) == len(enumerate_functors(j, k)) == expected
        assert all(validate_map(f) is None for f in maps)


def test_hom_budget_and_bound_errors():
    with config.budget(10):
        with pytest.raises(ResourceError):
            hom_set(nerve(product(ordinal(1), ordinal(1)).category, B), nerve(ordinal(3), B))
    with pytest.raises(BoundError):
        hom_set(standard_simplex(3, 3), nerve(ordinal(1), 2))


def test_exponential_levels_match_functor_counts():
    e = exponential(nerve(ordinal(1), B), nerve(span(), B), levels=2)
    g = span_poset()
    expected = [count_monotone(poset_product(chain(n), g), chain(1)) for n in range(3)]
    assert counts(e) == expected == [5, 14, 30]
    assert validate_sset(e) is None


def test_quasicategory_checks():
    assert is_quasicategory_up_to(nerve(ordinal(2), B), 3)
    assert is_quasicategory_up_to(nerve(iso_interval(), B), 3)
    assert not is_quasicategory_up_to(horn(2, 1, B), 3)
    assert not is_quasicategory_up_to(boundary(2, B), 2)
    nk, witness = quasicategory_witness(horn(2, 1, B), 3)
    assert nk == (2, 1) and validate_map(witness) is None


def test_lifting_examples():
    n2 = nerve(ordinal(2), B)
    collapse = nerve_map(CatFunctor(ordinal(1), ordinal(0), [0, 0], [0, 0, 0]), B)
    assert is_acyclic_fibration_up_to(identity_map(n2), 3)
    assert not is_acyclic_fibration_up_to(collapse, 3)
    C = codiscrete(2)
    assert is_acyclic_fibration_up_to(nerve_map(CatFunctor(C, ordinal(0), [0, 0], [0] * 4), B), 3)
    assert is_inner_fibration_up_to(collapse, 3)
    # the vertex 0 of Δ[1] fails already against ∅ -> Δ[0]: vertex 1 has no preimage
    v = cell_map(standard_simplex(1, B), 0, (0,))
    res = has_rlp(v, inclusion(empty_sset(B), point(B)))
    assert not res.holds
    assert res.witness[1].images == ((1,),)
    assert not is_acyclic_fibration_up_to(v, 3)


def test_lift_squares_are_counted():
    (nk, inc), *_ = inner_horn_inclusions(2, B)
    res = has_rlp(terminal_map(nerve(ordinal(2), B)), inc)
    assert nk == (2, 1) and res.holds and res.squares == len(nerve_cells(chain(2), 2)) == 10


def test_coproduct_of_intervals():
    d1 = standard_simplex(1, B)
    s, i0, i1 = sset_coproduct(d1, d1)
    assert counts(s) == [2 * a for a in counts(d1)]
    assert validate_map(i0) is None and validate_map(i1) is None


@st.composite
def ordinal_functors(draw):
    m, n = draw(st.integers(0, 2)), draw(st.integers(0, 2))
    return draw(st.sampled_from(enumerate_functors(ordinal(m), ordinal(n))))


@given(ordinal_functors())
def test_nerve_map_is_simplicial_and_chains_round_trip(F):
    f = nerve_map(F, B)
    assert validate_map(f) is None
    for n in range(B + 1):
        for cell in f.dom.cells[n]:
            assert functor_chain(chain_functor(F.dom, cell)) == cell


@given(ordinal_functors(), ordinal_functors())
def test_nerve_is_functorial(F, G):
    if F.cod != G.dom:
        return
    from pdcalc.fincat import compose_functors
    assert compose_maps(nerve_map(G, B), nerve_map(F, B)) == nerve_map(compose_functors(G, F), B)


@given(st.integers(0, 2), st.integers(0, 2))
def test_product_projections_are_maps(m, n):
    p = sset_product(standard_simplex(m, B), standard_simplex(n, B))
    assert validate_map(p.first) is None and validate_map(p.second) is None
    assert len(p.sset.cells[1]) == len(simplex_cells(m, 1)) * len(simplex_cells(n, 1))


@given(st.integers(0, 3))
def test_identity_is_bijective(n):
    x = standard_simplex(n, B)
    assert is_levelwise_bijective(identity_map(x))
