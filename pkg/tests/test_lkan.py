import pytest
from hypothesis import given, settings, strategies as st

from oracles import chain, count_monotone, monotone_maps, poset_product, span_poset
from pdcalc.errors import WordBoundExceeded
from pdcalc.fincat import find_isomorphism, functor_category, ordinal, product, span
from pdcalc.lkan import (L_eval_category, L_eval_objects, L_pd, RL_sset, boundary_pd,
                         example_1_13, horn_pd, inclusion_map, unit_check)
from pdcalc.pdv import ProbeFamily, underlying_sset, validate_prederivator
from pdcalc.sset import (boundary, empty_sset, find_sset_isomorphism, horn, nerve,
                         sset_coproduct, sset_product, standard_simplex)

B = 3
SQ = product(ordinal(1), ordinal(1)).category
PROBES = [ordinal(0), ordinal(1), ordinal(2), span(), SQ]


def as_poset(c):
    return list(c.objects), {(c.src[f], c.tgt[f]) for f in range(c.n_mor)}


def test_example_comparison_against_brute_force():
    r = example_1_13()
    sq = poset_product(chain(1), chain(1))
    maps = monotone_maps(span_poset(), sq)
    upper = [(0, 0), (0, 1), (1, 1)]
    lower = [(0, 0), (1, 0), (1, 1)]
    in_a_triangle = [m for m in maps if set(m) <= set(upper) or set(m) <= set(lower)]
    assert r.cod_size == len(maps) == 25
    assert r.dom_size == len(in_a_triangle) == 23
    assert r.injective and not r.surjective and r.witness_missing
    assert sorted(map(tuple, r.missing)) == sorted(set(maps) - set(in_a_triangle))


@pytest.mark.parametrize("n", range(4))
@pytest.mark.parametrize("j", PROBES, ids=lambda c: c.name)
def test_L_of_simplex_is_representable_on_objects(n, j):
    lo = L_eval_objects(standard_simplex(n, B), j)
    assert len(lo.elements) == count_monotone(as_poset(j), chain(n))


def test_L_of_empty_is_empty():
    assert L_eval_objects(empty_sset(B), span()).elements == []


def test_L_of_square_at_span():
    d1 = standard_simplex(1, B)
    assert len(L_eval_objects(sset_product(d1, d1).sset, span()).elements) == 23


def test_nondegenerate_diagram_agrees_with_full_diagram():
    for x in (standard_simplex(1, B), standard_simplex(2, B), horn(2, 1, B), boundary(2, B)):
        for j in (ordinal(0), ordinal(1), span()):
            assert len(L_eval_objects(x, j).elements) == len(L_eval_objects(x, j, full=True).elements)


def test_L_categories():
    for j in (ordinal(1), span(), SQ):
        lc = L_eval_category(standard_simplex(2, B), j)
        assert find_isomorphism(lc.category, functor_category(j, ordinal(2))) is not None
    assert L_eval_category(standard_simplex(0, B), span()).category.n_mor == 1
    d1 = standard_simplex(1, B)
    lc = L_eval_category(sset_product(d1, d1).sset, ordinal(0))
    assert find_isomorphism(lc.category, SQ) is not None


def test_unit_on_fixtures():
    d1 = standard_simplex(1, B)
    xs = [standard_simplex(n, B) for n in range(4)]
    xs += [boundary(2, B), horn(2, 1, B), sset_product(d1, d1).sset, nerve(span(), B), empty_sset(B)]
    for x in xs:
        assert unit_check(x).passed, x.name
        RL, unit = RL_sset(x)
        assert [len(level) for level in RL.cells] == [len(level) for level in x.cells]


def test_horn_and_boundary_prederivators():
    h = horn_pd(2, 1, B)
    assert find_sset_isomorphism(underlying_sset(h, B), horn(2, 1, B)) is not None
    assert validate_prederivator(h) is None
    fam = ProbeFamily()
    inc = inclusion_map(h, 2)
    for j in fam.categories:
        obj = inc.object_component(j)
        assert len(set(obj)) == len(obj)
    b = boundary_pd(1, B)
    for j in fam.categories:
        assert b.n_objects(j) == 2


def test_word_bound_failure_degrades_to_objects():
    with pytest.raises(WordBoundExceeded):
        L_eval_category(horn(2, 1, B), SQ, word_bound=1)
    d = L_pd(horn(2, 1, B), word_bound=1)
    c = d.eval(SQ)
    assert c.n_obj == len(L_eval_objects(horn(2, 1, B), SQ).elements)


SSETS = [standard_simplex(1, B), standard_simplex(2, B), horn(2, 1, B), boundary(2, B),
         horn(2, 0, B)]


@settings(max_examples=20)
@given(st.sampled_from(SSETS), st.sampled_from(PROBES))
def test_objects_of_colimit_equal_colimit_of_objects(x, j):
    lc = L_eval_category(x, j)
    assert lc.category.n_obj == len(L_eval_objects(x, j).elements)


@settings(max_examples=20)
@given(st.sampled_from(SSETS), st.sampled_from(SSETS), st.sampled_from(PROBES))
def test_L_preserves_coproducts_on_objects(x, y, j):
    s, _, _ = sset_coproduct(x, y)
    assert len(L_eval_objects(s, j).elements) == \
        len(L_eval_objects(x, j).elements) + len(L_eval_objects(y, j).elements)
