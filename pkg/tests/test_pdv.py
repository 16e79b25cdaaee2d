import pytest
from hypothesis import given, settings, strategies as st

from oracles import chain, count_monotone, poset_product, span_poset
from pdcalc.errors import FormatError
from pdcalc.fincat import (codiscrete, coproduct, enumerate_functors, find_isomorphism, functor_category,
                           iso_interval, ordinal, product, span, compose_functors)
from pdcalc.pdv import (ProbeFamily, canonical_cond1_map, check_map, constant_pd, coproduct_pd,
                        cotensor_compat_check, dia1, ho_map, homotopy_pd, identity_pd_map,
                        is_iso_pd_map, nerve_to_underlying, product_pd, representable_pd,
                        sset_to_underlying, underlying_sset, validate_prederivator)
from pdcalc.sset import (is_levelwise_bijective, nerve, nerve_map, sset_coproduct,
                         standard_simplex, validate_map, validate_sset)
from test_fincat import small_posets

B = 3
SQ = product(ordinal(1), ordinal(1)).category


def as_poset(c):
    return list(c.objects), {(c.src[f], c.tgt[f]) for f in range(c.n_mor)}


def test_representable_values():
    d = representable_pd(ordinal(2))
    assert d.eval(span()).n_obj == count_monotone(span_poset(), chain(2)) == 14
    c = d.eval(SQ)
    assert (c.n_obj, c.n_mor) == (20, 168)
    assert find_isomorphism(c, functor_category(SQ, ordinal(2))) is not None


def test_homotopy_pd_matches_representable_on_nerves():
    h = homotopy_pd(nerve(ordinal(2), B))
    d = representable_pd(ordinal(2))
    for J in (ordinal(0), ordinal(1), span(), SQ):
        a, b = h.eval(J), d.eval(J)
        assert (a.n_obj, a.n_mor) == (b.n_obj, b.n_mor)
        assert find_isomorphism(a, b) is not None


@pytest.mark.parametrize("make", [
    lambda: representable_pd(ordinal(2)),
    lambda: representable_pd(span()),
    lambda: homotopy_pd(nerve(ordinal(1), B)),
    lambda: constant_pd(ordinal(1)),
    lambda: coproduct_pd([homotopy_pd(nerve(ordinal(1), B)), representable_pd(ordinal(0))]),
    lambda: product_pd(representable_pd(ordinal(1)), constant_pd(ordinal(1))),
], ids=["D[2]", "DΓ", "HoN[1]", "const", "coprod", "product"])
def test_strict_functoriality(make):
    assert validate_prederivator(make()) is None


def test_underlying_sset_of_representable_is_the_nerve():
    for k in (ordinal(2), span(), SQ, iso_interval()):
        f = nerve_to_underlying(k, B)
        assert validate_map(f) is None and is_levelwise_bijective(f)


def test_underlying_sset_of_homotopy_pd_is_the_input():
    d1 = standard_simplex(1, B)
    for x in (nerve(ordinal(2), B), nerve(span(), B), sset_coproduct(d1, d1)[0]):
        f = sset_to_underlying(x)
        assert validate_map(f) is None and is_levelwise_bijective(f)
        assert validate_sset(underlying_sset(homotopy_pd(x), B)) is None


def test_dia1_examples():
    assert dia1(representable_pd(ordinal(1)), ordinal(0)) == list(range(3))
    assert dia1(homotopy_pd(nerve(ordinal(1), B)), ordinal(0)) == list(range(3))
    # constant prederivator: every object of [1]×[0] goes to an identity
    assert dia1(constant_pd(ordinal(1)), ordinal(0)) == [0, 2]


def test_condition1_map_for_coproduct_fixture():
    d = coproduct_pd([homotopy_pd(nerve(ordinal(1), B)), representable_pd(ordinal(0))])
    J = coproduct(ordinal(0), ordinal(0)).category
    cm = canonical_cond1_map(d, J, B)
    # objects: 2*2 + 1, maps: 3 vertices of R squared
    assert len(cm.maps) == 5
    assert len(cm.target.cells[0]) ** 2 == 9


def test_cotensor_compatibility():
    r = cotensor_compat_check(nerve(ordinal(2), B), ordinal(1), [ordinal(0), ordinal(1)])
    assert r.passed
    assert r.result("[1]").detail["left_objects"] == r.result("[1]").detail["right_objects"] == 20


def test_probe_family_errors():
    with pytest.raises(FormatError):
        ProbeFamily([codiscrete(2)])
    with pytest.raises(FormatError):
        ProbeFamily([ordinal(0)], auto_close=False)
    fam = ProbeFamily([ordinal(0)], auto_close=False, closure=[ordinal(1), ordinal(2)])
    assert fam.names() == ["[0]"]


def test_default_probe_family():
    fam = ProbeFamily()
    assert fam.names() == ["[0]", "[1]", "[2]", "[3]", "Γ", "[1]×[1]", "[0]⊔[0]", "[1]⊔[1]"]
    assert len(fam.auxiliary) == 3 * len(fam.names())


def test_ho_map_is_natural_and_identity_is_iso():
    proj = nerve_map(product(ordinal(1), ordinal(1)).first, B)
    assert check_map(ho_map(proj)) is None
    fam = ProbeFamily([ordinal(0), ordinal(1)])
    assert is_iso_pd_map(identity_pd_map(representable_pd(span())), fam)


@settings(max_examples=15)
@given(small_posets(3), st.sampled_from([0, 1, 2]))
def test_representable_and_homotopy_objects_match_brute_force(J, k):
    K = ordinal(k)
    expected = count_monotone(as_poset(J), chain(k))
    assert representable_pd(K).n_objects(J) == expected
    assert homotopy_pd(nerve(K, B)).n_objects(J) == expected


@settings(max_examples=25)
@given(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.data())
def test_restriction_is_contravariantly_functorial(a, b, c, data):
    u = data.draw(st.sampled_from(enumerate_functors(ordinal(a), ordinal(b))))
    w = data.draw(st.sampled_from(enumerate_functors(ordinal(c), ordinal(a))))
    for d in (representable_pd(span()), homotopy_pd(nerve(ordinal(1), B)), constant_pd(SQ)):
        ru, rw = d.restrict_objects(u), d.restrict_objects(w)
        assert d.restrict_objects(compose_functors(u, w)) == tuple(rw[x] for x in ru)


@settings(max_examples=10)
@given(st.sampled_from([ordinal(0), ordinal(1), span()]))
def test_product_pd_objects_multiply(J):
    a, b = representable_pd(ordinal(1)), representable_pd(ordinal(2))
    assert product_pd(a, b).n_objects(J) == a.n_objects(J) * b.n_objects(J)
    assert a.n_objects(J) == count_monotone(as_poset(J), chain(1))
    assert product_pd(a, b).n_objects(J) == count_monotone(as_poset(J), poset_product(chain(1), chain(2)))
