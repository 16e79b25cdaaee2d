import pytest
from hypothesis import given, strategies as st

from oracles import (binomial_monotone, chain, count_monotone, poset_product, poset_sum,
                     random_dag_poset, span_poset, upper_pairs)
from pdcalc.errors import FormatError
from pdcalc.fincat import (CatFunctor, FinCat, codiscrete, coproduct, enumerate_functors,
                           enumerate_nat, find_isomorphism, functor_category, identity_functor,
                           is_equivalence, is_homotopy_finite, iso_interval, ordinal, poset,
                           product, span, validate_category, validate_functor)


def as_poset(c):
    els = list(c.objects)
    return els, {(c.src[f], c.tgt[f]) for f in range(c.n_mor)}


@st.composite
def small_posets(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    pairs = upper_pairs(n)
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    els, leq = random_dag_poset(n, chosen)
    return poset(els, sorted(p for p in leq if p[0] != p[1]), name=f"P{n}")


def test_ordinal_counts():
    for n in range(5):
        c = ordinal(n)
        assert (c.n_obj, c.n_mor) == (n + 1, (n + 1) * (n + 2) // 2)
        assert validate_category(c) is None


def test_standard_shapes_validate():
    for c in (span(), codiscrete(2), codiscrete(3), iso_interval(),
              product(ordinal(1), ordinal(1)).category, coproduct(ordinal(0), ordinal(1)).category):
        assert validate_category(c) is None


@pytest.mark.parametrize("m,n", [(0, 0), (0, 2), (1, 1), (1, 2), (2, 2), (2, 3), (3, 1)])
def test_functors_between_ordinals_match_monotone_count(m, n):
    fs = enumerate_functors(ordinal(m), ordinal(n))
    assert len(fs) == binomial_monotone(m, n) == count_monotone(chain(m), chain(n))


def test_functor_counts_against_brute_force():
    sq = product(ordinal(1), ordinal(1)).category
    assert len(enumerate_functors(span(), ordinal(1))) == count_monotone(span_poset(), chain(1)) == 5
    assert len(enumerate_functors(span(), sq)) == 25
    assert len(enumerate_functors(sq, ordinal(2))) == count_monotone(poset_product(chain(1), chain(1)), chain(2)) == 20


def test_functor_category_shapes():
    fc = functor_category(span(), ordinal(0))
    assert (fc.n_obj, fc.n_mor) == (1, 1)
    fc = functor_category(ordinal(1), ordinal(1))
    assert find_isomorphism(fc, ordinal(2)) is not None
    fc = functor_category(span(), ordinal(2))
    assert (fc.n_obj, fc.n_mor) == (14, 84)
    assert validate_category(fc) is None


def test_homotopy_finiteness():
    assert is_homotopy_finite(span())
    assert is_homotopy_finite(product(ordinal(2), span()).category)
    assert not is_homotopy_finite(codiscrete(2))
    assert not is_homotopy_finite(iso_interval())
    assert not is_homotopy_finite(product(ordinal(1), iso_interval()).category)


def test_equivalences():
    I = iso_interval()
    to_point = CatFunctor(I, ordinal(0), [0, 0], [0] * I.n_mor)
    assert is_equivalence(to_point)
    incl = CatFunctor(ordinal(0), ordinal(1), [0], [0])
    assert validate_functor(incl) is None
    assert not is_equivalence(incl)


def test_malformed_tables_are_format_errors():
    with pytest.raises(FormatError):
        FinCat([0], [1], [0], {})
    with pytest.raises(FormatError):
        FinCat([0, 0], [0, 0], [0], {(1, 1): 7})


def test_law_violation_is_reported_not_raised():
    # u∘id declared to be v
    c = FinCat([0, 1, 0, 0], [0, 1, 1, 1], [0, 1], {(2, 0): 3})
    bad = validate_category(c)
    assert bad is not None and bad.law == "unit"


def test_nat_transformations_between_ordinal_functors():
    # functors [0] -> [1] are the two points; one arrow between them
    a, b = enumerate_functors(ordinal(0), ordinal(1))
    assert len(enumerate_nat(a, b)) == 1
    assert len(enumerate_nat(b, a)) == 0


@given(small_posets())
def test_random_posets_are_valid_and_homotopy_finite(p):
    assert validate_category(p) is None
    assert is_homotopy_finite(p)


@given(small_posets(3), small_posets(3))
def test_functor_enumeration_matches_brute_force(p, q):
    fs = enumerate_functors(p, q)
    assert len(fs) == count_monotone(as_poset(p), as_poset(q))
    assert len({(F.obj_map, F.mor_map) for F in fs}) == len(fs)
    assert all(validate_functor(F) is None for F in fs)


@given(small_posets(3), small_posets(2), small_posets(2))
def test_product_universal_property_by_counting(t, a, b):
    ab = product(a, b).category
    assert len(enumerate_functors(t, ab)) == len(enumerate_functors(t, a)) * len(enumerate_functors(t, b))
    assert ab.n_obj == a.n_obj * b.n_obj
    assert len(enumerate_functors(t, ab)) == count_monotone(as_poset(t), poset_product(as_poset(a), as_poset(b)))


@given(small_posets(2), small_posets(2), small_posets(3))
def test_coproduct_universal_property_by_counting(a, b, t):
    ab = coproduct(a, b).category
    assert len(enumerate_functors(ab, t)) == len(enumerate_functors(a, t)) * len(enumerate_functors(b, t))
    assert count_monotone(poset_sum(as_poset(a), as_poset(b)), as_poset(t)) == len(enumerate_functors(ab, t))


@given(small_posets(3), small_posets(2))
def test_product_homotopy_finite_iff_factors(a, b):
    for x, y in ((a, b), (a, iso_interval()), (codiscrete(2), b)):
        assert is_homotopy_finite(product(x, y).category) == (is_homotopy_finite(x) and is_homotopy_finite(y))


@given(small_posets(3))
def test_identity_functor_and_isomorphism(p):
    assert validate_functor(identity_functor(p)) is None
    assert find_isomorphism(p, p) is not None


@given(small_posets(3))
def test_associativity_exhaustive(p):
    for f in range(p.n_mor):
        for g in range(p.n_mor):
            if p.src[g] != p.tgt[f]:
                continue
            for h in range(p.n_mor):
                if p.src[h] != p.tgt[g]:
                    continue
                assert p.compose(h, p.compose(g, f)) == p.compose(p.compose(h, g), f)
