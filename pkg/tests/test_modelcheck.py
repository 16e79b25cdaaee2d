import pytest

from pdcalc import config
from pdcalc.acceptance import codiscrete_equivalence, positive_fixtures
from pdcalc.errors import FormatError, InvalidCertificate
from pdcalc.fincat import CatFunctor, iso_interval, ordinal, product, span
from pdcalc.lkan import L_eval_objects, horn_pd
from pdcalc.modelcheck import (Certificate, constant_homotopy, cofibration_object_injectivity,
                               equivalence_lifting_witness, is_acyclic_fibration_pd,
                               is_fibrant_pd, is_fibration_between_fibrant,
                               weq_levelwise_equivalence)
from pdcalc.pdv import ProbeFamily, ho_map, identity_pd_map
from pdcalc.report import FAIL, PASS
from pdcalc.sset import (boundary, hom_set, horn, identity_map, inclusion, nerve, nerve_map,
                         standard_simplex, terminal_map)

B = config.DEFAULT_BOUND
SMALL = ProbeFamily([ordinal(0), ordinal(1), ordinal(2)])


def collapse_1():
    return nerve_map(CatFunctor(ordinal(1), ordinal(0), [0, 0], [0, 0, 0]), B)


def projection():
    p = product(ordinal(1), ordinal(1))
    return nerve_map(p.first, B)


def vertex_in_iso():
    I = iso_interval()
    return nerve_map(CatFunctor(ordinal(0), I, [0], [I.identity[0]]), B)


@pytest.mark.parametrize("name", sorted(positive_fixtures()))
def test_fixtures_fibrant(name):
    rep = is_fibrant_pd(positive_fixtures()[name])
    assert rep.verdict == PASS
    assert rep.notes


def test_horn_not_fibrant():
    rep = is_fibrant_pd(horn_pd(2, 1, B))
    bad = rep.first_failure()
    assert bad is not None and bad.probe == "Λ^1[2]"


def test_fibration_identity_and_projection():
    phi = identity_pd_map(positive_fixtures()["Ho N[2]"])
    rep = is_fibration_between_fibrant(phi)
    assert rep.passed and rep.to_dict()["verdict"] == "pass (approximate)"
    rep = is_fibration_between_fibrant(ho_map(projection()))
    assert rep.to_dict()["verdict"] == "pass (approximate)"


def test_vertex_into_free_isomorphism_fails_only_equivalence_lifting():
    f = vertex_in_iso()
    rep = is_fibration_between_fibrant(ho_map(f))
    failed = [r.probe for r in rep.results if r.verdict == FAIL]
    assert failed == ["equivalence lifting"]
    assert equivalence_lifting_witness(f) is not None


def test_fibration_precondition():
    rep = is_fibration_between_fibrant(identity_pd_map(horn_pd(2, 1, B)))
    assert rep.verdict == FAIL
    assert rep.results[0].probe == "precondition:source"


def test_acyclic_fibrations():
    N2 = nerve(ordinal(2), B)
    assert is_acyclic_fibration_pd(ho_map(identity_map(N2))).passed
    bad = is_acyclic_fibration_pd(ho_map(collapse_1())).first_failure()
    assert bad is not None and set(bad.witness) == {"top", "bottom"}
    f, _ = codiscrete_equivalence()
    assert is_acyclic_fibration_pd(ho_map(f)).passed


@pytest.mark.parametrize("make", [lambda: identity_map(nerve(ordinal(2), B)), collapse_1,
                                  projection, vertex_in_iso,
                                  lambda: codiscrete_equivalence()[0],
                                  lambda: terminal_map(nerve(ordinal(1), B))],
                         ids=["identity", "collapse", "projection", "vertex", "codiscrete", "terminal"])
def test_acyclic_fibration_implies_fibration(make):
    phi = ho_map(make())
    if is_acyclic_fibration_pd(phi).passed:
        assert is_fibration_between_fibrant(phi).passed


@pytest.mark.parametrize("a,n", [(horn(2, 1, B), 2), (boundary(1, B), 1), (standard_simplex(2, B), 2),
                                 (horn(3, 2, B), 3), (boundary(3, B), 3)],
                         ids=["horn21", "boundary1", "identity", "horn32", "boundary3"])
def test_monos_injective_on_objects(a, n):
    rep = cofibration_object_injectivity(inclusion(a, standard_simplex(n, B)), SMALL)
    assert rep.passed
    assert [r.probe for r in rep.results] == SMALL.names()


def test_non_mono_refused():
    with pytest.raises(FormatError):
        cofibration_object_injectivity(collapse_1(), SMALL)


def test_certified_equivalences():
    f, cert = codiscrete_equivalence()
    assert weq_levelwise_equivalence(f, cert, SMALL).passed
    x = nerve(ordinal(2), B)
    i = identity_map(x)
    assert weq_levelwise_equivalence(i, Certificate(i, constant_homotopy(x), constant_homotopy(x)), SMALL).passed


def test_bad_certificates_refused():
    with pytest.raises(InvalidCertificate):
        weq_levelwise_equivalence(collapse_1(), None, SMALL)
    # [0] -> [1] admits no homotopy inverse; the collapse is the only candidate
    v = nerve_map(CatFunctor(ordinal(0), ordinal(1), [0], [0]), B)
    c = collapse_1()
    bogus = Certificate(c, constant_homotopy(v.dom), constant_homotopy(v.cod))
    with pytest.raises(InvalidCertificate):
        weq_levelwise_equivalence(v, bogus, SMALL)


@pytest.mark.parametrize("K", [ordinal(2), product(ordinal(1), ordinal(1)).category],
                         ids=["[2]", "[1]x[1]"])
def test_lifts_transport_at_object_level(K):
    H = horn(2, 1, B)
    NK = nerve(K, B)
    top = (0, 1, 2)
    for u in hom_set(H, NK):
        # sSet side: a filler of the horn in NK
        fillers = [s for s in NK.cells[2]
                   if NK.face[2][0][s] == u.at(1, (1, 2)) and NK.face[2][2][s] == u.at(1, (0, 1))]
        assert fillers
        objs = fillers[0][0]
        # prederivator side: the induced map Ob L(Δ[2])(j) -> Ob D_K(j) restricts to u
        for j in (ordinal(0), ordinal(1), span()):
            lo = L_eval_objects(H, j)
            for i, F in lo.elements:
                n, c = lo.nodes[i]
                via_lift = tuple(objs[top.index(c[x])] for x in F)
                direct = tuple(u.at(n, c)[0][x] for x in F)
                assert via_lift == direct
