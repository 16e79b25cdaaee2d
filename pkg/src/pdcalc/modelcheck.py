"""Finite shadows of the model structure on prederivators.

Lifting problems against L-images of inclusions A -> Δ[n] are transposed
along L ⊣ R, so fibrancy and (acyclic) fibrations are decided on underlying
simplicial sets by exhaustive lift search.  The lifting condition against
the free-living isomorphism cannot be decided at a finite truncation; it is
replaced by an equivalence-lifting test and such verdicts are marked
approximate.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from . import config
from .errors import FormatError, InvalidCertificate, NotAQuasicategory
from .fincat import (CatNatTransf, is_equivalence, ordinal)
from .hocat import HoResult, ho_quasicategory
from .lkan import L_class, L_eval_objects
from .pdv import (Prederivator, PrederivatorMap, ProbeFamily, ho_map, twocell_functor,
                  underlying_map, underlying_sset)
from .report import FAIL, PASS, CheckReport
from .sset import (SimplicialMap, TruncSSet, boundary_inclusions, compose_maps, has_rlp,
                   inner_horn_inclusions, is_levelwise_injective, sset_product,
                   standard_simplex, terminal_map, validate_map)


def _horn_rows(rep, p: SimplicialMap, n_max, bound):
    for (n, k), inc in inner_horn_inclusions(n_max, bound):
        res = has_rlp(p, inc)
        name = f"Λ^{k}[{n}]"
        if res:
            rep.add(name, PASS, squares=res.squares)
        else:
            u, v = res.witness
            rep.add(name, FAIL, {"top": u.images, "bottom": v.images})


def is_fibrant_pd(d: Prederivator, n_max: int = config.DEFAULT_NMAX,
                  bound: int = config.DEFAULT_BOUND) -> CheckReport:
    """Lifting against the inner horn inclusions, transposed to R(d)."""
    rep = CheckReport("fibrant")
    rep.notes.append("lifting against L-images of inner horns transposed to the underlying simplicial set")
    R = underlying_sset(d, bound)
    _horn_rows(rep, terminal_map(R), n_max, bound)
    return rep


def _invertible(h: HoResult, m: int) -> bool:
    c = h.category
    for g in c.hom(c.tgt[m], c.src[m]):
        if c.compose(g, m) == c.identity[c.src[m]] and c.compose(m, g) == c.identity[c.tgt[m]]:
            return True
    return False


def equivalence_lifting_witness(p: SimplicialMap):
    """First (vertex, 1-cell) where an invertible 1-cell of the target has no invertible lift."""
    X, Y = p.dom, p.cod
    hx, hy = ho_quasicategory(X), ho_quasicategory(Y)
    d1 = Y.face[1][1]
    for e in Y.cells[1]:
        if not _invertible(hy, hy.class_of[e]):
            continue
        for x in X.cells[0]:
            if p.at(0, x) != d1[e]:
                continue
            if not any(X.face[1][1][e2] == x and p.at(1, e2) == e and _invertible(hx, hx.class_of[e2])
                       for e2 in X.cells[1]):
                return x, e
    return None


def is_fibration_between_fibrant(phi: PrederivatorMap, n_max: int = config.DEFAULT_NMAX,
                                 bound: int = config.DEFAULT_BOUND) -> CheckReport:
    rep = CheckReport("fibration", approximate=True)
    rep.notes.append("(a) inner horn lifting is exact; (b) equivalence lifting is a necessary "
                     "finite condition standing in for lifting against the free isomorphism")
    for side, d in (("source", phi.dom), ("target", phi.cod)):
        if not is_fibrant_pd(d, n_max, bound):
            rep.add(f"precondition:{side}", FAIL, {"not fibrant": d.name})
            return rep
    p = underlying_map(phi, bound)
    _horn_rows(rep, p, n_max, bound)
    w = equivalence_lifting_witness(p)
    if w is None:
        rep.add("equivalence lifting", PASS)
    else:
        rep.add("equivalence lifting", FAIL, {"vertex": w[0], "edge": w[1]})
    return rep


def is_acyclic_fibration_pd(phi: PrederivatorMap, n_max: int = config.DEFAULT_NMAX,
                            bound: int = config.DEFAULT_BOUND) -> CheckReport:
    """Lifting against the boundary inclusions, transposed to R(phi)."""
    rep = CheckReport("acyclic_fibration")
    p = underlying_map(phi, bound)
    for n, inc in boundary_inclusions(n_max, bound):
        res = has_rlp(p, inc)
        name = f"∂Δ[{n}]" if n else "∅→Δ[0]"
        if res:
            rep.add(name, PASS, squares=res.squares)
        else:
            u, v = res.witness
            rep.add(name, FAIL, {"top": u.images, "bottom": v.images})
    return rep


def cofibration_object_injectivity(f: SimplicialMap, probes: Optional[ProbeFamily] = None) -> CheckReport:
    """Ob L(f)(j) is injective at every probe, for a monomorphism f."""
    if not is_levelwise_injective(f):
        raise FormatError("map is not a monomorphism", module="modelcheck", op="cofibration_object_injectivity")
    probes = probes or ProbeFamily()
    A, B = f.dom, f.cod
    rep = CheckReport("cofibration_object_injectivity")
    for j in probes.categories:
        la, lb = L_eval_objects(A, j), L_eval_objects(B, j)
        image = []
        for i, F in la.elements:
            n, c = la.nodes[i]
            image.append(L_class(B, lb, n, f.at(n, c), F))
        if len(set(image)) == len(image):
            rep.add(j.name, PASS, source=len(image), target=len(lb.elements))
        else:
            seen = {}
            for x, y in enumerate(image):
                if y in seen:
                    rep.add(j.name, FAIL, {"objects": [seen[y], x]})
                    break
                seen[y] = x
    return rep


# -- certified weak equivalences ------------------------------------------------------

class Certificate(NamedTuple):
    """Homotopy inverse g of f with homotopies gf ~ id and fg ~ id.

    ``hx`` is a map Δ[1]×X -> X restricting to gf at 0 and to the identity at 1;
    ``hy`` likewise for fg on Y.
    """
    inverse: SimplicialMap
    hx: SimplicialMap
    hy: SimplicialMap


def homotopy_from_transformation(alpha: CatNatTransf, bound: int = config.DEFAULT_BOUND) -> SimplicialMap:
    """The map Δ[1]×N(J) -> N(K) of a natural transformation between functors J -> K."""
    from .sset import nerve
    A = twocell_functor(alpha)
    J, K = alpha.source.dom, alpha.source.cod
    i1 = ordinal(1)
    dom = sset_product(standard_simplex(1, bound), nerve(J, bound)).sset

    def fn(n, cell):
        p, (objs, mors) = cell
        pobjs = [p[t] * J.n_obj + objs[t] for t in range(n + 1)]
        pmors = [i1.mor_id((p[t], p[t + 1])) * J.n_mor + mors[t] for t in range(n)]
        return tuple(A.obj_map[o] for o in pobjs), tuple(A.mor_map[g] for g in pmors)

    return SimplicialMap.from_function(dom, nerve(K, bound), fn)


def constant_homotopy(x: TruncSSet) -> SimplicialMap:
    dom = sset_product(standard_simplex(1, x.bound), x).sset
    return SimplicialMap.from_function(dom, x, lambda n, c: c[1])


def _validate_homotopy(h: SimplicialMap, start: SimplicialMap, x: TruncSSet, hx: HoResult, what):
    B = x.bound
    expected = sset_product(standard_simplex(1, B), x).sset
    if h.dom is not expected or h.cod is not x or validate_map(h) is not None:
        raise InvalidCertificate(f"{what} is not a map Δ[1]×X -> X", module="modelcheck", op="certificate")
    for n in range(B + 1):
        for c in x.cells[n]:
            if h.at(n, ((0,) * (n + 1), c)) != start.at(n, c):
                raise InvalidCertificate(f"{what} does not start at the composite", module="modelcheck",
                                         op="certificate")
            if h.at(n, ((1,) * (n + 1), c)) != c:
                raise InvalidCertificate(f"{what} does not end at the identity", module="modelcheck",
                                         op="certificate")
    for v in x.cells[0]:
        e = h.at(1, ((0, 1), x.degen[0][0][v]))
        if not _invertible(hx, hx.class_of[e]):
            raise InvalidCertificate(f"{what} has a non-invertible component at {v!r}",
                                     module="modelcheck", op="certificate")


def validate_certificate(f: SimplicialMap, cert: Certificate) -> None:
    X, Y = f.dom, f.cod
    g = cert.inverse
    if g.dom is not Y or g.cod is not X or validate_map(g) is not None:
        raise InvalidCertificate("inverse is not a map Y -> X", module="modelcheck", op="certificate")
    try:
        hx, hy = ho_quasicategory(X), ho_quasicategory(Y)
    except NotAQuasicategory as e:
        raise InvalidCertificate(f"endpoints must be quasicategories: {e}",
                                 module="modelcheck", op="certificate") from None
    _validate_homotopy(cert.hx, compose_maps(g, f), X, hx, "hx")
    _validate_homotopy(cert.hy, compose_maps(f, g), Y, hy, "hy")


def weq_levelwise_equivalence(f: SimplicialMap, certificate: Certificate,
                              probes: Optional[ProbeFamily] = None) -> CheckReport:
    """For a certified equivalence f, ho_map(f) is an equivalence at every probe."""
    if certificate is None:
        raise InvalidCertificate("no certificate given", module="modelcheck", op="weq_levelwise_equivalence")
    validate_certificate(f, certificate)
    probes = probes or ProbeFamily()
    phi = ho_map(f)
    rep = CheckReport("weq_levelwise_equivalence")
    for j in probes.categories:
        F = phi.component(j)
        if is_equivalence(F):
            rep.add(j.name, PASS, source=F.dom.n_obj, target=F.cod.n_obj)
        else:
            rep.add(j.name, FAIL, {"component": j.name})
    return rep
