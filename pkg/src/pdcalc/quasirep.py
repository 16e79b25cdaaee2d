"""Quasi-representability of prederivators over a probe family.

The three conditions are checked independently and per probe:

(1) objects of d(J) correspond to maps N(J) -> R(d);
(2) morphisms of d(J) are the coequalizer of the objects of d([1]×J)
    under the homotopy relation coming from d([2]×J), realised by dia1;
(3) R(d) is a quasicategory.

Verdicts are relative to the declared probes; nothing is claimed beyond them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from . import config
from .errors import (BoundError, ColimitNotCreated, NotQuasiRepresentable, ResourceError)
from .fincat import (CatFunctor, FinCat, compose_functors, identity_functor, is_isomorphism,
                     ordinal, product, validate_functor)
from .pdv import (Prederivator, PrederivatorMap, ProbeFamily, canonical_cond1_map,
                  codegeneracy, coface, dia1, functor_product, homotopy_pd, monotone_functor,
                  underlying_sset)
from .report import FAIL, INCONCLUSIVE, PASS, CheckReport, jsonable
from .sset import (SimplicialMap, _UnionFind, compose_maps, inner_horn_inclusions, iter_hom,
                   is_levelwise_bijective, nerve, has_rlp, standard_simplex,
                   terminal_map)


def _vertex_labels(d, f: SimplicialMap):
    labels = d.objects(ordinal(0))
    return [labels[f.at(0, v)] for v in f.dom.cells[0]]


def _guarded(rep, probe, fn):
    """Run one probe; budget exhaustion makes that probe inconclusive."""
    try:
        fn()
    except ResourceError as e:
        rep.add(probe, INCONCLUSIVE, {"resource": str(e)})
    except BoundError as e:
        rep.add(probe, INCONCLUSIVE, {"bound": str(e)})


# -- condition (1) --------------------------------------------------------------

def _cond1_probe(rep, d, j, bound):
    cm = canonical_cond1_map(d, j, bound)
    images = [m.images for m in cm.maps]
    first = {}
    for x, im in enumerate(images):
        if im in first:
            rep.add(j.name, FAIL, {"kind": "not injective", "objects": [first[im], x],
                                   "labels": [d.objects(j)[first[im]], d.objects(j)[x]]})
            return
        first[im] = x
    targets = 0
    for f in iter_hom(cm.source, cm.target):
        targets += 1
        if f.images not in first:
            rep.add(j.name, FAIL, {"kind": "not surjective", "map": f.images,
                                   "vertices": _vertex_labels(d, f)},
                    objects=len(images))
            return
    rep.add(j.name, PASS, objects=len(images), maps=targets)


def check_condition1(d: Prederivator, probes: Optional[ProbeFamily] = None,
                     bound: int = config.DEFAULT_BOUND) -> CheckReport:
    probes = probes or ProbeFamily()
    rep = CheckReport("condition1")
    for j in probes.categories:
        _guarded(rep, j.name, lambda: _cond1_probe(rep, d, j, bound))
    return rep


# -- condition (1') --------------------------------------------------------------

class OrdinalDiagram(NamedTuple):
    """A diagram of ordinals [n_i] with a cocone into ``target``.

    ``arrows`` are ``(a, b, values)``: a monotone map [n_a] -> [n_b].
    ``cocone[i]`` is a functor [n_i] -> target.
    """
    nodes: tuple
    arrows: tuple
    target: FinCat
    cocone: tuple


def square_diagram() -> OrdinalDiagram:
    """[2] <- [1] -> [2] glued along the long edges, with target [1]×[1]."""
    sq = product(ordinal(1), ordinal(1)).category

    def into(pairs):
        n = len(pairs) - 1
        om = [sq.obj_id(p) for p in pairs]
        o = ordinal(n)
        mm = [sq.hom(om[a], om[b])[0] for a, b in o.mor_labels]
        return CatFunctor(o, sq, om, mm)

    return OrdinalDiagram((2, 1, 2), ((1, 0, (0, 2)), (1, 2, (0, 2))), sq,
                          (into([(0, 0), (0, 1), (1, 1)]), into([(0, 0), (1, 1)]),
                           into([(0, 0), (1, 0), (1, 1)])))


def single_diagram(n: int) -> OrdinalDiagram:
    return OrdinalDiagram((n,), (), ordinal(n), (identity_functor(ordinal(n)),))


def verify_colimit_created(diag: OrdinalDiagram, bound: int = config.DEFAULT_BOUND) -> None:
    """Check colim Δ[n_i] ≅ N(target) through the cocone; raise otherwise."""
    tgt = nerve(diag.target, bound)
    for a, b, vals in diag.arrows:
        F = compose_functors(diag.cocone[b], monotone_functor(diag.nodes[a], diag.nodes[b], vals))
        if F != diag.cocone[a]:
            raise ColimitNotCreated("cocone does not commute", module="quasirep", op="check_condition1_prime")
    for n in range(bound + 1):
        items = [(i, p) for i, m in enumerate(diag.nodes) for p in standard_simplex(m, bound).cells[n]]
        uf = _UnionFind(items)
        for a, b, vals in diag.arrows:
            for p in standard_simplex(diag.nodes[a], bound).cells[n]:
                uf.union((a, p), (b, tuple(vals[v] for v in p)))
        image = {}
        for i, p in items:
            F = diag.cocone[i]
            objs = tuple(F.obj_map[v] for v in p)
            mors = tuple(F.mor_map[ordinal(diag.nodes[i]).mor_id((s, t))] for s, t in zip(p, p[1:]))
            cls = uf.find((i, p))
            if image.setdefault(cls, (objs, mors)) != (objs, mors):
                raise ColimitNotCreated("cocone is not well defined on the colimit",
                                        module="quasirep", op="check_condition1_prime")
        if len(image) != len(tgt.cells[n]) or len(set(image.values())) != len(image):
            raise ColimitNotCreated(f"colimit differs from the nerve of {diag.target.name} in dimension {n}",
                                    module="quasirep", op="check_condition1_prime")


def check_condition1_prime(d: Prederivator, diagram: OrdinalDiagram,
                           bound: int = config.DEFAULT_BOUND) -> CheckReport:
    """Ob d(target) -> lim Ob d([n_i]) is a bijection."""
    verify_colimit_created(diagram, bound)
    rep = CheckReport("condition1_prime")
    nodes = diagram.nodes
    restr = [d.restrict_objects(F) for F in diagram.cocone]
    along = [(a, b, d.restrict_objects(monotone_functor(nodes[a], nodes[b], vals)))
             for a, b, vals in diagram.arrows]
    sizes = [d.n_objects(ordinal(n)) for n in nodes]
    # enumerate the limit by backtracking over the nodes
    limit = []
    choice = [None] * len(nodes)

    def go(i):
        if i == len(nodes):
            limit.append(tuple(choice))
            return
        for x in range(sizes[i]):
            choice[i] = x
            if all(r[choice[b]] == choice[a] for a, b, r in along if max(a, b) == i):
                go(i + 1)
        choice[i] = None

    go(0)
    left = [tuple(r[x] for r in restr) for x in range(d.n_objects(diagram.target))]
    name = f"{diagram.target.name}"
    lset = set(limit)
    if len(set(left)) != len(left):
        seen = {}
        for x, v in enumerate(left):
            if v in seen:
                rep.add(name, FAIL, {"kind": "not injective", "objects": [seen[v], x]},
                        left=len(left), right=len(limit))
                return rep
            seen[v] = x
    missing = [t for t in limit if t not in set(left)]
    if missing:
        rep.add(name, FAIL, {"kind": "not surjective", "family": missing[0]},
                left=len(left), right=len(limit))
    elif not set(left) <= lset:
        rep.add(name, FAIL, {"kind": "not a cone"}, left=len(left), right=len(limit))
    else:
        rep.add(name, PASS, left=len(left), right=len(limit))
    return rep


# -- condition (2) ----------------------------------------------------------------

def cond2_data(d: Prederivator, j: FinCat):
    """Classes of Ob d([1]×j) under the relation generated by 2-simplices."""
    J = lambda i: product(ordinal(i), j).category
    idj = identity_functor(j)
    s0 = d.restrict_objects(functor_product(codegeneracy(0, 0), idj))
    d0, d1, d2 = (d.restrict_objects(functor_product(coface(2, i), idj)) for i in range(3))
    n1 = d.n_objects(J(1))
    uf = _UnionFind(list(range(n1)))
    degenerate = set(s0)
    for s in range(d.n_objects(J(2))):
        if d2[s] in degenerate:
            uf.union(d0[s], d1[s])
    return uf, n1


def _cond2_probe(rep, d, j):
    uf, n1 = cond2_data(d, j)
    dia = dia1(d, j)
    mor = d.eval(j).n_mor
    classes = {}
    for y in range(n1):
        classes.setdefault(uf.find(y), []).append(y)
    detail = {"coequalizer": len(classes), "morphisms": mor}
    hit = set(dia)
    for root in sorted(classes):
        vals = {dia[y] for y in classes[root]}
        if len(vals) > 1:
            ys = classes[root]
            a = ys[0]
            b = next(y for y in ys if dia[y] != dia[a])
            rep.add(j.name, FAIL, {"kind": "dia1 separates related objects", "objects": [a, b]}, **detail)
            return
    by_value = {}
    for root in sorted(classes):
        v = dia[classes[root][0]]
        if v in by_value:
            rep.add(j.name, FAIL, {"kind": "dia1 identifies unrelated objects",
                                   "objects": [classes[by_value[v]][0], classes[root][0]]}, **detail)
            return
        by_value[v] = root
    missing = [m for m in range(mor) if m not in hit]
    if missing:
        c = d.eval(j)
        m = missing[0]
        rep.add(j.name, FAIL, {"kind": "dia1 not surjective", "morphism": m,
                               "source": c.src[m], "target": c.tgt[m]}, **detail)
        return
    rep.add(j.name, PASS, **detail)


def check_condition2(d: Prederivator, probes: Optional[ProbeFamily] = None) -> CheckReport:
    probes = probes or ProbeFamily()
    rep = CheckReport("condition2")
    for j in probes.categories:
        _guarded(rep, j.name, lambda: _cond2_probe(rep, d, j))
    return rep


# -- condition (3) -----------------------------------------------------------------

def check_condition3(d: Prederivator, n_max: int = config.DEFAULT_NMAX,
                     bound: int = config.DEFAULT_BOUND) -> CheckReport:
    rep = CheckReport("condition3", approximate=True)
    rep.notes.append(f"inner horns checked up to dimension {n_max} at truncation {bound}")

    def run():
        R = underlying_sset(d, bound)
        t = terminal_map(R)
        for (n, k), inc in inner_horn_inclusions(n_max, bound):
            res = has_rlp(t, inc)
            name = f"Λ^{k}[{n}]"
            if res:
                rep.add(name, PASS)
            else:
                rep.add(name, FAIL, {"horn": [n, k], "map": res.witness[0].images})
    _guarded(rep, "R", run)
    return rep


# -- combined --------------------------------------------------------------------------

@dataclass
class QRReport:
    reports: dict = field(default_factory=dict)
    probes: list = field(default_factory=list)

    @property
    def failing(self) -> list:
        return [k for k, r in self.reports.items() if r.verdict == FAIL]

    @property
    def inconclusive(self) -> list:
        return [k for k, r in self.reports.items() if r.verdict == INCONCLUSIVE]

    @property
    def verdict(self) -> str:
        if self.failing:
            return FAIL
        if self.inconclusive:
            return INCONCLUSIVE
        return PASS

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def rows(self) -> list:
        out = []
        for k, r in self.reports.items():
            for p in r.results:
                row = {"check": k, "probe": p.probe, "verdict": p.verdict}
                if p.witness is not None:
                    row["witness"] = jsonable(p.witness)
                out.append(row)
        return out

    def to_dict(self):
        return {"verdict": self.verdict, "failing": self.failing, "probes": self.probes,
                "results": self.rows()}


def check_quasi_representable(d: Prederivator, probes: Optional[ProbeFamily] = None,
                              bound: int = config.DEFAULT_BOUND,
                              n_max: int = config.DEFAULT_NMAX) -> QRReport:
    probes = probes or ProbeFamily()
    return QRReport({"condition1": check_condition1(d, probes, bound),
                     "condition2": check_condition2(d, probes),
                     "condition3": check_condition3(d, n_max, bound)}, probes.names())


def _require(d, probes, bound, n_max, op):
    rep = check_quasi_representable(d, probes, bound, n_max)
    if not rep.passed:
        err = NotQuasiRepresentable(
            f"{d.name} is not quasi-representable: {', '.join(rep.failing or rep.inconclusive)}",
            failing=rep.failing or rep.inconclusive, module="quasirep", op=op)
        err.inconclusive = not rep.failing
        raise err
    return rep


# -- transport along R -----------------------------------------------------------------

def _object_lookup(d: Prederivator, j: FinCat, bound):
    cm = canonical_cond1_map(d, j, bound)
    return cm, {m.images: x for x, m in enumerate(cm.maps)}


def _transfer(d, e, f: SimplicialMap, j, bound):
    """Functor d(j) -> e(j) induced by f: R(d) -> R(e) through conditions (1) and (2)."""
    cmd, _ = _object_lookup(d, j, bound)
    _, look_e = _object_lookup(e, j, bound)
    om = [look_e[compose_maps(f, m).images] for m in cmd.maps]
    J1 = product(ordinal(1), j).category
    cmd1, _ = _object_lookup(d, J1, bound)
    _, look_e1 = _object_lookup(e, J1, bound)
    dia_d, dia_e = dia1(d, j), dia1(e, j)
    pick = {}
    for y, m in enumerate(dia_d):
        pick.setdefault(m, y)
    mm = []
    for m in d.eval(j).morphisms:
        y = pick[m]
        y2 = look_e1[compose_maps(f, cmd1.maps[y]).images]
        mm.append(dia_e[y2])
    return CatFunctor(d.eval(j), e.eval(j), om, mm)


def r_reflects_iso(d: Prederivator, e: Prederivator, iso: SimplicialMap,
                   probes: Optional[ProbeFamily] = None, bound: int = config.DEFAULT_BOUND,
                   n_max: int = config.DEFAULT_NMAX):
    """Lift a levelwise bijection R(d) -> R(e) to an isomorphism d -> e on the probes.

    Returns ``(report, map)``; refuses unless both sides are quasi-representable.
    """
    probes = probes or ProbeFamily()
    _require(d, probes, bound, n_max, "r_reflects_iso")
    _require(e, probes, bound, n_max, "r_reflects_iso")
    if not is_levelwise_bijective(iso):
        raise NotQuasiRepresentable("the given map of underlying simplicial sets is not invertible",
                                    module="quasirep", op="r_reflects_iso")
    rep = CheckReport("r_reflects_iso")
    comps = {}
    for j in probes.categories:
        F = _transfer(d, e, iso, j, bound)
        comps[j] = F
        ok = validate_functor(F) is None and is_isomorphism(F)
        rep.add(j.name, PASS if ok else FAIL, None if ok else {"component": j.name},
                objects=F.dom.n_obj, morphisms=F.dom.n_mor)
    phi = PrederivatorMap(d, e, lambda J: comps[J].obj_map if J in comps else
                          _transfer(d, e, iso, J, bound).obj_map,
                          lambda J: comps[J] if J in comps else _transfer(d, e, iso, J, bound))
    from .pdv import check_map
    bad = check_map(phi, probes)
    if bad is not None:
        rep.add("naturality", FAIL, str(bad))
    else:
        rep.add("naturality", PASS)
    return rep, phi


def reconstruct(d: Prederivator, probes: Optional[ProbeFamily] = None,
                bound: int = config.DEFAULT_BOUND, n_max: int = config.DEFAULT_NMAX):
    """Ho(R d) together with probe-wise isomorphisms d(j) ≅ Ho(R d)(j)."""
    probes = probes or ProbeFamily()
    _require(d, probes, bound, n_max, "reconstruct")
    R = underlying_sset(d, bound)
    h = homotopy_pd(R)
    rep = CheckReport("reconstruct")
    isos = {}
    i1 = ordinal(1)
    for j in probes.categories:
        cm = canonical_cond1_map(d, j, bound)
        idx = h.index(j)
        dom0 = h.domain(j, 0)
        om = [idx[tuple(m.at(n, chain) for n, (_, chain) in dom0.nd_cells)] for m in cm.maps]
        J1 = product(i1, j).category
        cm1 = canonical_cond1_map(d, J1, bound)
        dom1 = h.domain(j, 1)
        hj = h.ho(j)
        nj, mj = j.n_obj, j.n_mor

        def edge(y):
            f = cm1.maps[y]
            key = []
            for n, (p, (objs, mors)) in dom1.nd_cells:
                chain = (tuple(p[t] * nj + objs[t] for t in range(n + 1)),
                         tuple(i1.mor_id((p[t], p[t + 1])) * mj + mors[t] for t in range(n)))
                key.append(f.at(n, chain))
            return hj.class_of[tuple(key)]

        pick = {}
        for y, m in enumerate(dia1(d, j)):
            pick.setdefault(m, y)
        mm = [edge(pick[m]) for m in d.eval(j).morphisms]
        F = CatFunctor(d.eval(j), hj.category, om, mm)
        ok = validate_functor(F) is None and is_isomorphism(F)
        isos[j.name] = F
        rep.add(j.name, PASS if ok else FAIL, None if ok else {"component": j.name},
                objects=F.dom.n_obj, morphisms=F.dom.n_mor)
    return h, isos, rep
