"""The left adjoint L of R, evaluated pointwise at probe categories.

L(X)(J) is the colimit of [n_σ]^J over the nondegenerate simplices σ of X.
Objects of the colimit are computed exactly (union-find over tagged
functors); the category structure goes through the bounded congruence
solver shared with the presented homotopy category.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from . import config
from .errors import WordBoundExceeded
from .fincat import CatFunctor, FinCat, enumerate_functors, ordinal, product, span
from .pdv import (Prederivator, PrederivatorMap, coface, codegeneracy, representable_pd)
from .presentation import present
from .report import FAIL, PASS, CheckReport
from .sset import (SimplicialMap, TruncSSet, boundary, horn, is_levelwise_bijective, sset_product,
                   standard_simplex, validate_map, validate_sset, _UnionFind)


def _monotone_maps(j: FinCat, n: int) -> list:
    """Object tuples of the functors j -> [n]."""
    return [F.obj_map for F in enumerate_functors(j, ordinal(n))]


class LObjects(NamedTuple):
    elements: list     # class representatives (σ position, object tuple of j -> [n_σ])
    cocone: dict       # (σ position, tuple) -> class index
    nodes: list        # nd cells (n, σ) of x


def L_eval_objects(x: TruncSSet, j: FinCat, full: bool = False) -> LObjects:
    """Ob of L(x)(j), with the cocone from each Ob([n_σ]^j).

    ``full`` uses every simplex and both faces and degeneracies instead of
    the nondegenerate diagram; it exists to cross-check the shortcut.
    """
    nodes = [(n, c) for n in range(x.bound + 1) for c in x.cells[n]] if full else list(x.nd_cells)
    pos = {node: i for i, node in enumerate(nodes)}
    maps = {}
    items = []
    for i, (n, _) in enumerate(nodes):
        if n not in maps:
            maps[n] = _monotone_maps(j, n)
        items += [(i, F) for F in maps[n]]
    uf = _UnionFind(items)
    for i, (n, c) in enumerate(nodes):
        if n == 0:
            continue
        for k in range(n + 1):
            face = x.face[n][k][c]
            if full:
                target, eta = pos[(n - 1, face)], tuple(range(n))
            else:
                m, rho, eta = x.surjection(n - 1, face)
                target = pos[(m, rho)]
            for F in maps.get(n - 1) or _monotone_maps(j, n - 1):
                uf.union((i, tuple(v if v < k else v + 1 for v in F)),
                         (target, tuple(eta[v] for v in F)))
    if full:
        for i, (n, c) in enumerate(nodes):
            if n >= x.bound:
                continue
            if n + 1 not in maps:
                maps[n + 1] = _monotone_maps(j, n + 1)
            for k in range(n + 1):
                up = pos[(n + 1, x.degen[n][k][c])]
                for F in maps[n + 1]:
                    uf.union((i, tuple(v if v <= k else v - 1 for v in F)), (up, F))
    reps = []
    seen = {}
    cocone = {}
    for it in items:
        r = uf.find(it)
        if r not in seen:
            seen[r] = len(reps)
            reps.append(r)
        cocone[it] = seen[r]
    return LObjects(reps, cocone, nodes)


def L_class(x: TruncSSet, lo: LObjects, n: int, cell, F) -> int:
    """Class of the element (cell, F) for an arbitrary (possibly degenerate) cell."""
    m, rho, eta = x.surjection(n, cell)
    return lo.cocone[(x.nd_position(m, rho), tuple(eta[v] for v in F))]


class LCategory(NamedTuple):
    category: FinCat
    objects: LObjects
    arrow_class: dict    # (σ, F, G) with F <= G -> morphism id
    reps: list           # morphism id -> (start object, tuple of arrows (σ, F, G))


def L_eval_category(x: TruncSSet, j: FinCat, word_bound: int = config.DEFAULT_WORD_BOUND) -> LCategory:
    """L(x)(j) as a category, by bounded congruence closure."""
    lo = L_eval_objects(x, j)
    nodes = lo.nodes
    maps = {}
    arrows = []
    for i, (n, _) in enumerate(nodes):
        if n not in maps:
            maps[n] = _monotone_maps(j, n)
        for F in maps[n]:
            for G in maps[n]:
                if F != G and all(a <= b for a, b in zip(F, G)):
                    arrows.append((i, F, G))
    uf = _UnionFind(arrows)
    collapse = set()
    for i, (n, c) in enumerate(nodes):
        if n == 0:
            continue
        for k in range(n + 1):
            m, rho, eta = x.surjection(n - 1, x.face[n][k][c])
            t = x.nd_position(m, rho)
            lower = maps.get(n - 1) or _monotone_maps(j, n - 1)
            for F in lower:
                for G in lower:
                    if F == G or not all(a <= b for a, b in zip(F, G)):
                        continue
                    up = (i, tuple(v if v < k else v + 1 for v in F), tuple(v if v < k else v + 1 for v in G))
                    down = (t, tuple(eta[v] for v in F), tuple(eta[v] for v in G))
                    if down[1] == down[2]:
                        collapse.add(up)
                    else:
                        uf.union(up, down)
    gen_roots = []
    gen_of = {}
    for a in arrows:
        r = uf.find(a)
        if r not in gen_of:
            gen_of[r] = len(gen_roots)
            gen_roots.append(r)
    collapsed = {gen_of[uf.find(a)] for a in collapse}

    def obj(i, F):
        return lo.cocone[(i, F)]

    gens = [((r[0], r[1], r[2]), obj(r[0], r[1]), obj(r[0], r[2])) for r in gen_roots]

    def word(i, F, G):
        if F == G:
            return (obj(i, F), ())
        return (obj(i, F), (gen_of[uf.find((i, F, G))],))

    relations = [((gens[g][1], (g,)), (gens[g][1], ())) for g in sorted(collapsed)]
    for i, (n, _) in enumerate(nodes):
        ms = maps[n]
        for F in ms:
            for G in ms:
                if F == G or not all(a <= b for a, b in zip(F, G)):
                    continue
                for H in ms:
                    if H == G or not all(a <= b for a, b in zip(G, H)):
                        continue
                    s, w1 = word(i, F, G)
                    _, w2 = word(i, G, H)
                    relations.append(((s, w1 + w2), word(i, F, H)))
    p = present(list(range(len(lo.elements))), gens, relations, word_bound,
                name=f"L({x.name})({j.name})", where="lkan")
    arrow_class = {a: p.word_class[word(*a)] for a in arrows}
    reps = [(s, tuple(gens[g][0] for g in w)) for s, w in p.reps]
    return LCategory(p.category, lo, arrow_class, reps)


# -- RL and the unit ------------------------------------------------------------

def RL_sset(x: TruncSSet) -> tuple:
    """R(L(x)) up to the bound of x, and the unit x -> RL(x)."""
    B = x.bound
    los = [L_eval_objects(x, ordinal(n)) for n in range(B + 1)]

    def restrict(n_from, lo_from, lo_to, fn):
        out = {}
        for c, (i, F) in enumerate(lo_from.elements):
            out[c] = lo_to.cocone[(i, fn(F))]
        return out

    cells = [list(range(len(lo.elements))) for lo in los]
    face = [None] + [[restrict(n, los[n], los[n - 1], lambda F, k=k: tuple(F[v] for v in coface(n, k).obj_map))
                      for k in range(n + 1)] for n in range(1, B + 1)]
    degen = [[restrict(n, los[n], los[n + 1], lambda F, k=k: tuple(F[v] for v in codegeneracy(n, k).obj_map))
              for k in range(n + 1)] for n in range(B)]
    RL = TruncSSet(B, cells, face, degen, name=f"RL({x.name})")
    unit = SimplicialMap.from_function(x, RL, lambda n, c: L_class(x, los[n], n, c, tuple(range(n + 1))))
    return RL, unit


def unit_check(x: TruncSSet) -> CheckReport:
    """Verify that the unit x -> RL(x) is a levelwise bijection."""
    rep = CheckReport("unit_check")
    RL, unit = RL_sset(x)
    bad = validate_sset(RL) or validate_map(unit)
    sizes = {"x": [len(l) for l in x.cells], "RL": [len(l) for l in RL.cells]}
    if bad is not None:
        rep.add(x.name, FAIL, str(bad), **sizes)
    elif not is_levelwise_bijective(unit):
        n = next(n for n in range(x.bound + 1)
                 if len({unit.at(n, c) for c in x.cells[n]}) != len(x.cells[n]) or
                 len(x.cells[n]) != len(RL.cells[n]))
        rep.add(x.name, FAIL, {"level": n}, **sizes)
    else:
        rep.add(x.name, PASS, **sizes)
    return rep


# -- Example: L does not preserve products --------------------------------------------

@dataclass
class ComparisonReport:
    dom_size: int
    cod_size: int
    injective: bool
    surjective: bool
    witness: tuple
    witness_missing: bool
    missing: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (self.dom_size == 23 and self.cod_size == 25 and self.injective
                and not self.surjective and self.witness_missing)

    def to_dict(self):
        return {"dom_size": self.dom_size, "cod_size": self.cod_size,
                "injective": self.injective, "surjective": self.surjective,
                "witness": [list(p) for p in self.witness],
                "witness_missing": self.witness_missing,
                "missing": [[list(p) for p in m] for m in self.missing]}


def product_comparison(j: FinCat, bound: int = config.DEFAULT_BOUND):
    """L(Δ1×Δ1)(j) -> Ob(([1]×[1])^j), sending (σ, F) to x ↦ σ(F x) componentwise."""
    d1 = standard_simplex(1, bound)
    x = sset_product(d1, d1).sset
    lo = L_eval_objects(x, j)
    image = {}
    for (i, F), cls in lo.cocone.items():
        n, (p, q) = lo.nodes[i]
        val = tuple((p[v], q[v]) for v in F)
        if image.setdefault(cls, val) != val:
            raise AssertionError(f"comparison is not well defined on class {cls}")
    return lo, [image[c] for c in range(len(lo.elements))]


def example_1_13() -> ComparisonReport:
    """L(Δ1×Δ1) -> L(Δ1)×L(Δ1) at the span: injective, not surjective."""
    g = span()
    lo, image = product_comparison(g)
    sq = product(ordinal(1), ordinal(1)).category
    cod = [tuple(sq.obj_labels[o] for o in F.obj_map) for F in enumerate_functors(g, sq)]
    witness = ((0, 0), (0, 1), (1, 0))
    missing = sorted(set(cod) - set(image))
    return ComparisonReport(len(image), len(cod), len(set(image)) == len(image),
                            set(image) >= set(cod), witness, witness not in set(image), missing)


# -- colimit-presented prederivators -------------------------------------------------

class ColimitPD(Prederivator):
    """L(x) as a prederivator.

    If the category-level colimit does not stabilise the evaluation degrades
    to a discrete category on the exact object set and ``objects_only`` is set.
    """

    tag = "colimit"

    def __init__(self, x: TruncSSet, word_bound=config.DEFAULT_WORD_BOUND):
        super().__init__(f"L({x.name})")
        self.x = x
        self.word_bound = word_bound
        self.objects_only = set()

    def tag_info(self):
        return (self.tag, self.x)

    def lobjects(self, J) -> LObjects:
        return self._cached(("lo", J), lambda: L_eval_objects(self.x, J))

    def lcategory(self, J):
        def build():
            try:
                return L_eval_category(self.x, J, self.word_bound)
            except WordBoundExceeded:
                self.objects_only.add(J.name)
                self.best_effort = True
                return None
        return self._cached(("lcat", J), build)

    def _objects(self, J):
        return list(self.lobjects(J).elements)

    def _eval(self, J):
        lc = self.lcategory(J)
        if lc is None:
            n = len(self.lobjects(J).elements)
            return FinCat(list(range(n)), list(range(n)), list(range(n)), {},
                          obj_labels=self._objects(J), name=f"{self.name}({J.name}) [objects only]")
        return lc.category

    def _restrict_objects(self, u):
        src, tgt = self.lobjects(u.cod), self.lobjects(u.dom)
        return [tgt.cocone[(i, tuple(F[v] for v in u.obj_map))] for i, F in src.elements]

    def _arrow(self, J, i, F, G):
        lc = self.lcategory(J)
        if F == G:
            return self.eval(J).identity[self.lobjects(J).cocone[(i, F)]]
        if lc is None:
            raise WordBoundExceeded(f"{self.name}({J.name}) is only known on objects",
                                    module="lkan", op="ColimitPD")
        return lc.arrow_class[(i, F, G)]

    def _restrict(self, u):
        src = self.eval(u.cod)
        lc = self.lcategory(u.cod)
        om = self.restrict_objects(u)
        if lc is None:
            mm = [self.eval(u.dom).identity[om[x]] for x in src.objects]
            return CatFunctor(src, self.eval(u.dom), om, mm)
        tgt = self.eval(u.dom)
        mm = []
        for m in src.morphisms:
            start, arrows = lc.reps[m]
            h = tgt.identity[om[start]]
            for i, F, G in arrows:
                h = tgt.compose(self._arrow(u.dom, i, tuple(F[v] for v in u.obj_map),
                                            tuple(G[v] for v in u.obj_map)), h)
            mm.append(h)
        return CatFunctor(src, tgt, om, mm)

    def _twocell_at(self, alpha, x):
        i, F = self.lobjects(alpha.source.cod).elements[x]
        u, v = alpha.source, alpha.target
        return self._arrow(u.dom, i, tuple(F[t] for t in u.obj_map), tuple(F[t] for t in v.obj_map))


def L_pd(x: TruncSSet, word_bound=config.DEFAULT_WORD_BOUND) -> ColimitPD:
    return ColimitPD(x, word_bound)


def horn_pd(n: int, k: int, bound: int = config.DEFAULT_BOUND) -> ColimitPD:
    return ColimitPD(horn(n, k, bound))


def boundary_pd(n: int, bound: int = config.DEFAULT_BOUND) -> ColimitPD:
    return ColimitPD(boundary(n, bound))


def inclusion_map(d: ColimitPD, n: int) -> PrederivatorMap:
    """The canonical map L(A) -> D_[n] for a simplicial subset A of Δ[n]."""
    e = representable_pd(ordinal(n))

    def objects(J):
        idx = e._index(J)
        out = []
        for i, F in d.lobjects(J).elements:
            sigma = d.x.nd_cells[i][1]
            G = tuple(sigma[v] for v in F)
            H = next(H for H in e.functors(J) if H.obj_map == G)
            out.append(idx[(H.obj_map, H.mor_map)])
        return out

    return PrederivatorMap(d, e, objects, name=f"{d.name} -> D_[{n}]")
