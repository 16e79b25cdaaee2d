"""Prederivators evaluated over a finite family of probe categories.

A :class:`Prederivator` is intensional: it knows how to compute its value at a
probe ``J``, how to restrict along a functor and how to act on a natural
transformation.  Objects of ``d(J)`` are addressed by their position in
``d.objects(J)``, which is always the object order of ``d.eval(J)``.  The
object-level methods are much cheaper than full evaluation and are all that
the auxiliary probes ``[i]×J`` ever need.

Convention on 2-cells: ``twocell(α)`` for ``α: u ⇒ v`` goes from
``restrict(u)`` to ``restrict(v)``; in particular ``dia1`` runs from the
restriction to endpoint 0 to the restriction to endpoint 1.
"""

from __future__ import annotations

import threading
from typing import NamedTuple, Optional

from . import config
from .errors import FormatError
from .fincat import (CatFunctor, CatNatTransf, FinCat, Violation, compose_functors, coproduct,
                     enumerate_functors, find_isomorphism, functor_category, identity_functor,
                     is_homotopy_finite, is_isomorphism, ordinal, product, span,
                     validate_functor, vertical_compose, whisker_left, whisker_right)
from .hocat import HoResult, ho_presented, ho_quasicategory
from .report import FAIL, PASS, CheckReport
from .sset import (SimplicialMap, TruncSSet, cell_map, chain_functor, exponential, iter_hom,
                   is_quasicategory_up_to, nerve, sset_product, standard_simplex, validate_map)


# -- functor plumbing -----------------------------------------------------------

def monotone_functor(m: int, n: int, values) -> CatFunctor:
    """The functor [m] -> [n] with the given (monotone) object values."""
    dom, cod = ordinal(m), ordinal(n)
    values = tuple(values)
    mm = [cod.mor_id((values[a], values[b])) for a, b in dom.mor_labels]
    return CatFunctor(dom, cod, values, mm)


def coface(n: int, i: int) -> CatFunctor:
    """δ^i: [n-1] -> [n], skipping i."""
    return monotone_functor(n - 1, n, [v if v < i else v + 1 for v in range(n)])


def codegeneracy(n: int, i: int) -> CatFunctor:
    """σ^i: [n+1] -> [n], hitting i twice."""
    return monotone_functor(n + 1, n, [v if v <= i else v - 1 for v in range(n + 2)])


def functor_product(F: CatFunctor, G: CatFunctor) -> CatFunctor:
    """F×G between the chosen products."""
    dom = product(F.dom, G.dom).category
    cod = product(F.cod, G.cod).category
    nb, mb = G.cod.n_obj, G.cod.n_mor
    om = [F.obj_map[x] * nb + G.obj_map[y] for x in F.dom.objects for y in G.dom.objects]
    mm = [F.mor_map[f] * mb + G.mor_map[g] for f in F.dom.morphisms for g in G.dom.morphisms]
    return CatFunctor(dom, cod, om, mm)


def endpoint_inclusion(j: FinCat, e: int) -> CatFunctor:
    """j -> [1]×j at endpoint e."""
    c = product(ordinal(1), j).category
    i1 = ordinal(1)
    idm = i1.identity[e]
    return CatFunctor(j, c, [e * j.n_obj + y for y in j.objects],
                      [idm * j.n_mor + g for g in j.morphisms])


def canonical_twocell(j: FinCat) -> CatNatTransf:
    """The 2-cell between the two endpoint inclusions j -> [1]×j."""
    arrow = ordinal(1).mor_id((0, 1))
    return CatNatTransf(endpoint_inclusion(j, 0), endpoint_inclusion(j, 1),
                        [arrow * j.n_mor + j.identity[y] for y in j.objects])


def twocell_functor(alpha: CatNatTransf) -> CatFunctor:
    """The functor [1]×J' -> J encoding α: u ⇒ v."""
    u, v = alpha.source, alpha.target
    jp, j = u.dom, u.cod
    i1 = ordinal(1)
    om = [(u if e == 0 else v).obj_map[y] for e in (0, 1) for y in jp.objects]
    mm = []
    for t in i1.morphisms:
        a, b = i1.mor_labels[t]
        for g in jp.morphisms:
            if a == b == 0:
                mm.append(u.mor_map[g])
            elif a == b == 1:
                mm.append(v.mor_map[g])
            else:
                mm.append(j.compose(v.mor_map[g], alpha.components[jp.src[g]]))
    return CatFunctor(product(i1, jp).category, j, om, mm)


def is_ordinal(c: FinCat) -> Optional[int]:
    """n when c is isomorphic to [n]."""
    n = c.n_obj - 1
    if n < 0 or c.n_mor != (n + 1) * (n + 2) // 2:
        return None
    return n if find_isomorphism(c, ordinal(n)) is not None else None


# -- probe families ----------------------------------------------------------------

def default_probes() -> list:
    o = ordinal
    return [o(0), o(1), o(2), o(3), span(), product(o(1), o(1)).category,
            coproduct(o(0), o(0)).category, coproduct(o(1), o(1)).category]


class ProbeFamily:
    """A finite family of homotopy finite probe categories.

    ``categories`` are the probes checks quantify over.  Products ``[i]×J``
    (i = 0, 1, 2) are part of the family as auxiliary probes; with
    ``auto_close`` they are added automatically, otherwise each one must be
    isomorphic to a listed category or an error is raised.
    """

    def __init__(self, categories=None, functors=(), auto_close=True, closure=()):
        cats = list(categories) if categories is not None else default_probes()
        listed = cats + list(closure)
        for c in listed:
            if not is_homotopy_finite(c):
                raise FormatError(f"probe {c.name} is not homotopy finite", module="pdv", op="ProbeFamily")
        self.categories = cats
        self.auxiliary = []
        for J in cats:
            for i in (0, 1, 2):
                P = product(ordinal(i), J).category
                if not auto_close and not any(
                        c.n_obj == P.n_obj and c.n_mor == P.n_mor and find_isomorphism(P, c) is not None
                        for c in listed):
                    raise FormatError(f"probe family is not closed: [{i}]×{J.name} is missing",
                                      module="pdv", op="ProbeFamily")
                self.auxiliary.append(P)
        self.auto_close = auto_close
        ords = sorted({n for n in (is_ordinal(c) for c in cats) if n is not None})
        self.ordinals = ords
        fs = []
        for a in ords:
            for b in ords:
                fs.extend(enumerate_functors(ordinal(a), ordinal(b)))
        for F in functors:
            if validate_functor(F) is not None:
                raise FormatError("probe functor is not a functor", module="pdv", op="ProbeFamily")
            fs.append(F)
        self.functors = fs

    def names(self) -> list:
        return [c.name for c in self.categories]

    def describe(self) -> dict:
        return {"probes": self.names(), "auxiliary": [c.name for c in self.auxiliary],
                "ordinals": self.ordinals}


# -- prederivators -----------------------------------------------------------------

class Prederivator:
    """Base class: subclasses implement the five ``_compute`` hooks."""

    tag = "prederivator"
    best_effort = False

    def __init__(self, name=None):
        self.name = name or self.tag
        self._memo = {}
        self._lock = threading.RLock()

    def _cached(self, key, fn):
        with self._lock:
            if key not in self._memo:
                self._memo[key] = fn()
            return self._memo[key]

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"

    def objects(self, J: FinCat) -> list:
        """Object labels of d(J), in the object order of ``eval(J)``."""
        return self._cached(("objects", J), lambda: self._objects(J))

    def n_objects(self, J: FinCat) -> int:
        return len(self.objects(J))

    def eval(self, J: FinCat) -> FinCat:
        return self._cached(("eval", J), lambda: self._eval(J))

    def restrict_objects(self, u: CatFunctor) -> tuple:
        """Object part of restrict(u), as positions: d(cod u) -> d(dom u)."""
        return self._cached(("robj", u), lambda: tuple(self._restrict_objects(u)))

    def restrict(self, u: CatFunctor) -> CatFunctor:
        return self._cached(("restrict", u), lambda: self._restrict(u))

    def twocell_at(self, alpha: CatNatTransf, x: int) -> int:
        """Component at object x of d(cod) of twocell(α), a morphism of d(dom)."""
        return self._twocell_at(alpha, x)

    def twocell(self, alpha: CatNatTransf) -> CatNatTransf:
        def build():
            J = alpha.source.cod
            return CatNatTransf(self.restrict(alpha.source), self.restrict(alpha.target),
                                [self.twocell_at(alpha, x) for x in range(self.n_objects(J))])
        return self._cached(("twocell", alpha), build)

    def tag_info(self):
        return (self.tag,)


class RepresentablePD(Prederivator):
    """J ↦ K^J."""

    tag = "representable"

    def __init__(self, k: FinCat):
        super().__init__(f"D_{k.name}")
        self.k = k

    def tag_info(self):
        return (self.tag, self.k)

    def functors(self, J):
        return self._cached(("functors", J), lambda: enumerate_functors(J, self.k))

    def _index(self, J):
        return self._cached(("index", J), lambda: {(F.obj_map, F.mor_map): i
                                                   for i, F in enumerate(self.functors(J))})

    def _objects(self, J):
        return [(F.obj_map, F.mor_map) for F in self.functors(J)]

    def _eval(self, J):
        return functor_category(J, self.k)

    def _restrict_objects(self, u):
        idx = self._index(u.dom)
        out = []
        for F in self.functors(u.cod):
            G = compose_functors(F, u)
            out.append(idx[(G.obj_map, G.mor_map)])
        return out

    def _restrict(self, u):
        src, tgt = self.eval(u.cod), self.eval(u.dom)
        mm = [tgt.morphism_of(whisker_left(src.transformation(m), u)) for m in src.morphisms]
        return CatFunctor(src, tgt, self.restrict_objects(u), mm)

    def _twocell_at(self, alpha, x):
        F = self.functors(alpha.source.cod)[x]
        t = whisker_right(F, alpha)
        return self.eval(alpha.source.dom).morphism_of(t)


class HomotopyPD(Prederivator):
    """J ↦ ho(X^{NJ}).

    Non-quasicategories are evaluated through the presented homotopy
    category and flagged with ``best_effort``.
    """

    tag = "homotopy"

    def __init__(self, x: TruncSSet, word_bound=config.DEFAULT_WORD_BOUND):
        super().__init__(f"Ho_{x.name}")
        self.x = x
        self.B = x.bound
        self.word_bound = word_bound
        self.is_quasicategory = x.bound >= 2 and is_quasicategory_up_to(x, min(x.bound, 3))
        self.best_effort = not self.is_quasicategory

    def tag_info(self):
        return (self.tag, self.x)

    def domain(self, J, n):
        """Δ[n]×NJ, whose maps into X are the n-cells of X^{NJ}."""
        return sset_product(standard_simplex(n, self.B), nerve(J, self.B)).sset

    def _objects(self, J):
        return [f.images for f in iter_hom(self.domain(J, 0), self.x)]

    def index(self, J):
        return self._cached(("index", J), lambda: {k: i for i, k in enumerate(self.objects(J))})

    def exponential(self, J):
        return exponential(self.x, nerve(J, self.B), 2)

    def ho(self, J) -> HoResult:
        def build():
            E = self.exponential(J)
            if self.is_quasicategory:
                h = ho_quasicategory(E, assume_quasicategory=True)
            else:
                h = ho_presented(E, self.word_bound)
            if list(E.cells[0]) != self.objects(J):
                raise AssertionError("object order mismatch")
            return h
        return self._cached(("ho", J), build)

    def _eval(self, J):
        return self.ho(J).category

    def transport(self, J, n, key, target, cellfn):
        """Precompose the n-cell ``key`` of X^{NJ} with a map ``target`` -> Δ[n]×NJ."""
        f = SimplicialMap(self.domain(J, n), self.x, key)
        return tuple(f.at(m, cellfn(m, c)) for m, c in target.nd_cells)

    def _along(self, u):
        def cellfn(m, c):
            p, (objs, mors) = c
            return p, (tuple(u.obj_map[o] for o in objs), tuple(u.mor_map[g] for g in mors))
        return cellfn

    def _restrict_objects(self, u):
        idx = self.index(u.dom)
        target = self.domain(u.dom, 0)
        fn = self._along(u)
        return [idx[self.transport(u.cod, 0, k, target, fn)] for k in self.objects(u.cod)]

    def _restrict(self, u):
        hs, ht = self.ho(u.cod), self.ho(u.dom)
        om = self.restrict_objects(u)
        target = self.domain(u.dom, 1)
        fn = self._along(u)
        mm = [_morphism_image(hs, ht, m, om,
                              lambda e: self.transport(u.cod, 1, e, target, fn))
              for m in hs.category.morphisms]
        return CatFunctor(hs.category, ht.category, om, mm)

    def _twocell_at(self, alpha, x):
        A = twocell_functor(alpha)
        jp = alpha.source.dom
        nj = jp.n_obj
        i1 = ordinal(1)
        key = self.objects(alpha.source.cod)[x]
        f = SimplicialMap(self.domain(alpha.source.cod, 0), self.x, key)
        target = self.domain(jp, 1)
        images = []
        for m, (p, (objs, mors)) in target.nd_cells:
            pobjs = tuple(p[t] * nj + objs[t] for t in range(m + 1))
            pmors = tuple(i1.mor_id((p[t], p[t + 1])) * jp.n_mor + mors[t] for t in range(m))
            chain = (tuple(A.obj_map[o] for o in pobjs), tuple(A.mor_map[g] for g in pmors))
            images.append(f.at(m, ((0,) * (m + 1), chain)))
        return self.ho(jp).class_of[tuple(images)]


def _morphism_image(hs: HoResult, ht: HoResult, m, obj_map, edge_fn):
    start, edges = hs.reps[m]
    c = ht.category
    h = c.identity[obj_map[start]]
    for e in edges:
        h = c.compose(ht.class_of[edge_fn(e)], h)
    return h


class ConstantPD(Prederivator):
    """J ↦ K with every restriction and 2-cell acting as the identity."""

    tag = "constant"

    def __init__(self, k: FinCat):
        super().__init__(f"const_{k.name}")
        self.k = k

    def tag_info(self):
        return (self.tag, self.k)

    def _objects(self, J):
        return list(self.k.obj_labels)

    def _eval(self, J):
        return self.k

    def _restrict_objects(self, u):
        return list(self.k.objects)

    def _restrict(self, u):
        return identity_functor(self.k)

    def _twocell_at(self, alpha, x):
        return self.k.identity[x]


def disjoint_union(cats, name=None) -> FinCat:
    src, tgt, ident, table, olab, mlab = [], [], [], {}, [], []
    oo = mo = 0
    for i, c in enumerate(cats):
        src += [s + oo for s in c.src]
        tgt += [t + oo for t in c.tgt]
        ident += [m + mo for m in c.identity]
        for (g, f), h in c.table_items():
            table[(g + mo, f + mo)] = h + mo
        olab += [(i, l) for l in c.obj_labels]
        mlab += [(i, l) for l in c.mor_labels]
        oo += c.n_obj
        mo += c.n_mor
    return FinCat(src, tgt, ident, table, obj_labels=olab, mor_labels=mlab, name=name)


class CoproductPD(Prederivator):
    """Pointwise disjoint union."""

    tag = "coproduct"

    def __init__(self, parts):
        parts = list(parts)
        super().__init__("⊔".join(p.name for p in parts))
        self.parts = parts
        self.best_effort = any(p.best_effort for p in parts)

    def tag_info(self):
        return (self.tag,) + tuple(p.tag_info() for p in self.parts)

    def offsets(self, J):
        out, k = [], 0
        for p in self.parts:
            out.append(k)
            k += p.n_objects(J)
        return out

    def component_of(self, J, x):
        """``(part, local position)`` of object x of d(J)."""
        offs = self.offsets(J)
        i = max(t for t, o in enumerate(offs) if o <= x and (t + 1 == len(offs) or offs[t + 1] > x))
        return i, x - offs[i]

    def _objects(self, J):
        return [(i, l) for i, p in enumerate(self.parts) for l in p.objects(J)]

    def _eval(self, J):
        return disjoint_union([p.eval(J) for p in self.parts], name=f"({self.name})({J.name})")

    def _restrict_objects(self, u):
        out = []
        offs = self.offsets(u.dom)
        for i, p in enumerate(self.parts):
            out += [o + offs[i] for o in p.restrict_objects(u)]
        return out

    def _restrict(self, u):
        src, tgt = self.eval(u.cod), self.eval(u.dom)
        mm = []
        base = 0
        for p in self.parts:
            mm += [m + base for m in p.restrict(u).mor_map]
            base += p.eval(u.dom).n_mor
        return CatFunctor(src, tgt, self.restrict_objects(u), mm)

    def _twocell_at(self, alpha, x):
        i, local = self.component_of(alpha.source.cod, x)
        base = sum(q.eval(alpha.source.dom).n_mor for q in self.parts[:i])
        return base + self.parts[i].twocell_at(alpha, local)


class ProductPD(Prederivator):
    """Pointwise product of two prederivators."""

    tag = "product"

    def __init__(self, a: Prederivator, b: Prederivator):
        super().__init__(f"{a.name}×{b.name}")
        self.a, self.b = a, b
        self.best_effort = a.best_effort or b.best_effort

    def tag_info(self):
        return (self.tag, self.a.tag_info(), self.b.tag_info())

    def _objects(self, J):
        return [(x, y) for x in self.a.objects(J) for y in self.b.objects(J)]

    def _eval(self, J):
        return product(self.a.eval(J), self.b.eval(J)).category

    def _restrict_objects(self, u):
        ra, rb = self.a.restrict_objects(u), self.b.restrict_objects(u)
        nb = self.b.n_objects(u.dom)
        return [x * nb + y for x in ra for y in rb]

    def _restrict(self, u):
        return functor_product(self.a.restrict(u), self.b.restrict(u))

    def _twocell_at(self, alpha, x):
        J, Jp = alpha.source.cod, alpha.source.dom
        xa, xb = divmod(x, self.b.n_objects(J))
        return (self.a.twocell_at(alpha, xa) * self.b.eval(Jp).n_mor
                + self.b.twocell_at(alpha, xb))


def product_pd(a: Prederivator, b: Prederivator) -> ProductPD:
    return ProductPD(a, b)


_pd_cache: dict = {}


def _memo_pd(key, holder, make):
    hit = _pd_cache.get(key)
    if hit is not None and hit[0] is holder:
        return hit[1]
    d = make()
    _pd_cache[key] = (holder, d)
    return d


def representable_pd(k: FinCat) -> RepresentablePD:
    return _memo_pd(("rep", k), None, lambda: RepresentablePD(k))


def homotopy_pd(x: TruncSSet, word_bound=config.DEFAULT_WORD_BOUND) -> HomotopyPD:
    return _memo_pd(("ho", id(x), word_bound), x, lambda: HomotopyPD(x, word_bound))


def constant_pd(k: FinCat) -> ConstantPD:
    return _memo_pd(("const", k), None, lambda: ConstantPD(k))


def coproduct_pd(ds) -> Prederivator:
    ds = list(ds)
    if len(ds) == 1:
        return ds[0]
    return CoproductPD(ds)


# -- maps of prederivators -----------------------------------------------------------

class PrederivatorMap:
    """Components ``dom(J) -> cod(J)`` computed on demand for each probe J."""

    def __init__(self, dom: Prederivator, cod: Prederivator, objects_fn, component_fn=None, name=None):
        self.dom, self.cod = dom, cod
        self._objects_fn = objects_fn
        self._component_fn = component_fn
        self.name = name
        self._memo = {}
        self._lock = threading.RLock()

    def object_component(self, J) -> tuple:
        with self._lock:
            key = ("obj", J)
            if key not in self._memo:
                self._memo[key] = tuple(self._objects_fn(J))
            return self._memo[key]

    def component(self, J) -> CatFunctor:
        with self._lock:
            key = ("full", J)
            if key not in self._memo:
                if self._component_fn is None:
                    raise NotImplementedError("this map is only defined on objects")
                self._memo[key] = self._component_fn(J)
            return self._memo[key]


def identity_pd_map(d: Prederivator) -> PrederivatorMap:
    return PrederivatorMap(d, d, lambda J: range(d.n_objects(J)),
                           lambda J: identity_functor(d.eval(J)), name="id")


def compose_pd_maps(g: PrederivatorMap, f: PrederivatorMap) -> PrederivatorMap:
    return PrederivatorMap(
        f.dom, g.cod,
        lambda J: [g.object_component(J)[x] for x in f.object_component(J)],
        lambda J: compose_functors(g.component(J), f.component(J)))


def ho_map(f: SimplicialMap) -> PrederivatorMap:
    """Ho(f): Ho_X -> Ho_Y, postcomposition with f at every probe."""
    d, e = homotopy_pd(f.dom), homotopy_pd(f.cod)

    def post(J, n, key):
        dom = d.domain(J, n)
        return tuple(f.at(m, key[k]) for k, (m, _) in enumerate(dom.nd_cells))

    def objects(J):
        idx = e.index(J)
        return [idx[post(J, 0, k)] for k in d.objects(J)]

    def component(J):
        hs, ht = d.ho(J), e.ho(J)
        om = objects(J)
        mm = [_morphism_image(hs, ht, m, om, lambda edge: post(J, 1, edge))
              for m in hs.category.morphisms]
        F = CatFunctor(hs.category, ht.category, om, mm)
        bad = validate_functor(F)
        if bad is not None:
            raise AssertionError(f"ho_map component at {J.name} is not a functor: {bad}")
        return F

    return PrederivatorMap(d, e, objects, component, name="ho_map")


def check_map(phi: PrederivatorMap, probes: Optional[ProbeFamily] = None) -> Optional[Violation]:
    """First naturality square (over the probe functors) that fails to commute."""
    probes = probes or ProbeFamily()
    for u in probes.functors:
        left = compose_functors(phi.cod.restrict(u), phi.component(u.cod))
        right = compose_functors(phi.component(u.dom), phi.dom.restrict(u))
        if left != right:
            return Violation("naturality", (u.obj_map, u.mor_map),
                             f"square for {u.dom.name} -> {u.cod.name} does not commute")
    return None


def is_iso_pd_map(phi: PrederivatorMap, probes: ProbeFamily) -> bool:
    return all(is_isomorphism(phi.component(J)) for J in probes.categories)


# -- validation -----------------------------------------------------------------------

def validate_prederivator(d: Prederivator, max_ordinal: int = 2) -> Optional[Violation]:
    """Strict 1- and 2-functoriality over ordinals up to ``max_ordinal``."""
    ords = range(max_ordinal + 1)
    fs = {(a, b): enumerate_functors(ordinal(a), ordinal(b)) for a in ords for b in ords}
    for a in ords:
        if d.restrict(identity_functor(ordinal(a))) != identity_functor(d.eval(ordinal(a))):
            return Violation("restrict(id) = id", (a,))
    for (a, b), us in fs.items():
        for u in us:
            for c in ords:
                for w in fs[(c, a)]:
                    lhs = d.restrict(compose_functors(u, w))
                    if lhs != compose_functors(d.restrict(w), d.restrict(u)):
                        return Violation("restrict(u∘w) = restrict(w)∘restrict(u)",
                                         (u.obj_map, w.obj_map))
    # 2-cells between monotone maps exist exactly when u <= v pointwise
    for (a, b), us in fs.items():
        cod = ordinal(b)
        cells = {}
        for u in us:
            for v in us:
                if all(x <= y for x, y in zip(u.obj_map, v.obj_map)):
                    cells[(u, v)] = CatNatTransf(u, v, [cod.mor_id((x, y)) for x, y in
                                                        zip(u.obj_map, v.obj_map)])
        for u in us:
            if d.twocell(cells[(u, u)]).components != tuple(
                    d.eval(ordinal(a)).identity[d.restrict(u).obj_map[x]]
                    for x in range(d.n_objects(ordinal(b)))):
                return Violation("twocell(id) = id", (u.obj_map,))
        for (u, v), al in cells.items():
            for (v2, w), be in cells.items():
                if v2 != v:
                    continue
                lhs = d.twocell(vertical_compose(be, al))
                rhs = vertical_compose(d.twocell(be), d.twocell(al))
                if lhs.components != rhs.components:
                    return Violation("twocell respects vertical composition",
                                     (u.obj_map, v.obj_map, w.obj_map))
            for c in ords:
                for h in fs[(c, a)]:
                    lhs = d.twocell(whisker_left(al, h))
                    rhs = whisker_right(d.restrict(h), d.twocell(al))
                    if lhs.components != rhs.components:
                        return Violation("twocell respects whiskering", (u.obj_map, v.obj_map, h.obj_map))
    return None


# -- R and friends ---------------------------------------------------------------------

def underlying_sset(d: Prederivator, bound: int = config.DEFAULT_BOUND) -> TruncSSet:
    """R(d): n-cells are the objects of d([n]), numbered by position."""
    def build():
        cells = [list(range(d.n_objects(ordinal(n)))) for n in range(bound + 1)]
        face = [None] + [[dict(enumerate(d.restrict_objects(coface(n, i)))) for i in range(n + 1)]
                         for n in range(1, bound + 1)]
        degen = [[dict(enumerate(d.restrict_objects(codegeneracy(n, i)))) for i in range(n + 1)]
                 for n in range(bound)]
        return TruncSSet(bound, cells, face, degen, name=f"R({d.name})")
    return d._cached(("R", bound), build)


def underlying_map(phi: PrederivatorMap, bound: int = config.DEFAULT_BOUND) -> SimplicialMap:
    X, Y = underlying_sset(phi.dom, bound), underlying_sset(phi.cod, bound)
    return SimplicialMap.from_function(X, Y, lambda n, c: phi.object_component(ordinal(n))[c])


def nerve_to_underlying(k: FinCat, bound: int = config.DEFAULT_BOUND) -> SimplicialMap:
    """The comparison N(k) -> R(D_k)."""
    d = representable_pd(k)
    R = underlying_sset(d, bound)

    def fn(n, chain):
        F = chain_functor(k, chain)
        return d._index(ordinal(n))[(F.obj_map, F.mor_map)]

    return SimplicialMap.from_function(nerve(k, bound), R, fn)


def sset_to_underlying(x: TruncSSet) -> SimplicialMap:
    """The comparison X -> R(Ho_X), sending an n-cell to the map Δ0×Δ[n] -> X it classifies."""
    d = homotopy_pd(x)
    R = underlying_sset(d, x.bound)

    def fn(n, c):
        y = cell_map(x, n, c)
        dom = d.domain(ordinal(n), 0)
        key = tuple(y.at(m, objs) for m, (_, (objs, _)) in dom.nd_cells)
        return d.index(ordinal(n))[key]

    return SimplicialMap.from_function(x, R, fn)


def dia1(d: Prederivator, j: FinCat) -> list:
    """Underlying-diagram map Ob(d([1]×j)) -> Mor(d(j)), as a list by position."""
    alpha = canonical_twocell(j)
    J = product(ordinal(1), j).category
    return [d.twocell_at(alpha, x) for x in range(d.n_objects(J))]


class Cond1Map(NamedTuple):
    source: TruncSSet     # N(j)
    target: TruncSSet     # R(d)
    maps: list            # object position -> SimplicialMap N(j) -> R(d)


def canonical_cond1_map(d: Prederivator, j: FinCat, bound: int = config.DEFAULT_BOUND) -> Cond1Map:
    """x ↦ (σ ↦ σ^*(x)) from Ob d(j) to maps N(j) -> R(d)."""
    R = underlying_sset(d, bound)
    N = nerve(j, bound)
    restr = {}

    def along(n, chain):
        key = (n, chain)
        if key not in restr:
            restr[key] = d.restrict_objects(chain_functor(j, chain))
        return restr[key]

    maps = []
    for x in range(d.n_objects(j)):
        f = SimplicialMap.from_function(N, R, lambda n, chain: along(n, chain)[x])
        bad = validate_map(f)
        if bad is not None:
            raise AssertionError(f"restriction of object {x} is not simplicial: {bad}")
        maps.append(f)
    return Cond1Map(N, R, maps)


# -- cotensors ------------------------------------------------------------------------------

def _restrict_chain(j: FinCat, chain, p):
    objs, mors = chain
    out_objs = tuple(objs[t] for t in p)
    out_mors = []
    for a, b in zip(p, p[1:]):
        h = j.identity[objs[a]]
        for t in range(a, b):
            h = j.compose(mors[t], h)
        out_mors.append(h)
    return out_objs, tuple(out_mors)


def _pair_chain(j: FinCat, k: FinCat, c, d):
    nk, mk = k.n_obj, k.n_mor
    return (tuple(a * nk + b for a, b in zip(c[0], d[0])),
            tuple(f * mk + g for f, g in zip(c[1], d[1])))


def cotensor_compat_check(x: TruncSSet, k: FinCat, probes=None) -> CheckReport:
    """Compare Ho_X(j×k) with Ho_{X^{Nk}}(j) through N(j×k) ≅ Nj × Nk."""
    probes = probes if probes is not None else [ordinal(0), ordinal(1)]
    B = x.bound
    rep = CheckReport("cotensor_compat")
    left_pd = homotopy_pd(x)
    inner = exponential(x, nerve(k, B), B)
    right_pd = homotopy_pd(inner)
    for j in probes:
        jk = product(j, k).category
        L, Rh = left_pd.ho(jk), right_pd.ho(j)
        lc, rc = L.category, Rh.category
        ridx = right_pd.index(j)

        def curry(level, key):
            g = SimplicialMap(left_pd.domain(jk, level), x, key)
            out = []
            for n, (q, c) in right_pd.domain(j, level).nd_cells:
                dom_n = inner.domains[n]
                vals = []
                for m, (p, d) in dom_n.nd_cells:
                    qp = tuple(q[t] for t in p)
                    vals.append(g.at(m, (qp, _pair_chain(j, k, _restrict_chain(j, c, p), d))))
                out.append(tuple(vals))
            return tuple(out)

        om = [ridx.get(curry(0, key)) for key in left_pd.objects(jk)]
        if None in om:
            rep.add(j.name, FAIL, {"unmatched_object": om.index(None)})
            continue
        mm = [_morphism_image(L, Rh, m, om, lambda e: curry(1, e)) for m in lc.morphisms]
        F = CatFunctor(lc, rc, om, mm)
        ok = validate_functor(F) is None and is_isomorphism(F)
        rep.add(j.name, PASS if ok else FAIL, None if ok else {"objects": (lc.n_obj, rc.n_obj)},
                left_objects=lc.n_obj, right_objects=rc.n_obj,
                left_morphisms=lc.n_mor, right_morphisms=rc.n_mor)
    return rep
