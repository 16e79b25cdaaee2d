"""Homotopy categories of truncated simplicial sets.

Two routes are provided.  :func:`ho_quasicategory` is exact for
quasicategories: morphisms are homotopy classes of 1-cells and composites are
read off 2-simplices.  :func:`ho_presented` works for any simplicial set: the
free category on the 1-cells modulo the relations coming from 2-cells, solved
by bounded congruence closure.  :func:`ho_agrees` compares the two.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from . import config
from .errors import ConsistencyError, NotAQuasicategory
from .fincat import CatFunctor, FinCat, validate_functor
from .presentation import present
from .sset import SimplicialMap, TruncSSet, has_rlp, inner_horn_inclusions, terminal_map


class HoResult(NamedTuple):
    category: FinCat
    class_of: dict        # 1-cell -> morphism id
    mode: str             # "exact" or "presented"
    reps: list            # morphism id -> (vertex position, tuple of 1-cells)

    def obj_of(self, vertex_position):
        return vertex_position


def _vertex_positions(x):
    return {v: i for i, v in enumerate(x.cells[0])}


def _two_horn_gap(x: TruncSSet):
    """Horn images (f, g) with g after f and no 2-cell having d2 = f, d0 = g."""
    d0, d1 = x.face[1][0], x.face[1][1]
    f0, f1, f2 = x.face[2]
    filled = {(f2[s], f0[s]) for s in x.cells[2]}
    leaving = {}
    for e in x.cells[1]:
        leaving.setdefault(d1[e], []).append(e)
    for f in x.cells[1]:
        for g in leaving.get(d0[f], ()):
            if (f, g) not in filled:
                return (d1[f], d0[f], f, d0[g], g)
    return None


def ho_quasicategory(x: TruncSSet, assume_quasicategory: bool = False) -> HoResult:
    """Exact homotopy category of a quasicategory.

    Inner horns are checked up to ``min(bound, 3)`` unless the caller
    vouches for the input, in which case only 2-dimensional horns are
    checked.  Either way the homotopy relation is closed explicitly and must
    coincide with the raw relation, and composites must not depend on the
    chosen representatives.
    """
    if x.bound < 2:
        raise NotAQuasicategory("need cells up to dimension 2", module="hocat", op="ho_quasicategory")
    n_max = 2 if assume_quasicategory else min(x.bound, 3)
    w = _two_horn_gap(x)
    if w is not None:
        raise NotAQuasicategory("inner horn Λ^1[2] has no filler", witness=((2, 1), w),
                                module="hocat", op="ho_quasicategory")
    t = terminal_map(x)
    for nk, inc in inner_horn_inclusions(n_max, x.bound):
        if nk[0] == 2:
            continue
        res = has_rlp(t, inc)
        if not res:
            raise NotAQuasicategory(
                f"inner horn Λ^{nk[1]}[{nk[0]}] has no filler",
                witness=(nk, res.witness[0].images), module="hocat", op="ho_quasicategory")

    vpos = _vertex_positions(x)
    edges = x.cells[1]
    epos = {e: i for i, e in enumerate(edges)}
    d0, d1 = x.face[1][0], x.face[1][1]
    src = [vpos[d1[e]] for e in edges]
    tgt = [vpos[d0[e]] for e in edges]
    s0 = x.degen[0][0]
    f0, f1, f2 = x.face[2]

    # raw relation: f ~ g when some 2-cell has d2 = id, d0 = f, d1 = g
    raw = set()
    for s in x.cells[2]:
        if f2[s] == s0[x.face[1][1][f0[s]]]:
            raw.add((epos[f0[s]], epos[f1[s]]))
    parent = list(range(len(edges)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in raw:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    closure = {(a, b) for a in range(len(edges)) for b in range(len(edges)) if find(a) == find(b)}
    if closure != raw:
        missing = sorted(closure - raw)[0]
        raise ConsistencyError(
            f"homotopy relation is not an equivalence relation (missing {edges[missing[0]]!r} ~ "
            f"{edges[missing[1]]!r})", module="hocat", op="ho_quasicategory")

    roots = sorted({find(e) for e in range(len(edges))})
    mor_of = {r: k for k, r in enumerate(roots)}
    class_of = {e: mor_of[find(i)] for i, e in enumerate(edges)}
    identity = [class_of[s0[v]] for v in x.cells[0]]
    table = {}
    for s in x.cells[2]:
        key = (class_of[f0[s]], class_of[f2[s]])
        val = class_of[f1[s]]
        old = table.setdefault(key, val)
        if old != val:
            raise ConsistencyError(f"composite depends on representatives at 2-cell {s!r}",
                                   module="hocat", op="ho_quasicategory")
    msrc = [src[r] for r in roots]
    mtgt = [tgt[r] for r in roots]
    for f in range(len(roots)):
        for g in range(len(roots)):
            if mtgt[f] == msrc[g] and (g, f) not in table:
                raise ConsistencyError("a composable pair has no composite",
                                       module="hocat", op="ho_quasicategory")
    cat = FinCat(msrc, mtgt, identity, table, obj_labels=list(x.cells[0]),
                 mor_labels=[edges[r] for r in roots], name=f"ho({x.name or 'X'})")
    reps = [(src[r], (edges[r],)) for r in roots]
    return HoResult(cat, class_of, "exact", reps)


def ho_presented(x: TruncSSet, word_bound: int = config.DEFAULT_WORD_BOUND) -> HoResult:
    """Homotopy category as a presented category, valid for any input."""
    vpos = _vertex_positions(x)
    gens, gen_of = [], {}
    for e in x.cells[1]:
        if not x.is_degenerate(1, e):
            gen_of[e] = len(gens)
            gens.append((e, vpos[x.face[1][1][e]], vpos[x.face[1][0][e]]))

    def word(e):
        return (vpos[x.face[1][1][e]], (gen_of[e],) if e in gen_of else ())

    relations = []
    if x.bound >= 2:
        for s in x.nondegenerate(2):
            g, h, f = (x.face[2][i][s] for i in range(3))
            lhs = (word(f)[0], word(f)[1] + word(g)[1])
            relations.append((word(h), lhs))
    p = present(list(x.cells[0]), gens, relations, word_bound,
                name=f"ho({x.name or 'X'})", where="hocat")
    class_of = {e: p.word_class[word(e)] for e in x.cells[1]}
    reps = [(s, tuple(gens[g][0] for g in w)) for s, w in p.reps]
    return HoResult(p.category, class_of, "presented", reps)


def ho(x: TruncSSet, word_bound: int = config.DEFAULT_WORD_BOUND,
       assume_quasicategory: bool = False) -> HoResult:
    """Exact route when it applies, presented route otherwise."""
    try:
        return ho_quasicategory(x, assume_quasicategory=assume_quasicategory)
    except NotAQuasicategory:
        return ho_presented(x, word_bound)


def ho_functor(f: SimplicialMap, hx: Optional[HoResult] = None,
               hy: Optional[HoResult] = None) -> CatFunctor:
    """The functor ho(f): ho(X) -> ho(Y)."""
    hx = hx or ho(f.dom)
    hy = hy or ho(f.cod)
    X, Y = f.dom, f.cod
    ypos = _vertex_positions(Y)
    cx, cy = hx.category, hy.category
    obj_map = [ypos[f.at(0, v)] for v in X.cells[0]]
    mor_map = []
    for m in cx.morphisms:
        start, edges = hx.reps[m]
        h = cy.identity[obj_map[start]]
        for e in edges:
            h = cy.compose(hy.class_of[f.at(1, e)], h)
        mor_map.append(h)
    F = CatFunctor(cx, cy, obj_map, mor_map)
    bad = validate_functor(F)
    if bad is not None:
        raise ConsistencyError(f"induced map is not a functor: {bad}", module="hocat", op="ho_functor")
    for e in X.cells[1]:
        if mor_map[hx.class_of[e]] != hy.class_of[f.at(1, e)]:
            raise ConsistencyError(f"induced map disagrees on 1-cell {e!r}",
                                   module="hocat", op="ho_functor")
    return F


def ho_agrees(x: TruncSSet, word_bound: int = config.DEFAULT_WORD_BOUND) -> bool:
    """Exact and presented homotopy categories coincide through the 1-cells."""
    a = ho_quasicategory(x)
    b = ho_presented(x, word_bound)
    ca, cb = a.category, b.category
    if ca.n_obj != cb.n_obj or ca.n_mor != cb.n_mor:
        return False
    mor_map = [None] * ca.n_mor
    for e in x.cells[1]:
        i, j = a.class_of[e], b.class_of[e]
        if mor_map[i] is None:
            mor_map[i] = j
        elif mor_map[i] != j:
            return False
    if None in mor_map or len(set(mor_map)) != cb.n_mor:
        return False
    F = CatFunctor(ca, cb, list(range(ca.n_obj)), mor_map)
    return validate_functor(F) is None
