"""Truncated simplicial sets, simplicial maps and the lifting-property engine.

A :class:`TruncSSet` stores every cell up to its ``bound`` together with
explicit face and degeneracy tables.  Cells are arbitrary hashable keys: the
standard simplices use monotone integer tuples, nerves use ``(objects,
morphisms)`` chains, products use pairs.

All maps live in the category of ``bound``-truncated simplicial sets.  A
:class:`SimplicialMap` is stored by its images on the nondegenerate cells of
its domain; values on degenerate cells follow from the Eilenberg-Zilber
decomposition.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement
from typing import NamedTuple, Optional

from . import config
from .errors import BoundError, FormatError, ResourceError
from .fincat import FinCat, CatFunctor, Violation


class TruncSSet:
    """A simplicial set truncated at dimension ``bound``.

    ``face[n][i]`` maps X_n -> X_{n-1} (n >= 1) and ``degen[n][i]`` maps
    X_n -> X_{n+1} (n < bound); both are dicts keyed by cell.
    """

    def __init__(self, bound, cells, face, degen, name=None):
        if bound < 0:
            raise FormatError("bound must be >= 0", module="sset", op="TruncSSet")
        self.bound = bound
        self.cells = tuple(tuple(level) for level in cells)
        if len(self.cells) != bound + 1:
            raise FormatError("need one cell list per dimension", module="sset", op="TruncSSet")
        self.face = [None] + [list(face[n]) for n in range(1, bound + 1)]
        self.degen = [list(degen[n]) for n in range(bound)]
        self.name = name
        self._index = [{c: i for i, c in enumerate(level)} for level in self.cells]
        for n, level in enumerate(self.cells):
            if len(self._index[n]) != len(level):
                raise FormatError(f"duplicate cells in dimension {n}", module="sset", op="TruncSSet")
        self._dw = None
        self._nd = None
        self._ez = None
        self._vertices = None
        self._face_index = {}
        self._trunc = {}

    @classmethod
    def from_functions(cls, bound, cells, face_fn, degen_fn, name=None):
        """Materialise tables from ``face_fn(n, i, c)`` and ``degen_fn(n, i, c)``."""
        cells = [list(level) for level in cells]
        face = [None] + [[{c: face_fn(n, i, c) for c in cells[n]} for i in range(n + 1)]
                         for n in range(1, bound + 1)]
        degen = [[{c: degen_fn(n, i, c) for c in cells[n]} for i in range(n + 1)]
                 for n in range(bound)]
        return cls(bound, cells, face, degen, name=name)

    def __repr__(self):
        sizes = ", ".join(str(len(level)) for level in self.cells)
        return f"<{self.name or 'TruncSSet'} bound={self.bound} cells=[{sizes}]>"

    def index(self, n, c) -> int:
        return self._index[n][c]

    def has_cell(self, n, c) -> bool:
        return c in self._index[n]

    @property
    def is_empty(self) -> bool:
        return not self.cells[0]

    # -- degeneracy structure ------------------------------------------------
    def _compute_degeneracies(self):
        dw = [dict()]
        for n in range(1, self.bound + 1):
            level = {}
            for j in range(n):
                for y, c in self.degen[n - 1][j].items():
                    level.setdefault(c, j)
            dw.append(level)
        self._dw = dw
        nd = []
        for n in range(self.bound + 1):
            for c in self.cells[n]:
                if c not in dw[n]:
                    nd.append((n, c))
        verts = self.vertex_index
        order = sorted(range(len(nd)), key=lambda k: (
            max(verts(*nd[k])), nd[k][0], k))
        self._nd = [nd[k] for k in order]
        self._nd_pos = {cell: p for p, cell in enumerate(self._nd)}

    def is_degenerate(self, n, c) -> bool:
        if self._dw is None:
            self._compute_degeneracies()
        return c in self._dw[n]

    def nondegenerate(self, n) -> list:
        """Nondegenerate n-cells in storage order."""
        if self._dw is None:
            self._compute_degeneracies()
        return [c for c in self.cells[n] if c not in self._dw[n]]

    @property
    def nd_cells(self) -> list:
        """All nondegenerate cells as ``(n, c)``, ordered so every cell follows its faces."""
        if self._nd is None:
            self._compute_degeneracies()
        return self._nd

    def nd_position(self, n, c) -> int:
        if self._nd is None:
            self._compute_degeneracies()
        return self._nd_pos[(n, c)]

    @property
    def nd_dim(self) -> int:
        """Largest dimension carrying a nondegenerate cell (-1 if empty)."""
        return max((n for n, _ in self.nd_cells), default=-1)

    def ez(self, n, c):
        """Eilenberg-Zilber data: ``(nd position, degeneracy indices applied in order)``."""
        if self._ez is None:
            self._ez = {}
        key = (n, c)
        hit = self._ez.get(key)
        if hit is not None:
            return hit
        if self._dw is None:
            self._compute_degeneracies()
        j = self._dw[n].get(c)
        if j is None:
            out = (self._nd_pos[key], ())
        else:
            p, ops = self.ez(n - 1, self.face[n][j][c])
            out = (p, ops + (j,))
        self._ez[key] = out
        return out

    def surjection(self, n, c):
        """``(k, nd cell, eta)`` with c = nd∘eta for a monotone surjection eta: [n] -> [k]."""
        p, ops = self.ez(n, c)
        k, nd = self.nd_cells[p]
        eta = tuple(range(k + 1))
        for j in ops:
            eta = tuple(eta[t if t <= j else t - 1] for t in range(len(eta) + 1))
        return k, nd, eta

    def vertices(self, n, c) -> tuple:
        if n == 0:
            return (c,)
        if self._vertices is None:
            self._vertices = {}
        hit = self._vertices.get((n, c))
        if hit is None:
            hit = self.vertices(n - 1, self.face[n][n][c]) + \
                (self.vertices(n - 1, self.face[n][0][c])[-1],)
            self._vertices[(n, c)] = hit
        return hit

    def vertex_index(self, n, c) -> tuple:
        return tuple(self._index[0][v] for v in self.vertices(n, c))

    def face_index(self, n) -> dict:
        """Map from face tuples ``(d_0 c, ..., d_n c)`` to the n-cells having them."""
        idx = self._face_index.get(n)
        if idx is None:
            idx = {}
            faces = self.face[n]
            for c in self.cells[n]:
                idx.setdefault(tuple(faces[i][c] for i in range(n + 1)), []).append(c)
            self._face_index[n] = idx
        return idx

    def apply_degeneracies(self, k, cell, ops):
        for j in ops:
            cell = self.degen[k][j][cell]
            k += 1
        return cell

    def truncate(self, b) -> "TruncSSet":
        if b == self.bound:
            return self
        if b > self.bound:
            raise BoundError("cannot raise a truncation bound", module="sset", op="truncate")
        if b not in self._trunc:
            self._trunc[b] = TruncSSet(b, self.cells[:b + 1], [None] + self.face[1:b + 1],
                                       self.degen[:b], name=self.name)
        return self._trunc[b]


def validate_sset(x: TruncSSet) -> Optional[Violation]:
    """First violated simplicial identity (or table error), else ``None``."""
    N = x.bound
    for n in range(1, N + 1):
        for i in range(n + 1):
            tab = x.face[n][i]
            for c in x.cells[n]:
                if c not in tab or not x.has_cell(n - 1, tab[c]):
                    return Violation("format", (n, i, c), "face table incomplete")
    for n in range(N):
        for j in range(n + 1):
            tab = x.degen[n][j]
            for c in x.cells[n]:
                if c not in tab or not x.has_cell(n + 1, tab[c]):
                    return Violation("format", (n, j, c), "degeneracy table incomplete")
    d, s = x.face, x.degen
    for n in range(2, N + 1):
        for c in x.cells[n]:
            for j in range(n + 1):
                for i in range(j):
                    if d[n - 1][i][d[n][j][c]] != d[n - 1][j - 1][d[n][i][c]]:
                        return Violation("d_i d_j = d_{j-1} d_i", (n, i, j, c))
    for n in range(N):
        for c in x.cells[n]:
            for j in range(n + 1):
                sc = s[n][j][c]
                for i in range(n + 2):
                    lhs = d[n + 1][i][sc]
                    if i < j:
                        rhs = s[n - 1][j - 1][d[n][i][c]]
                    elif i in (j, j + 1):
                        rhs = c
                    else:
                        rhs = s[n - 1][j][d[n][i - 1][c]]
                    if lhs != rhs:
                        return Violation("d_i s_j", (n, i, j, c))
    for n in range(N - 1):
        for c in x.cells[n]:
            for j in range(n + 1):
                for i in range(j + 1):
                    if s[n + 1][i][s[n][j][c]] != s[n + 1][j + 1][s[n][i][c]]:
                        return Violation("s_i s_j = s_{j+1} s_i", (n, i, j, c))
    return None


class SimplicialMap:
    """A map of truncated simplicial sets, stored on nondegenerate domain cells."""

    __slots__ = ("dom", "cod", "images", "_hash")

    def __init__(self, dom: TruncSSet, cod: TruncSSet, images):
        if dom.bound != cod.bound:
            raise BoundError("map between different truncation bounds", module="sset", op="SimplicialMap")
        self.dom = dom
        self.cod = cod
        self.images = tuple(images)
        self._hash = None

    @classmethod
    def from_function(cls, dom, cod, fn):
        """Build from ``fn(n, cell)``, evaluated on nondegenerate cells only."""
        return cls(dom, cod, [fn(n, c) for n, c in dom.nd_cells])

    def at(self, n, c):
        p, ops = self.dom.ez(n, c)
        k = self.dom.nd_cells[p][0]
        return self.cod.apply_degeneracies(k, self.images[p], ops)

    def level(self, n) -> dict:
        return {c: self.at(n, c) for c in self.dom.cells[n]}

    def __eq__(self, other):
        return (isinstance(other, SimplicialMap) and self.images == other.images
                and self.dom is other.dom and self.cod is other.cod)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.images)
        return self._hash

    def __repr__(self):
        return f"SimplicialMap({self.dom!r} -> {self.cod!r})"


def validate_map(f: SimplicialMap) -> Optional[Violation]:
    x, y = f.dom, f.cod
    levels = [f.level(n) for n in range(x.bound + 1)]
    for n in range(x.bound + 1):
        for c, v in levels[n].items():
            if not y.has_cell(n, v):
                return Violation("format", (n, c), "image is not a cell")
            if n >= 1:
                for i in range(n + 1):
                    if y.face[n][i][v] != levels[n - 1][x.face[n][i][c]]:
                        return Violation("face", (n, i, c), "map does not commute with a face")
    return None


def compose_maps(g: SimplicialMap, f: SimplicialMap) -> SimplicialMap:
    """``g∘f``."""
    return SimplicialMap(f.dom, g.cod, [g.at(n, f.at(n, c)) for n, c in f.dom.nd_cells])


def identity_map(x: TruncSSet) -> SimplicialMap:
    return SimplicialMap(x, x, [c for _, c in x.nd_cells])


def is_levelwise_bijective(f: SimplicialMap) -> bool:
    for n in range(f.dom.bound + 1):
        image = {f.at(n, c) for c in f.dom.cells[n]}
        if len(image) != len(f.dom.cells[n]) or len(image) != len(f.cod.cells[n]):
            return False
    return True


def is_levelwise_injective(f: SimplicialMap) -> bool:
    for n in range(f.dom.bound + 1):
        if len({f.at(n, c) for c in f.dom.cells[n]}) != len(f.dom.cells[n]):
            return False
    return True


# -- standard objects ---------------------------------------------------------

def _monotone(n, m):
    return list(combinations_with_replacement(range(n + 1), m + 1))


def _std_face(n, i, c):
    return c[:i] + c[i + 1:]


def _std_degen(n, i, c):
    return c[:i + 1] + c[i:]


@lru_cache(maxsize=None)
def standard_simplex(n: int, bound: int) -> TruncSSet:
    """Δ[n]: m-cells are monotone maps [m] -> [n]."""
    if n < 0:
        raise FormatError("n must be >= 0", module="sset", op="standard_simplex")
    cells = [_monotone(n, m) for m in range(bound + 1)]
    return TruncSSet.from_functions(bound, cells, _std_face, _std_degen, name=f"Δ[{n}]")


@lru_cache(maxsize=None)
def boundary(n: int, bound: int) -> TruncSSet:
    """∂Δ[n]: monotone maps that miss some vertex."""
    full = set(range(n + 1))
    cells = [[c for c in _monotone(n, m) if set(c) != full] for m in range(bound + 1)]
    return TruncSSet.from_functions(bound, cells, _std_face, _std_degen, name=f"∂Δ[{n}]")


@lru_cache(maxsize=None)
def horn(n: int, k: int, bound: int) -> TruncSSet:
    """Λ^k[n]: monotone maps whose image misses some vertex other than k."""
    if n < 1 or not 0 <= k <= n:
        raise FormatError(f"horn index out of range: n={n}, k={k}", module="sset", op="horn")
    need = set(range(n + 1)) - {k}
    cells = [[c for c in _monotone(n, m) if not need <= set(c)] for m in range(bound + 1)]
    return TruncSSet.from_functions(bound, cells, _std_face, _std_degen, name=f"Λ^{k}[{n}]")


def inclusion(sub: TruncSSet, sup: TruncSSet) -> SimplicialMap:
    """Inclusion of a simplicial subset sharing cell keys."""
    return SimplicialMap(sub, sup, [c for _, c in sub.nd_cells])


@lru_cache(maxsize=None)
def empty_sset(bound: int) -> TruncSSet:
    return TruncSSet(bound, [[] for _ in range(bound + 1)],
                     [None] + [[{} for _ in range(n + 1)] for n in range(1, bound + 1)],
                     [[{} for _ in range(n + 1)] for n in range(bound)], name="∅")


def point(bound: int) -> TruncSSet:
    return standard_simplex(0, bound)


def terminal_map(x: TruncSSet) -> SimplicialMap:
    pt = point(x.bound)
    return SimplicialMap.from_function(x, pt, lambda n, c: (0,) * (n + 1))


def cell_map(x: TruncSSet, n: int, c) -> SimplicialMap:
    """Yoneda: the map Δ[n] -> x classifying the n-cell c."""
    if n > x.bound:
        raise BoundError("cell dimension above bound", module="sset", op="cell_map")
    top = tuple(range(n + 1))
    dom = standard_simplex(n, x.bound)

    def fn(m, p):
        cell, k = c, n
        # p is a monotone map [m] -> [n]; act by faces then degeneracies
        missing = [v for v in range(n, -1, -1) if v not in p]
        for v in missing:
            cell = x.face[k][v][cell]
            k -= 1
        img = [v for v in top if v in p]
        seq = [img.index(v) for v in p]
        for t in range(1, len(seq)):
            if seq[t] == seq[t - 1]:
                cell = x.degen[k][t - 1][cell]
                k += 1
        return cell

    return SimplicialMap.from_function(dom, x, fn)


# -- nerves -------------------------------------------------------------------

def _chains(c: FinCat, m: int):
    out = []

    def go(objs, mors):
        if len(mors) == m:
            out.append((tuple(objs), tuple(mors)))
            return
        x = objs[-1]
        for f in c.morphisms:
            if c.src[f] == x:
                objs.append(c.tgt[f])
                mors.append(f)
                go(objs, mors)
                objs.pop()
                mors.pop()

    for x in c.objects:
        go([x], [])
    return out


def nerve(c: FinCat, bound: int = config.DEFAULT_BOUND) -> TruncSSet:
    """N(c): n-cells are composable chains ``(objects, morphisms)``."""
    key = (c, bound)
    hit = _nerve_cache.get(key)
    if hit is not None:
        return hit

    def face(n, i, cell):
        objs, mors = cell
        if i == 0:
            return objs[1:], mors[1:]
        if i == n:
            return objs[:-1], mors[:-1]
        return (objs[:i] + objs[i + 1:],
                mors[:i - 1] + (c.compose(mors[i], mors[i - 1]),) + mors[i + 1:])

    def degen(n, i, cell):
        objs, mors = cell
        return objs[:i + 1] + objs[i:], mors[:i] + (c.identity[objs[i]],) + mors[i:]

    x = TruncSSet.from_functions(bound, [_chains(c, m) for m in range(bound + 1)], face, degen,
                                 name=f"N({c.name or 'C'})")
    _nerve_cache[key] = x
    return x


_nerve_cache: dict = {}


def nerve_dimension(c: FinCat) -> int:
    """Largest n with a nondegenerate n-cell in N(c), for homotopy finite c."""
    best, m = 0, 1
    while True:
        if not any(all(not c.is_identity(f) for f in mors) for _, mors in _chains(c, m)):
            return best
        best, m = m, m + 1


def nerve_map(F: CatFunctor, bound: int = config.DEFAULT_BOUND) -> SimplicialMap:
    return SimplicialMap.from_function(
        nerve(F.dom, bound), nerve(F.cod, bound),
        lambda n, cell: (tuple(F.obj_map[x] for x in cell[0]), tuple(F.mor_map[f] for f in cell[1])))


def chain_functor(c: FinCat, cell) -> CatFunctor:
    """The functor [n] -> c classified by a nerve cell."""
    from .fincat import ordinal
    objs, mors = cell
    n = len(objs) - 1
    o = ordinal(n)
    mm = []
    for f in o.morphisms:
        i, j = o.mor_labels[f]
        h = c.identity[objs[i]]
        for t in range(i, j):
            h = c.compose(mors[t], h)
        mm.append(h)
    return CatFunctor(o, c, objs, mm)


def functor_chain(F: CatFunctor):
    """Inverse of :func:`chain_functor` for a functor out of an ordinal."""
    o = F.dom
    n = o.n_obj - 1
    return tuple(F.obj_map), tuple(F.mor_map[o.mor_id((i, i + 1))] for i in range(n))


# -- products, coproducts, pushouts ----------------------------------------------

class SSetProduct(NamedTuple):
    sset: TruncSSet
    first: SimplicialMap
    second: SimplicialMap


_product_cache: dict = {}


def sset_product(x: TruncSSet, y: TruncSSet) -> SSetProduct:
    if x.bound != y.bound:
        raise BoundError("product of different bounds", module="sset", op="sset_product")
    key = (id(x), id(y))
    hit = _product_cache.get(key)
    if hit is not None and hit[0] is x and hit[1] is y:
        return hit[2]
    N = x.bound
    cells = [[(a, b) for a in x.cells[n] for b in y.cells[n]] for n in range(N + 1)]
    p = TruncSSet.from_functions(
        N, cells,
        lambda n, i, c: (x.face[n][i][c[0]], y.face[n][i][c[1]]),
        lambda n, i, c: (x.degen[n][i][c[0]], y.degen[n][i][c[1]]),
        name=f"{x.name or 'X'}×{y.name or 'Y'}")
    out = SSetProduct(p, SimplicialMap.from_function(p, x, lambda n, c: c[0]),
                      SimplicialMap.from_function(p, y, lambda n, c: c[1]))
    _product_cache[key] = (x, y, out)
    return out


def sset_coproduct(x: TruncSSet, y: TruncSSet):
    """Disjoint union with its two injections; cells are tagged ``(0, c)`` / ``(1, c)``."""
    if x.bound != y.bound:
        raise BoundError("coproduct of different bounds", module="sset", op="sset_coproduct")
    N = x.bound
    parts = (x, y)
    cells = [[(0, c) for c in x.cells[n]] + [(1, c) for c in y.cells[n]] for n in range(N + 1)]
    s = TruncSSet.from_functions(
        N, cells,
        lambda n, i, c: (c[0], parts[c[0]].face[n][i][c[1]]),
        lambda n, i, c: (c[0], parts[c[0]].degen[n][i][c[1]]),
        name=f"{x.name or 'X'}⊔{y.name or 'Y'}")
    return (s, SimplicialMap.from_function(x, s, lambda n, c: (0, c)),
            SimplicialMap.from_function(y, s, lambda n, c: (1, c)))


class _UnionFind:
    def __init__(self, items):
        self.parent = {i: i for i in items}
        self.rank = {i: k for k, i in enumerate(items)}

    def find(self, a):
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        # smaller canonical rank wins, making representatives deterministic
        if self.rank[rb] < self.rank[ra]:
            ra, rb = rb, ra
        self.parent[rb] = ra


def sset_pushout(f: SimplicialMap, g: SimplicialMap):
    """Pushout of ``B <-f- A -g-> C``; returns ``(P, B -> P, C -> P)``.

    Cells of P are the representatives (tagged ``(0, b)`` or ``(1, c)``) of the
    levelwise equivalence classes; B-cells come first in the canonical order.
    """
    if f.dom is not g.dom:
        raise FormatError("pushout legs need a common domain", module="sset", op="sset_pushout")
    B, C, A = f.cod, g.cod, f.dom
    N = A.bound
    reps = []
    for n in range(N + 1):
        items = [(0, b) for b in B.cells[n]] + [(1, c) for c in C.cells[n]]
        uf = _UnionFind(items)
        for a in A.cells[n]:
            uf.union((0, f.at(n, a)), (1, g.at(n, a)))
        reps.append({i: uf.find(i) for i in items})
    parts = (B, C)
    cells = [[i for i in reps[n] if reps[n][i] == i] for n in range(N + 1)]
    P = TruncSSet.from_functions(
        N, cells,
        lambda n, i, c: reps[n - 1][(c[0], parts[c[0]].face[n][i][c[1]])],
        lambda n, i, c: reps[n + 1][(c[0], parts[c[0]].degen[n][i][c[1]])],
        name="pushout")
    iB = SimplicialMap.from_function(B, P, lambda n, b: reps[n][(0, b)])
    iC = SimplicialMap.from_function(C, P, lambda n, c: reps[n][(1, c)])
    return P, iB, iC


def find_sset_isomorphism(x: TruncSSet, y: TruncSSet) -> Optional[SimplicialMap]:
    """A levelwise bijective map x -> y, found among :func:`hom_set`."""
    if [len(l) for l in x.cells] != [len(l) for l in y.cells]:
        return None
    for f in hom_set(x, y):
        if is_levelwise_bijective(f):
            return f
    return None


# -- hom-set enumeration ----------------------------------------------------------

class _HomPlan:
    def __init__(self, a: TruncSSet):
        self.steps = a.nd_cells
        self.faces = []
        for n, c in self.steps:
            if n == 0:
                self.faces.append(None)
                continue
            fs = []
            for i in range(n + 1):
                p, ops = a.ez(n - 1, a.face[n][i][c])
                fs.append((p, a.nd_cells[p][0], ops))
            self.faces.append(fs)
        # faces that are themselves nondegenerate need no degeneracy lookup
        self.plain = [fs is not None and all(not ops for _, _, ops in fs) for fs in self.faces]
        self.short = [[p for p, _, _ in fs] if pl else fs for fs, pl in zip(self.faces, self.plain)]


def _align(a: TruncSSet, x: TruncSSet):
    if a.bound == x.bound:
        return a, x
    if a.bound > x.bound:
        if a.nd_dim > x.bound:
            raise BoundError(
                f"target bound {x.bound} below the nondegenerate dimension {a.nd_dim} of the source",
                module="sset", op="hom_set")
        return a.truncate(x.bound), x
    return a, x.truncate(a.bound)


def iter_hom(a: TruncSSet, x: TruncSSet, fixed=None):
    """Yield every simplicial map a -> x in canonical depth-first order.

    ``fixed`` optionally maps nd positions of ``a`` to forced images.
    """
    a, x = _align(a, x)
    plan = getattr(a, "_hom_plan", None)
    if plan is None:
        plan = a._hom_plan = _HomPlan(a)
    steps, plain = plan.steps, plan.plain
    faces = plan.short
    limit = config.get_budget()
    count = 0
    total = len(steps)
    if total == 0:
        yield SimplicialMap(a, x, ())
        return
    imgs = [None] * total
    verts = list(x.cells[0])
    face_idx = [None] + [x.face_index(n) for n in range(1, x.bound + 1)]
    degen = x.degen

    def candidates(s):
        n, _ = steps[s]
        if fixed is not None and s in fixed:
            opts = [fixed[s]]
            if n == 0:
                return opts if x.has_cell(0, fixed[s]) else []
        elif n == 0:
            return verts
        else:
            opts = None
        fs = faces[s]
        if plain[s]:
            key = tuple([imgs[p] for p in fs])
        else:
            key = []
            for p, k, ops in fs:
                v = imgs[p]
                for j in ops:
                    v = degen[k][j][v]
                    k += 1
                key.append(v)
            key = tuple(key)
        found = face_idx[n].get(key, ())
        if opts is None:
            return found
        return [o for o in opts if o in found]

    cand = [None] * total
    pos = [0] * total
    i = 0
    cand[0] = candidates(0)
    while i >= 0:
        if pos[i] < len(cand[i]):
            imgs[i] = cand[i][pos[i]]
            pos[i] += 1
            count += 1
            if count > limit:
                raise ResourceError(f"hom_set({a.name} -> {x.name}) exceeded budget {limit}",
                                    count=count, module="sset", op="hom_set")
            if i == total - 1:
                yield SimplicialMap(a, x, imgs)
            else:
                i += 1
                cand[i] = candidates(i)
                pos[i] = 0
        else:
            i -= 1


def hom_set(a: TruncSSet, x: TruncSSet) -> list:
    """All simplicial maps a -> x (as truncated simplicial sets), deterministic order."""
    return list(iter_hom(a, x))


# -- exponentials --------------------------------------------------------------

def _coface(i):
    return lambda p: tuple(v if v < i else v + 1 for v in p)


def _codegen(i):
    return lambda p: tuple(v if v <= i else v - 1 for v in p)


def _plan(dom: TruncSSet, targets):
    """Precomputed evaluation of maps out of ``dom`` on the given cells."""
    plan = []
    for m, t in targets:
        p, ops = dom.ez(m, t)
        plan.append((p, dom.nd_cells[p][0], ops))
    return plan


def _run_plan(x: TruncSSet, key, plan):
    out = []
    degen = x.degen
    for p, k, ops in plan:
        v = key[p]
        for j in ops:
            v = degen[k][j][v]
            k += 1
        out.append(v)
    return tuple(out)


class Exponential(TruncSSet):
    """``x^a`` up to dimension ``levels``: n-cells are maps Δ[n]×a -> x.

    Cell keys are the image tuples of those maps; :attr:`maps` recovers the
    :class:`SimplicialMap` behind each key.
    """

    def __init__(self, x: TruncSSet, a: TruncSSet, levels: int):
        a, x = _align(a, x)
        B = x.bound
        self.base, self.exponent, self.inner_bound = x, a, B
        self.domains = [sset_product(standard_simplex(n, B), a).sset for n in range(levels + 1)]
        self.maps = []
        cells = []
        for n in range(levels + 1):
            try:
                found = hom_set(self.domains[n], x)
            except ResourceError as e:
                raise ResourceError(f"exponential level {n}: {e}", count=e.count, level=n,
                                    module="sset", op="exponential") from None
            self.maps.append({f.images: f for f in found})
            cells.append(list(self.maps[n]))
        face = [None]
        for n in range(1, levels + 1):
            lower = self.domains[n - 1]
            per_i = []
            for i in range(n + 1):
                d = _coface(i)
                plan = _plan(self.domains[n], [(m, (d(c[0]), c[1])) for m, c in lower.nd_cells])
                per_i.append({k: _run_plan(x, k, plan) for k in self.maps[n]})
            face.append(per_i)
        degen = []
        for n in range(levels):
            upper = self.domains[n + 1]
            per_i = []
            for i in range(n + 1):
                s = _codegen(i)
                plan = _plan(self.domains[n], [(m, (s(c[0]), c[1])) for m, c in upper.nd_cells])
                per_i.append({k: _run_plan(x, k, plan) for k in self.maps[n]})
            degen.append(per_i)
        super().__init__(levels, cells, face, degen,
                         name=f"{x.name or 'X'}^{a.name or 'A'}")

    def vertex_map(self, key) -> SimplicialMap:
        return self.maps[0][key]


_exp_cache: dict = {}


def exponential(x: TruncSSet, a: TruncSSet, levels: int = 2) -> Exponential:
    """The cotensor ``x^a`` truncated at ``levels``."""
    key = (id(x), id(a), levels)
    hit = _exp_cache.get(key)
    if hit is not None and hit[0] is x and hit[1] is a:
        return hit[2]
    e = Exponential(x, a, levels)
    _exp_cache[key] = (x, a, e)
    return e


# -- lifting properties ------------------------------------------------------------

class LiftResult(NamedTuple):
    holds: bool
    witness: Optional[tuple] = None
    squares: int = 0

    def __bool__(self):
        return self.holds


def has_rlp(p: SimplicialMap, i: SimplicialMap) -> LiftResult:
    """Does p have the right lifting property against i?

    Exhaustive over all commuting squares; a failing result carries the
    first square ``(top, bottom)`` (in canonical order) that has no lift.
    """
    A, B = i.dom, i.cod
    X, Y = p.dom, p.cod
    lifts = set()
    for w in iter_hom(B, X):
        lifts.add((compose_maps(w, i).images, compose_maps(p, w).images))
    bottoms = {}
    for v in iter_hom(B, Y):
        bottoms.setdefault(compose_maps(v, i).images, []).append(v)
    squares = 0
    for u in iter_hom(A, X):
        for v in bottoms.get(compose_maps(p, u).images, ()):
            squares += 1
            if (u.images, v.images) not in lifts:
                return LiftResult(False, (u, v), squares)
    return LiftResult(True, None, squares)


def inner_horn_inclusions(n_max: int, bound: int):
    for n in range(2, n_max + 1):
        for k in range(1, n):
            yield (n, k), inclusion(horn(n, k, bound), standard_simplex(n, bound))


def boundary_inclusions(n_max: int, bound: int):
    yield 0, SimplicialMap(empty_sset(bound), standard_simplex(0, bound), ())
    for n in range(1, n_max + 1):
        yield n, inclusion(boundary(n, bound), standard_simplex(n, bound))


def _check_bound(x, n_max, op):
    if x.bound < n_max:
        raise BoundError(f"bound {x.bound} < n_max {n_max}", module="sset", op=op)


def quasicategory_witness(x: TruncSSet, n_max: int):
    """First unfillable inner horn ``((n, k), horn map)`` or ``None``."""
    _check_bound(x, n_max, "is_quasicategory_up_to")
    t = terminal_map(x)
    for nk, inc in inner_horn_inclusions(n_max, x.bound):
        res = has_rlp(t, inc)
        if not res:
            return nk, res.witness[0]
    return None


def is_quasicategory_up_to(x: TruncSSet, n_max: int) -> bool:
    return quasicategory_witness(x, n_max) is None


def inner_fibration_witness(p: SimplicialMap, n_max: int):
    _check_bound(p.dom, n_max, "is_inner_fibration_up_to")
    for nk, inc in inner_horn_inclusions(n_max, p.dom.bound):
        res = has_rlp(p, inc)
        if not res:
            return nk, res.witness
    return None


def is_inner_fibration_up_to(p: SimplicialMap, n_max: int) -> bool:
    return inner_fibration_witness(p, n_max) is None


def acyclic_fibration_witness(p: SimplicialMap, n_max: int):
    _check_bound(p.dom, n_max, "is_acyclic_fibration_up_to")
    for n, inc in boundary_inclusions(n_max, p.dom.bound):
        res = has_rlp(p, inc)
        if not res:
            return n, res.witness
    return None


def is_acyclic_fibration_up_to(p: SimplicialMap, n_max: int) -> bool:
    return acyclic_fibration_witness(p, n_max) is None


def inverse_map(f: SimplicialMap) -> SimplicialMap:
    """Inverse of a levelwise bijective map."""
    if not is_levelwise_bijective(f):
        raise FormatError("map is not invertible", module="sset", op="inverse_map")
    back = [{f.at(n, c): c for c in f.dom.cells[n]} for n in range(f.dom.bound + 1)]
    return SimplicialMap.from_function(f.cod, f.dom, lambda n, c: back[n][c])
