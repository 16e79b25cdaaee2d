"""Finite categories, functors and natural transformations.

Objects and morphisms are interned as consecutive integers.  Each carries a
hashable label (for instance ``(0, 1)`` for the arrow ``0 -> 1`` of an
ordinal) and every enumeration in this module is lexicographic on integer id
sequences, so all results are reproducible.
"""

from __future__ import annotations

import sys
from functools import lru_cache
from typing import Callable, Hashable, Iterator, NamedTuple, Optional, Sequence

from .errors import FormatError

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


class Violation(NamedTuple):
    law: str
    witness: tuple
    message: str = ""

    def __str__(self):
        return f"{self.law}: {self.message} {self.witness}"


class FinCat:
    """A finite category given by source/target arrays and a composition.

    ``compose`` is either a mapping ``(g, f) -> g∘f`` (identities may be
    omitted and are inferred) or a callable returning ``None`` where undefined.
    """

    def __init__(
        self,
        src: Sequence[int],
        tgt: Sequence[int],
        identity: Sequence[int],
        compose,
        *,
        obj_labels: Optional[Sequence[Hashable]] = None,
        mor_labels: Optional[Sequence[Hashable]] = None,
        name: Optional[str] = None,
        key=None,
    ):
        self.src = tuple(src)
        self.tgt = tuple(tgt)
        self.identity = tuple(identity)
        n_obj, n_mor = len(self.identity), len(self.src)
        if len(self.tgt) != n_mor:
            raise FormatError("src and tgt differ in length", module="fincat", op="FinCat")
        for f in range(n_mor):
            if not (0 <= self.src[f] < n_obj and 0 <= self.tgt[f] < n_obj):
                raise FormatError(f"morphism {f} has dangling endpoints", module="fincat", op="FinCat")
        for x, i in enumerate(self.identity):
            if not 0 <= i < n_mor:
                raise FormatError(f"identity of {x} is not a morphism", module="fincat", op="FinCat")
        self.obj_labels = tuple(obj_labels) if obj_labels is not None else tuple(range(n_obj))
        self.mor_labels = tuple(mor_labels) if mor_labels is not None else tuple(range(n_mor))
        if len(self.obj_labels) != n_obj or len(self.mor_labels) != n_mor:
            raise FormatError("label count mismatch", module="fincat", op="FinCat")
        self.name = name
        self._fn = None
        self._table = None
        if callable(compose):
            self._fn = compose
        else:
            table = {}
            for (g, f), h in dict(compose).items():
                for m in (g, f, h):
                    if not 0 <= m < n_mor:
                        raise FormatError(f"composition refers to unknown morphism {m}",
                                          module="fincat", op="FinCat")
                table[(g, f)] = h
            for f in range(n_mor):
                table.setdefault((self.identity[self.tgt[f]], f), f)
                table.setdefault((f, self.identity[self.src[f]]), f)
            self._table = table
        homs = {}
        for f in range(n_mor):
            homs.setdefault((self.src[f], self.tgt[f]), []).append(f)
        self._hom = {k: tuple(v) for k, v in homs.items()}
        self._obj_index = {lab: i for i, lab in enumerate(self.obj_labels)}
        self._mor_index = {lab: i for i, lab in enumerate(self.mor_labels)}
        self._key = key
        self._hash = None

    # -- basic access -------------------------------------------------------
    @property
    def n_obj(self) -> int:
        return len(self.identity)

    @property
    def n_mor(self) -> int:
        return len(self.src)

    @property
    def objects(self) -> range:
        return range(self.n_obj)

    @property
    def morphisms(self) -> range:
        return range(self.n_mor)

    def hom(self, x: int, y: int) -> tuple:
        return self._hom.get((x, y), ())

    def is_identity(self, f: int) -> bool:
        return self.identity[self.src[f]] == f

    def compose(self, g: int, f: int) -> Optional[int]:
        """``g∘f``; ``None`` when the pair is composable but the table has no entry."""
        if self.tgt[f] != self.src[g]:
            raise ValueError(f"morphisms {g}, {f} are not composable")
        if self._table is not None:
            return self._table.get((g, f))
        return self._fn(g, f)

    def obj_id(self, label) -> int:
        return self._obj_index[label]

    def mor_id(self, label) -> int:
        return self._mor_index[label]

    @property
    def is_thin(self) -> bool:
        return all(len(v) <= 1 for v in self._hom.values())

    def table_items(self):
        """All defined composites as ``((g, f), g∘f)`` in id order."""
        if self._table is not None:
            return sorted(self._table.items())
        out = []
        for f in self.morphisms:
            for g in self.morphisms:
                if self.src[g] == self.tgt[f]:
                    h = self._fn(g, f)
                    if h is not None:
                        out.append(((g, f), h))
        return out

    # -- identity -----------------------------------------------------------
    @property
    def key(self):
        if self._key is None:
            self._key = (self.src, self.tgt, self.identity, tuple(self.table_items()),
                         self.obj_labels, self.mor_labels)
        return self._key

    def __eq__(self, other):
        return isinstance(other, FinCat) and (self is other or self.key == other.key)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key)
        return self._hash

    def __repr__(self):
        nm = self.name or "FinCat"
        return f"<{nm}: {self.n_obj} objects, {self.n_mor} morphisms>"

    # -- text format --------------------------------------------------------
    @classmethod
    def from_spec(cls, objects, morphisms, identities=None, compose=(), name=None):
        """Build from labelled data: morphisms are ``(id, src, tgt)`` triples."""
        op = dict(module="fincat", op="from_spec")
        objects = list(objects)
        oidx = {o: i for i, o in enumerate(objects)}
        if len(oidx) != len(objects):
            raise FormatError("duplicate object ids", **op)
        mlabels, src, tgt = [], [], []
        for m in morphisms:
            try:
                mid, s, t = m
            except (TypeError, ValueError):
                raise FormatError(f"bad morphism entry {m!r}", **op) from None
            if s not in oidx or t not in oidx:
                raise FormatError(f"morphism {mid!r} has unknown endpoint", **op)
            mlabels.append(mid)
            src.append(oidx[s])
            tgt.append(oidx[t])
        midx = {m: i for i, m in enumerate(mlabels)}
        if len(midx) != len(mlabels):
            raise FormatError("duplicate morphism ids", **op)
        identities = dict(identities or {})
        ident = []
        for o in objects:
            if o not in identities:
                raise FormatError(f"object {o!r} has no identity", **op)
            if identities[o] not in midx:
                raise FormatError(f"identity of {o!r} is not a morphism", **op)
            ident.append(midx[identities[o]])
        table = {}
        for entry in compose:
            try:
                g, f, h = entry
            except (TypeError, ValueError):
                raise FormatError(f"bad compose entry {entry!r}", **op) from None
            for m in (g, f, h):
                if m not in midx:
                    raise FormatError(f"compose entry refers to unknown morphism {m!r}", **op)
            table[(midx[g], midx[f])] = midx[h]
        return cls(src, tgt, ident, table, obj_labels=objects, mor_labels=mlabels, name=name)


def validate_category(c: FinCat) -> Optional[Violation]:
    """Return the first violated category law, or ``None``."""
    for x in c.objects:
        i = c.identity[x]
        if c.src[i] != x or c.tgt[i] != x:
            return Violation("identity", (x, i), "identity has wrong endpoints")
    if c._table is not None:
        for (g, f), h in sorted(c._table.items()):
            if c.tgt[f] != c.src[g]:
                return Violation("src/tgt mismatch", (g, f), "entry for a non-composable pair")
            if c.src[h] != c.src[f] or c.tgt[h] != c.tgt[g]:
                return Violation("src/tgt mismatch", (g, f, h), "composite has wrong endpoints")
    for f in c.morphisms:
        for g in c.morphisms:
            if c.src[g] != c.tgt[f]:
                continue
            h = c.compose(g, f)
            if h is None:
                return Violation("totality", (g, f), "composable pair without composite")
            if c._table is None and (c.src[h] != c.src[f] or c.tgt[h] != c.tgt[g]):
                return Violation("src/tgt mismatch", (g, f, h), "composite has wrong endpoints")
    for f in c.morphisms:
        if c.compose(c.identity[c.tgt[f]], f) != f or c.compose(f, c.identity[c.src[f]]) != f:
            return Violation("unit", (f,), "identity is not a unit")
    out = [[] for _ in c.objects]
    for f in c.morphisms:
        out[c.src[f]].append(f)
    for f in c.morphisms:
        for g in out[c.tgt[f]]:
            gf = c.compose(g, f)
            for h in out[c.tgt[g]]:
                if c.compose(h, gf) != c.compose(c.compose(h, g), f):
                    return Violation("associativity", (h, g, f), "h∘(g∘f) != (h∘g)∘f")
    return None


# -- standard categories -------------------------------------------------------

def poset(elements: Sequence[Hashable], relation, name=None) -> FinCat:
    """Thin category of a partial order given by pairs ``(a, b)`` meaning a <= b."""
    op = dict(module="fincat", op="poset")
    elements = list(elements)
    idx = {e: i for i, e in enumerate(elements)}
    if len(idx) != len(elements):
        raise FormatError("duplicate poset elements", **op)
    leq = {(e, e) for e in elements}
    for a, b in relation:
        if a not in idx or b not in idx:
            raise FormatError(f"relation mentions unknown element in {(a, b)!r}", **op)
        leq.add((a, b))
    for a, b in leq:
        if a != b and (b, a) in leq:
            raise FormatError(f"relation not antisymmetric at {(a, b)!r}", **op)
    above = {e: [] for e in elements}
    for a, b in sorted(leq, key=lambda p: (idx[p[0]], idx[p[1]])):
        above[a].append(b)
    for a, b in leq:
        for c in above[b]:
            if (a, c) not in leq:
                raise FormatError(f"relation not transitive at {(a, b, c)!r}", **op)
    pairs = sorted(leq, key=lambda p: (idx[p[0]], idx[p[1]]))
    pidx = {p: i for i, p in enumerate(pairs)}
    src = [idx[a] for a, _ in pairs]
    tgt = [idx[b] for _, b in pairs]
    ident = [pidx[(e, e)] for e in elements]
    table = {}
    for (a, b) in pairs:
        for c in above[b]:
            table[(pidx[(b, c)], pidx[(a, b)])] = pidx[(a, c)]
    return FinCat(src, tgt, ident, table, obj_labels=elements, mor_labels=pairs, name=name)


@lru_cache(maxsize=None)
def ordinal(n: int) -> FinCat:
    """The linear order [n] = {0 < 1 < ... < n}."""
    if n < 0:
        raise FormatError("ordinal needs n >= 0", module="fincat", op="ordinal")
    return poset(range(n + 1), [(i, j) for i in range(n + 1) for j in range(i, n + 1)],
                 name=f"[{n}]")


@lru_cache(maxsize=None)
def span() -> FinCat:
    """The span shape b <- a -> c, with apex object 0."""
    return poset([0, 1, 2], [(0, 1), (0, 2)], name="Γ")


@lru_cache(maxsize=None)
def codiscrete(n: int) -> FinCat:
    """n objects with exactly one morphism between any two of them."""
    pairs = [(i, j) for i in range(n) for j in range(n)]
    pidx = {p: k for k, p in enumerate(pairs)}
    table = {(pidx[(j, k)], pidx[(i, j)]): pidx[(i, k)]
             for i in range(n) for j in range(n) for k in range(n)}
    return FinCat([i for i, _ in pairs], [j for _, j in pairs], [pidx[(i, i)] for i in range(n)],
                  table, obj_labels=list(range(n)), mor_labels=pairs, name=f"codisc({n})")


@lru_cache(maxsize=None)
def iso_interval() -> FinCat:
    """The free-living isomorphism: two objects, two mutually inverse arrows."""
    c = codiscrete(2)
    return FinCat(c.src, c.tgt, c.identity, dict(c.table_items()), obj_labels=c.obj_labels,
                  mor_labels=c.mor_labels, name="𝕀")


def is_homotopy_finite(c: FinCat) -> bool:
    for x in c.objects:
        if c.hom(x, x) != (c.identity[x],):
            return False
    for x in c.objects:
        for y in c.objects:
            if x < y and _isomorphic_objects(c, x, y):
                return False
    return True


def _isomorphic_objects(c: FinCat, x: int, y: int) -> bool:
    for f in c.hom(x, y):
        for g in c.hom(y, x):
            if c.compose(g, f) == c.identity[x] and c.compose(f, g) == c.identity[y]:
                return True
    return False


# -- functors and natural transformations --------------------------------------

class CatFunctor:
    __slots__ = ("dom", "cod", "obj_map", "mor_map", "_hash")

    def __init__(self, dom: FinCat, cod: FinCat, obj_map, mor_map):
        self.dom = dom
        self.cod = cod
        self.obj_map = tuple(obj_map)
        self.mor_map = tuple(mor_map)
        self._hash = None
        if len(self.obj_map) != dom.n_obj or len(self.mor_map) != dom.n_mor:
            raise FormatError("functor maps have the wrong length", module="fincat", op="CatFunctor")

    def obj(self, x: int) -> int:
        return self.obj_map[x]

    def mor(self, f: int) -> int:
        return self.mor_map[f]

    def __eq__(self, other):
        return (isinstance(other, CatFunctor) and self.obj_map == other.obj_map
                and self.mor_map == other.mor_map and self.dom == other.dom and self.cod == other.cod)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.obj_map, self.mor_map, self.dom, self.cod))
        return self._hash

    def __repr__(self):
        return f"CatFunctor({self.dom!r} -> {self.cod!r}, obj={self.obj_map})"


def validate_functor(F: CatFunctor) -> Optional[Violation]:
    j, k = F.dom, F.cod
    for f in j.morphisms:
        m = F.mor_map[f]
        if not 0 <= m < k.n_mor:
            return Violation("format", (f,), "image is not a morphism")
        if k.src[m] != F.obj_map[j.src[f]] or k.tgt[m] != F.obj_map[j.tgt[f]]:
            return Violation("src/tgt", (f,), "functor does not preserve endpoints")
    for x in j.objects:
        if F.mor_map[j.identity[x]] != k.identity[F.obj_map[x]]:
            return Violation("identity", (x,), "functor does not preserve identities")
    for (g, f), h in j.table_items():
        if k.compose(F.mor_map[g], F.mor_map[f]) != F.mor_map[h]:
            return Violation("composition", (g, f), "functor does not preserve composition")
    return None


def identity_functor(c: FinCat) -> CatFunctor:
    return CatFunctor(c, c, range(c.n_obj), range(c.n_mor))


def compose_functors(g: CatFunctor, f: CatFunctor) -> CatFunctor:
    """``g∘f``."""
    if f.cod != g.dom:
        raise ValueError("functors are not composable")
    return CatFunctor(f.dom, g.cod, [g.obj_map[x] for x in f.obj_map],
                      [g.mor_map[m] for m in f.mor_map])


class CatNatTransf:
    __slots__ = ("source", "target", "components")

    def __init__(self, source: CatFunctor, target: CatFunctor, components):
        if source.dom != target.dom or source.cod != target.cod:
            raise FormatError("natural transformation between non-parallel functors",
                              module="fincat", op="CatNatTransf")
        self.source = source
        self.target = target
        self.components = tuple(components)

    def __eq__(self, other):
        return (isinstance(other, CatNatTransf) and self.components == other.components
                and self.source == other.source and self.target == other.target)

    def __hash__(self):
        return hash((self.components, self.source, self.target))

    def __repr__(self):
        return f"CatNatTransf({self.components})"


def validate_nat(a: CatNatTransf) -> Optional[Violation]:
    F, G = a.source, a.target
    j, k = F.dom, F.cod
    for x in j.objects:
        c = a.components[x]
        if k.src[c] != F.obj_map[x] or k.tgt[c] != G.obj_map[x]:
            return Violation("src/tgt", (x,), "component has wrong endpoints")
    for m in j.morphisms:
        x, y = j.src[m], j.tgt[m]
        if k.compose(G.mor_map[m], a.components[x]) != k.compose(a.components[y], F.mor_map[m]):
            return Violation("naturality", (m,), "naturality square does not commute")
    return None


def identity_nat(F: CatFunctor) -> CatNatTransf:
    return CatNatTransf(F, F, [F.cod.identity[y] for y in F.obj_map])


def vertical_compose(b: CatNatTransf, a: CatNatTransf) -> CatNatTransf:
    """``b·a`` for ``a: F => G`` and ``b: G => H``."""
    k = a.source.cod
    return CatNatTransf(a.source, b.target,
                        [k.compose(bx, ax) for ax, bx in zip(a.components, b.components)])


def whisker_left(a: CatNatTransf, h: CatFunctor) -> CatNatTransf:
    """``a h``: precompose the transformation with a functor."""
    return CatNatTransf(compose_functors(a.source, h), compose_functors(a.target, h),
                        [a.components[x] for x in h.obj_map])


def whisker_right(h: CatFunctor, a: CatNatTransf) -> CatNatTransf:
    """``h a``: postcompose the transformation with a functor."""
    return CatNatTransf(compose_functors(h, a.source), compose_functors(h, a.target),
                        [h.mor_map[c] for c in a.components])


# -- products and coproducts ------------------------------------------------

class Product(NamedTuple):
    category: FinCat
    first: CatFunctor
    second: CatFunctor


class Coproduct(NamedTuple):
    category: FinCat
    left: CatFunctor
    right: CatFunctor


@lru_cache(maxsize=256)
def product(a: FinCat, b: FinCat) -> Product:
    nb, mb = b.n_obj, b.n_mor
    src, tgt, labels = [], [], []
    for f in a.morphisms:
        for g in b.morphisms:
            src.append(a.src[f] * nb + b.src[g])
            tgt.append(a.tgt[f] * nb + b.tgt[g])
            labels.append((a.mor_labels[f], b.mor_labels[g]))
    ident = [a.identity[x] * mb + b.identity[y] for x in a.objects for y in b.objects]
    table = {}
    a_items, b_items = a.table_items(), b.table_items()
    for (f2, f1), f in a_items:
        for (g2, g1), g in b_items:
            table[(f2 * mb + g2, f1 * mb + g1)] = f * mb + g
    obj_labels = [(a.obj_labels[x], b.obj_labels[y]) for x in a.objects for y in b.objects]
    name = f"{a.name or 'A'}×{b.name or 'B'}"
    c = FinCat(src, tgt, ident, table, obj_labels=obj_labels, mor_labels=labels, name=name)
    p1 = CatFunctor(c, a, [x for x in a.objects for _ in b.objects],
                    [f for f in a.morphisms for _ in b.morphisms])
    p2 = CatFunctor(c, b, [y for _ in a.objects for y in b.objects],
                    [g for _ in a.morphisms for g in b.morphisms])
    return Product(c, p1, p2)


@lru_cache(maxsize=256)
def coproduct(a: FinCat, b: FinCat) -> Coproduct:
    na, ma = a.n_obj, a.n_mor
    src = list(a.src) + [s + na for s in b.src]
    tgt = list(a.tgt) + [t + na for t in b.tgt]
    ident = list(a.identity) + [i + ma for i in b.identity]
    table = {}
    for (g, f), h in a.table_items():
        table[(g, f)] = h
    for (g, f), h in b.table_items():
        table[(g + ma, f + ma)] = h + ma
    c = FinCat(src, tgt, ident, table,
               obj_labels=[(0, l) for l in a.obj_labels] + [(1, l) for l in b.obj_labels],
               mor_labels=[(0, l) for l in a.mor_labels] + [(1, l) for l in b.mor_labels],
               name=f"{a.name or 'A'}⊔{b.name or 'B'}")
    left = CatFunctor(a, c, range(na), range(ma))
    right = CatFunctor(b, c, range(na, na + b.n_obj), range(ma, ma + b.n_mor))
    return Coproduct(c, left, right)


# -- functor enumeration ----------------------------------------------------

def _search_functors(j: FinCat, k: FinCat, bijective: bool = False,
                     obj_constraint: Optional[Callable] = None) -> Iterator[CatFunctor]:
    if bijective and (j.n_obj != k.n_obj or j.n_mor != k.n_mor):
        return
    nonid = [f for f in j.morphisms if not j.is_identity(f)]
    by_obj = [[] for _ in j.objects]
    for f in nonid:
        by_obj[max(j.src[f], j.tgt[f])].append(f)
    pos = {f: i for i, f in enumerate(nonid)}
    checks = [[] for _ in nonid]
    for (g, f), h in j.table_items():
        if g in pos and f in pos:
            last = max(pos[g], pos[f], pos.get(h, -1))
            checks[last].append((g, f, h))
    obj_map = [None] * j.n_obj
    mor_map = [None] * j.n_mor
    used_obj, used_mor = set(), set()

    def assign_morphisms(i):
        if i == len(nonid):
            yield CatFunctor(j, k, obj_map, mor_map)
            return
        f = nonid[i]
        for m in k.hom(obj_map[j.src[f]], obj_map[j.tgt[f]]):
            if bijective and m in used_mor:
                continue
            mor_map[f] = m
            ok = True
            for g, f1, h in checks[i]:
                if k.compose(mor_map[g], mor_map[f1]) != mor_map[h]:
                    ok = False
                    break
            if ok:
                if bijective:
                    used_mor.add(m)
                yield from assign_morphisms(i + 1)
                if bijective:
                    used_mor.discard(m)
        mor_map[f] = None

    def assign_objects(x):
        if x == j.n_obj:
            for y in j.objects:
                mor_map[j.identity[y]] = k.identity[obj_map[y]]
            if bijective:
                used_mor.clear()
                used_mor.update(mor_map[j.identity[y]] for y in j.objects)
            yield from assign_morphisms(0)
            return
        for y in k.objects:
            if bijective and y in used_obj:
                continue
            if obj_constraint is not None and not obj_constraint(x, y):
                continue
            obj_map[x] = y
            if all(k.hom(obj_map[j.src[f]], obj_map[j.tgt[f]]) for f in by_obj[x]):
                used_obj.add(y)
                yield from assign_objects(x + 1)
                used_obj.discard(y)
        obj_map[x] = None

    yield from assign_objects(0)


def enumerate_functors(j: FinCat, k: FinCat) -> list:
    """All functors j -> k, lexicographic on (obj_map, mor_map)."""
    return list(_search_functors(j, k))


def find_isomorphism(a: FinCat, b: FinCat) -> Optional[CatFunctor]:
    """Some isomorphism of categories a -> b, or ``None``."""
    return next(_search_functors(a, b, bijective=True), None)


def is_isomorphism(F: CatFunctor) -> bool:
    return (len(set(F.obj_map)) == F.dom.n_obj == F.cod.n_obj
            and len(set(F.mor_map)) == F.dom.n_mor == F.cod.n_mor)


def enumerate_nat(F: CatFunctor, G: CatFunctor) -> list:
    """Component tuples of all natural transformations F => G, lexicographic."""
    j, k = F.dom, F.cod
    by_obj = [[] for _ in j.objects]
    for m in j.morphisms:
        if not j.is_identity(m):
            by_obj[max(j.src[m], j.tgt[m])].append(m)
    comps = [None] * j.n_obj
    out = []

    def go(x):
        if x == j.n_obj:
            out.append(tuple(comps))
            return
        for c in k.hom(F.obj_map[x], G.obj_map[x]):
            comps[x] = c
            if all(k.compose(G.mor_map[m], comps[j.src[m]]) == k.compose(comps[j.tgt[m]], F.mor_map[m])
                   for m in by_obj[x]):
                go(x + 1)
        comps[x] = None

    go(0)
    return out


class FunctorCategory(FinCat):
    """``k^j``: functors as objects, natural transformations as morphisms."""

    def __init__(self, j: FinCat, k: FinCat):
        self.j, self.k = j, k
        functors = enumerate_functors(j, k)
        self._functors = functors
        src, tgt, labels = [], [], []
        ident = [None] * len(functors)
        thin = k.is_thin
        for a, F in enumerate(functors):
            for b, G in enumerate(functors):
                if thin:
                    comps = []
                    for x in j.objects:
                        h = k.hom(F.obj_map[x], G.obj_map[x])
                        if not h:
                            break
                        comps.append(h[0])
                    else:
                        if a == b:
                            ident[a] = len(src)
                        src.append(a)
                        tgt.append(b)
                        labels.append((a, b, tuple(comps)))
                    continue
                for comps in enumerate_nat(F, G):
                    if a == b and all(k.is_identity(c) for c in comps):
                        ident[a] = len(src)
                    src.append(a)
                    tgt.append(b)
                    labels.append((a, b, comps))
        obj_labels = [(F.obj_map, F.mor_map) for F in functors]
        index = {lab: i for i, lab in enumerate(labels)}

        def comp(g, f):
            _, c, gc = labels[g]
            a, _, fc = labels[f]
            return index.get((a, c, tuple(k.compose(y, x) for x, y in zip(fc, gc))))

        super().__init__(src, tgt, ident, comp, obj_labels=obj_labels, mor_labels=labels,
                         name=f"{k.name or 'K'}^{j.name or 'J'}", key=("functor_category", j, k))

    def functor(self, obj: int) -> CatFunctor:
        return self._functors[obj]

    def object_of(self, F: CatFunctor) -> int:
        return self.obj_id((F.obj_map, F.mor_map))

    def transformation(self, mor: int) -> CatNatTransf:
        a, b, comps = self.mor_labels[mor]
        return CatNatTransf(self._functors[a], self._functors[b], comps)

    def morphism_of(self, t: CatNatTransf) -> int:
        return self.mor_id((self.object_of(t.source), self.object_of(t.target), t.components))


_fc_cache: dict = {}


def functor_category(j: FinCat, k: FinCat) -> FunctorCategory:
    key = (j, k)
    if key not in _fc_cache:
        _fc_cache[key] = FunctorCategory(j, k)
    return _fc_cache[key]


def is_full_and_faithful(F: CatFunctor) -> bool:
    j, k = F.dom, F.cod
    for x in j.objects:
        for y in j.objects:
            images = [F.mor_map[f] for f in j.hom(x, y)]
            if len(set(images)) != len(images):
                return False
            if len(images) != len(k.hom(F.obj_map[x], F.obj_map[y])):
                return False
    return True


def is_essentially_surjective(F: CatFunctor) -> bool:
    k = F.cod
    hit = set(F.obj_map)
    return all(any(_isomorphic_objects(k, y, z) or y == z for z in hit) for y in k.objects)


def is_equivalence(F: CatFunctor) -> bool:
    return is_full_and_faithful(F) and is_essentially_surjective(F)


def functor_from_labels(j: FinCat, k: FinCat, obj_labels, mor_labels=None) -> CatFunctor:
    """Functor given by object labels; for a thin codomain morphisms are inferred."""
    om = [k.obj_id(l) for l in obj_labels]
    if mor_labels is None:
        mm = []
        for f in j.morphisms:
            h = k.hom(om[j.src[f]], om[j.tgt[f]])
            if len(h) != 1:
                raise FormatError("cannot infer morphism image", module="fincat", op="functor_from_labels")
            mm.append(h[0])
    else:
        mm = [k.mor_id(l) for l in mor_labels]
    return CatFunctor(j, k, om, mm)
