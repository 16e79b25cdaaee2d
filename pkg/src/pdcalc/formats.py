"""Text formats read by the command line: categories, simplicial sets, maps,
probe families, certificates, and prederivator specs.

All documents are YAML.  Sequences standing for cells are turned into
tuples so they can be used as dictionary keys; mappings whose keys would
have to be sequences may instead be written as lists of ``[key, value]``
pairs.  Standard objects are addressable by name (``ordinal:2``, ``span``,
``delta:2``, ``horn:2:1``, ``nerve:ordinal:1`` ...).
"""

from __future__ import annotations

import os

import yaml

from . import config
from .errors import FormatError
from .fincat import (CatFunctor, CatNatTransf, FinCat, codiscrete, compose_functors, coproduct,
                     identity_functor, iso_interval, ordinal, product, span)
from .pdv import (ProbeFamily, coproduct_pd, constant_pd, homotopy_pd, ho_map, identity_pd_map,
                  representable_pd)
from .sset import (SimplicialMap, TruncSSet, boundary, horn, identity_map, inclusion, nerve,
                   nerve_map, point, standard_simplex)


def _err(msg, op):
    return FormatError(msg, module="formats", op=op)


def freeze(v):
    if isinstance(v, list):
        return tuple(freeze(x) for x in v)
    if isinstance(v, dict):
        return {freeze(k): freeze(x) for k, x in v.items()}
    return v


def load_document(path):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = yaml.safe_load(fh)
    except OSError as e:
        raise _err(f"cannot read {path}: {e.strerror}", "load") from None
    except yaml.YAMLError as e:
        raise _err(f"{path} is not valid YAML: {e}", "load") from None
    if not isinstance(doc, dict):
        raise _err(f"{path} must hold a mapping at top level", "load")
    return doc


def _pairs(obj, op):
    """A mapping given either as a dict or as a list of [key, value] pairs."""
    if obj is None:
        return {}
    if isinstance(obj, dict):
        return {freeze(k): freeze(v) for k, v in obj.items()}
    if isinstance(obj, list):
        out = {}
        for item in obj:
            if not isinstance(item, list) or len(item) != 2:
                raise _err("expected [key, value] pairs", op)
            out[freeze(item[0])] = freeze(item[1])
        return out
    raise _err("expected a mapping or a list of pairs", op)


def _resolve(ref, base):
    if base and not os.path.isabs(ref):
        cand = os.path.join(base, ref)
        if os.path.exists(cand):
            return cand
    return ref


# -- categories ------------------------------------------------------------------

def _builtin_category(name):
    head, _, arg = name.partition(":")
    try:
        if head == "ordinal":
            return ordinal(int(arg))
        if head == "codiscrete":
            return codiscrete(int(arg))
    except ValueError:
        raise _err(f"bad category name {name!r}", "category") from None
    if head == "span":
        return span()
    if head == "square":
        return product(ordinal(1), ordinal(1)).category
    if head == "iso":
        return iso_interval()
    if head == "disjoint" and arg:
        a, b = arg.split(",")
        return coproduct(ordinal(int(a)), ordinal(int(b))).category
    return None


def category_from_doc(doc, name=None) -> FinCat:
    op = "category"
    try:
        objects = list(doc["objects"])
        morphisms = list(doc["morphisms"])
    except (KeyError, TypeError):
        raise _err("a category needs 'objects' and 'morphisms'", op) from None
    opos = {freeze(o): i for i, o in enumerate(objects)}
    if len(opos) != len(objects):
        raise _err("duplicate object ids", op)
    mids, src, tgt = [], [], []
    for m in morphisms:
        if not isinstance(m, dict) or not {"id", "src", "tgt"} <= set(m):
            raise _err("each morphism needs id, src and tgt", op)
        s, t = freeze(m["src"]), freeze(m["tgt"])
        if s not in opos or t not in opos:
            raise _err(f"morphism {m['id']!r} has an unknown endpoint", op)
        mids.append(freeze(m["id"]))
        src.append(opos[s])
        tgt.append(opos[t])
    mpos = {m: i for i, m in enumerate(mids)}
    if len(mpos) != len(mids):
        raise _err("duplicate morphism ids", op)

    def mor(m):
        m = freeze(m)
        if m not in mpos:
            raise _err(f"unknown morphism {m!r}", op)
        return mpos[m]

    ids = _pairs(doc.get("identities"), op)
    identity = []
    for o in objects:
        o = freeze(o)
        if o not in ids:
            raise _err(f"object {o!r} has no identity", op)
        identity.append(mor(ids[o]))
    table = {}
    for row in doc.get("compose") or []:
        if not isinstance(row, list) or len(row) != 3:
            raise _err("compose rows are [g, f, gf]", op)
        g, f, h = (mor(x) for x in row)
        table[(g, f)] = h
    return FinCat(src, tgt, identity, table, obj_labels=[freeze(o) for o in objects],
                  mor_labels=mids, name=doc.get("name", name))


def load_category(spec, base=None) -> FinCat:
    c = _builtin_category(spec)
    if c is not None:
        return c
    path = _resolve(spec, base)
    return category_from_doc(load_document(path), name=os.path.splitext(os.path.basename(path))[0])


# -- simplicial sets ---------------------------------------------------------------

def _levels(obj, bound, op):
    if isinstance(obj, dict):
        return [obj.get(n, obj.get(str(n))) for n in range(bound + 1)]
    if isinstance(obj, list):
        return obj + [None] * (bound + 1 - len(obj))
    raise _err("expected per-dimension data", op)


def sset_from_doc(doc, name=None) -> TruncSSet:
    op = "sset"
    try:
        bound = int(doc["bound"])
    except (KeyError, TypeError, ValueError):
        raise _err("a simplicial set needs an integer 'bound'", op) from None
    cells = [[freeze(c) for c in (lv or [])] for lv in _levels(doc.get("cells"), bound, op)]
    faces = _levels(doc.get("faces") or {}, bound, op)
    degens = _levels(doc.get("degens") or {}, bound, op)

    def table(spec, n, count, what):
        spec = spec or {}
        out = []
        for i in range(count):
            part = spec.get(i, spec.get(str(i))) if isinstance(spec, dict) else None
            m = _pairs(part, op)
            out.append(m)
        if any(set(m) != set(cells[n]) for m in out):
            raise _err(f"{what} in dimension {n} must be given on every cell", op)
        return out

    face = [None] + [table(faces[n], n, n + 1, "faces") for n in range(1, bound + 1)]
    degen = [table(degens[n], n, n + 1, "degeneracies") for n in range(bound)]
    for n in range(1, bound + 1):
        for m in face[n]:
            if not set(m.values()) <= set(cells[n - 1]):
                raise _err(f"a face of a {n}-cell is not a cell", op)
    for n in range(bound):
        for m in degen[n]:
            if not set(m.values()) <= set(cells[n + 1]):
                raise _err(f"a degeneracy of a {n}-cell is not a cell", op)
    return TruncSSet(bound, cells, face, degen, name=doc.get("name", name))


def load_sset(spec, bound=config.DEFAULT_BOUND, base=None) -> TruncSSet:
    head, _, arg = spec.partition(":")
    try:
        if head == "delta":
            return standard_simplex(int(arg), bound)
        if head == "boundary":
            return boundary(int(arg), bound)
        if head == "horn":
            n, k = arg.split(":")
            return horn(int(n), int(k), bound)
    except ValueError:
        raise _err(f"bad simplicial set name {spec!r}", "sset") from None
    if head == "point":
        return point(bound)
    if head == "nerve":
        return nerve(load_category(arg, base), bound)
    path = _resolve(spec, base)
    return sset_from_doc(load_document(path), name=os.path.splitext(os.path.basename(path))[0])


# -- maps --------------------------------------------------------------------------

def _nerve_category(spec, base):
    if not spec.startswith("nerve:"):
        return None
    return load_category(spec[len("nerve:"):], base)


def functor_from_doc(doc, j: FinCat, k: FinCat) -> CatFunctor:
    op = "functor"
    try:
        objs, mors = list(doc["objects"]), list(doc["morphisms"])
    except (KeyError, TypeError):
        raise _err("a functor needs 'objects' and 'morphisms' lists", op) from None
    olab = {lab: i for i, lab in enumerate(k.obj_labels)}
    mlab = {lab: i for i, lab in enumerate(k.mor_labels)}
    try:
        om = [olab[freeze(o)] for o in objs]
        mm = [mlab[freeze(m)] for m in mors]
    except KeyError as e:
        raise _err(f"functor refers to unknown {e.args[0]!r}", op) from None
    return CatFunctor(j, k, om, mm)


def map_from_doc(doc, bound=config.DEFAULT_BOUND, base=None) -> SimplicialMap:
    op = "map"
    try:
        sspec, tspec = str(doc["source"]), str(doc["target"])
    except (KeyError, TypeError):
        raise _err("a map needs 'source' and 'target'", op) from None
    X, Y = load_sset(sspec, bound, base), load_sset(tspec, bound, base)
    if "functor" in doc:
        j, k = _nerve_category(sspec, base), _nerve_category(tspec, base)
        if j is None or k is None:
            raise _err("'functor' needs nerve: source and target", op)
        return nerve_map(functor_from_doc(doc["functor"], j, k), bound)
    kind = doc.get("kind")
    if kind == "terminal":
        if any(len(level) != 1 for level in Y.cells):
            raise _err("a terminal map needs a point as target", op)
        return SimplicialMap.from_function(X, Y, lambda n, c: Y.cells[n][0])
    if kind == "identity":
        return identity_map(X)
    if kind == "inclusion":
        return inclusion(X, Y)
    if "images" not in doc:
        raise _err("a map needs 'functor', 'kind' or 'images'", op)
    levels = _levels(doc["images"], X.bound, op)
    images = [_pairs(lv, op) for lv in levels]
    for n in range(X.bound + 1):
        if set(images[n]) != set(X.cells[n]):
            raise _err(f"images must be given on every {n}-cell", op)
        if not set(images[n].values()) <= set(Y.cells[n]):
            raise _err(f"an image of a {n}-cell is not a cell of the target", op)
    return SimplicialMap.from_function(X, Y, lambda n, c: images[n][c])


def load_map(path, bound=config.DEFAULT_BOUND) -> SimplicialMap:
    return map_from_doc(load_document(path), bound, os.path.dirname(os.path.abspath(path)))


# -- certificates ------------------------------------------------------------------

def _homotopy(doc, x, start_functor, cat, bound):
    from .modelcheck import constant_homotopy, homotopy_from_transformation
    from .sset import sset_product
    if doc == "constant":
        return constant_homotopy(x)
    if isinstance(doc, dict) and "components" in doc:
        if cat is None or start_functor is None:
            raise _err("'components' needs nerves of categories on both sides", "certificate")
        lab = {m: i for i, m in enumerate(cat.mor_labels)}
        try:
            comps = [lab[freeze(m)] for m in doc["components"]]
        except KeyError as e:
            raise _err(f"unknown component {e.args[0]!r}", "certificate") from None
        return homotopy_from_transformation(
            CatNatTransf(start_functor, identity_functor(cat), comps), bound)
    if isinstance(doc, dict) and "images" in doc:
        dom = sset_product(standard_simplex(1, bound), x).sset
        levels = _levels(doc["images"], bound, "certificate")
        images = [_pairs(lv, "certificate") for lv in levels]
        try:
            return SimplicialMap.from_function(dom, x, lambda n, c: images[n][c])
        except KeyError as e:
            raise _err(f"homotopy misses the cell {e.args[0]!r}", "certificate") from None
    raise _err("a homotopy is 'constant', {components: [...]} or {images: ...}", "certificate")


def load_certificate(path, f: SimplicialMap, f_doc=None, bound=config.DEFAULT_BOUND):
    """Read ``inverse``, ``hx`` and ``hy`` for the map ``f``.

    ``hx`` is a homotopy from g∘f to the identity of the source, ``hy`` from
    f∘g to the identity of the target.
    """
    from .modelcheck import Certificate
    base = os.path.dirname(os.path.abspath(path))
    doc = load_document(path)
    for key in ("inverse", "hx", "hy"):
        if key not in doc:
            raise _err(f"certificate needs '{key}'", "certificate")
    inv_doc = doc["inverse"]
    g = map_from_doc(inv_doc, bound, base)
    X, Y = f.dom, f.cod
    cx = cy = F = G = None
    if f_doc is not None and "functor" in f_doc and isinstance(inv_doc, dict) and "functor" in inv_doc:
        cx = _nerve_category(str(f_doc["source"]), base)
        cy = _nerve_category(str(f_doc["target"]), base)
        F = functor_from_doc(f_doc["functor"], cx, cy)
        G = functor_from_doc(inv_doc["functor"], cy, cx)
    gf = compose_functors(G, F) if F is not None else None
    fg = compose_functors(F, G) if F is not None else None
    hx = _homotopy(doc["hx"], X, gf, cx, bound)
    hy = _homotopy(doc["hy"], Y, fg, cy, bound)
    return Certificate(g, hx, hy)


# -- probes and prederivator specs -------------------------------------------------

def load_probes(path) -> ProbeFamily:
    base = os.path.dirname(os.path.abspath(path))
    doc = load_document(path)
    cats = doc.get("categories")
    if not isinstance(cats, list) or not cats:
        raise _err("a probe file needs a non-empty 'categories' list", "probes")
    categories = [load_category(str(c), base) for c in cats]
    closure = [load_category(str(c), base) for c in doc.get("closure") or []]
    return ProbeFamily(categories, auto_close=bool(doc.get("auto_close", True)), closure=closure)


def _split_top(s):
    return [p for p in s.split(",") if p]


def load_pd(spec, bound=config.DEFAULT_BOUND, word_bound=config.DEFAULT_WORD_BOUND):
    head, sep, arg = spec.partition(":")
    if not sep:
        raise _err(f"prederivator spec {spec!r} needs a kind prefix", "pd_spec")
    if head == "rep":
        return representable_pd(load_category(arg))
    if head == "const":
        return constant_pd(load_category(arg))
    if head == "ho":
        return homotopy_pd(load_sset(arg, bound), word_bound)
    if head == "L":
        from .lkan import L_pd
        return L_pd(load_sset(arg, bound), word_bound)
    if head == "coprod":
        parts = _split_top(arg)
        if len(parts) < 2:
            raise _err("coprod needs at least two comma separated parts", "pd_spec")
        return coproduct_pd([load_pd(p, bound, word_bound) for p in parts])
    raise _err(f"unknown prederivator kind {head!r}", "pd_spec")


def load_pd_map(spec, bound=config.DEFAULT_BOUND, word_bound=config.DEFAULT_WORD_BOUND):
    """``ho:<mapfile>`` for Ho of a simplicial map, ``id:<pd-spec>`` for an identity."""
    head, sep, arg = spec.partition(":")
    if head == "ho" and sep:
        return ho_map(load_map(arg, bound))
    if head == "id" and sep:
        return identity_pd_map(load_pd(arg, bound, word_bound))
    raise _err(f"unknown prederivator map spec {spec!r}", "pd_map_spec")
