"""Brute-force counts computed without the package, used as frozen oracles.

Posets are given as ``(elements, leq)`` with ``leq`` a set of pairs.
"""

from itertools import combinations, product
from math import comb


def chain(n):
    els = list(range(n + 1))
    return els, {(a, b) for a in els for b in els if a <= b}


def span_poset():
    els = [0, 1, 2]
    return els, {(0, 0), (1, 1), (2, 2), (0, 1), (0, 2)}


def poset_product(p, q):
    (ea, la), (eb, lb) = p, q
    els = [(a, b) for a in ea for b in eb]
    return els, {(x, y) for x in els for y in els if (x[0], y[0]) in la and (x[1], y[1]) in lb}


def poset_sum(p, q):
    (ea, la), (eb, lb) = p, q
    els = [(0, a) for a in ea] + [(1, b) for b in eb]
    leq = {((0, a), (0, b)) for a, b in la} | {((1, a), (1, b)) for a, b in lb}
    return els, leq


def monotone_maps(p, q):
    """All order preserving maps p -> q, as tuples indexed like p's elements."""
    (ea, la), (eb, lb) = p, q
    out = []
    for vals in product(eb, repeat=len(ea)):
        f = dict(zip(ea, vals))
        if all((f[a], f[b]) in lb for a, b in la):
            out.append(vals)
    return out


def count_monotone(p, q):
    return len(monotone_maps(p, q))


def simplex_cells(n, k):
    """k-simplices of Δ[n]: weakly increasing sequences of length k+1."""
    return [s for s in product(range(n + 1), repeat=k + 1)
            if all(s[i] <= s[i + 1] for i in range(k))]


def boundary_cells(n, k):
    return [s for s in simplex_cells(n, k) if set(s) != set(range(n + 1))]


def horn_cells(n, j, k):
    need = set(range(n + 1)) - {j}
    return [s for s in simplex_cells(n, k) if not need <= set(s)]


def nerve_cells(p, k):
    """k-simplices of the nerve of a poset: chains x0 <= ... <= xk."""
    els, leq = p
    return [s for s in product(els, repeat=k + 1) if all((s[i], s[i + 1]) in leq for i in range(k))]


def free_paths(n_vertices, edges, max_len=10):
    """Number of paths (including identities) in a finite acyclic graph."""
    count = n_vertices
    layer = [(e,) for e in range(len(edges))]
    while layer:
        count += len(layer)
        nxt = []
        for path in layer:
            end = edges[path[-1]][1]
            nxt.extend(path + (e,) for e, (s, _) in enumerate(edges) if s == end)
        layer = nxt if len(layer[0]) < max_len else []
    return count


def binomial_monotone(m, n):
    """|monotone maps [m] -> [n]| in closed form."""
    return comb(n + m + 1, m + 1)


def random_dag_poset(n, edges):
    """Poset generated by ``edges`` (pairs i < j) on range(n), transitively closed."""
    leq = {(i, i) for i in range(n)} | set(edges)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in list(product(leq, leq)):
            if b == c and (a, d) not in leq:
                leq.add((a, d))
                changed = True
    return list(range(n)), leq


def upper_pairs(n):
    return list(combinations(range(n), 2))
