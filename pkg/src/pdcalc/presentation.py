"""Finite categories from generators and relations, via bounded congruence closure.

Words are paths ``(start, (g1, g2, ...))`` of generator indices written in
diagrammatic order (g1 first).  All words up to ``word_bound`` are
enumerated, each relation is applied in every context, and the resulting
classes become morphisms.  The computation is accepted only once it has
stabilised: with ``m`` the longest shortest representative, every word of
length ``m + 1`` must already be equivalent to a shorter one and ``2m`` must
fit under the bound, so composing two representatives stays inside the
enumerated region.
"""

from __future__ import annotations

from typing import NamedTuple

from . import config
from .errors import WordBoundExceeded
from .fincat import FinCat


class Presented(NamedTuple):
    category: FinCat
    word_class: dict      # (start, word) -> morphism id, for every enumerated word
    reps: list            # morphism id -> shortest (start, word)


class _UF:
    def __init__(self, n):
        self.p = list(range(n))

    def find(self, a):
        p = self.p
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            if b < a:
                a, b = b, a
            self.p[b] = a


def present(objects, generators, relations, word_bound=config.DEFAULT_WORD_BOUND,
            name=None, where="presentation"):
    """Solve a presentation.

    ``objects``: list of labels; ``generators``: list of ``(label, src, tgt)``
    with src/tgt as object positions; ``relations``: pairs of ``(start, word)``
    with equal endpoints.
    """
    src = [s for _, s, _ in generators]
    tgt = [t for _, _, t in generators]
    out = [[] for _ in objects]
    for g, s in enumerate(src):
        out[s].append(g)
    limit = config.get_budget()

    words = []
    index = {}
    by_len = [[]]
    for x in range(len(objects)):
        w = (x, ())
        index[w] = len(words)
        words.append(w)
        by_len[0].append(w)
    end = {}
    for w in by_len[0]:
        end[w] = w[0]
    for length in range(1, word_bound + 1):
        layer = []
        for w in by_len[length - 1]:
            for g in out[end[w]]:
                v = (w[0], w[1] + (g,))
                index[v] = len(words)
                words.append(v)
                end[v] = tgt[g]
                layer.append(v)
                if len(words) > limit:
                    raise WordBoundExceeded(
                        f"{len(words)} words exceed the budget {limit}",
                        count=len(words), module=where, op="present")
        by_len.append(layer)
        if not layer:
            break

    uf = _UF(len(words))
    rules = []
    for (s1, u), (s2, v) in relations:
        if u == v:
            continue
        if u:
            rules.append((u, v))
        if v:
            rules.append((v, u))
    by_head = {}
    for u, v in dict.fromkeys(rules):
        by_head.setdefault(u[0], []).append((u, v))
    for w in words:
        start, seq = w
        n = len(seq)
        for i in range(n):
            for u, v in by_head.get(seq[i], ()):
                k = len(u)
                if i + k <= n and seq[i:i + k] == u:
                    repl = seq[:i] + v + seq[i + k:]
                    if len(repl) <= word_bound:
                        uf.union(index[w], index[(start, repl)])

    shortest = {}
    for i, w in enumerate(words):
        r = uf.find(i)
        if r not in shortest:
            shortest[r] = w
    m = max((len(w[1]) for w in shortest.values()), default=0)
    stable = 2 * m <= word_bound and m + 1 <= max(word_bound, 1)
    if stable and m + 1 < len(by_len):
        stable = all(len(shortest[uf.find(index[w])][1]) <= m for w in by_len[m + 1])
    if not stable:
        raise WordBoundExceeded(
            f"congruence closure did not stabilise within word bound {word_bound} "
            f"({len(words)} words, longest reduced word {m})",
            count=len(words), module=where, op="present")

    roots = sorted(shortest, key=lambda r: (len(shortest[r][1]), r))
    mor_of_root = {r: k for k, r in enumerate(roots)}
    reps = [shortest[r] for r in roots]

    def endpoint(w):
        s, seq = w
        return s if not seq else tgt[seq[-1]]

    msrc = [w[0] for w in reps]
    mtgt = [endpoint(w) for w in reps]
    identity = [mor_of_root[uf.find(index[(x, ())])] for x in range(len(objects))]
    word_class = {w: mor_of_root[uf.find(i)] for i, w in enumerate(words)}

    def compose(g, f):
        if mtgt[f] != msrc[g]:
            return None
        w = (reps[f][0], reps[f][1] + reps[g][1])
        return word_class[w]

    table = {}
    for f in range(len(reps)):
        for g in range(len(reps)):
            h = compose(g, f)
            if h is not None:
                table[(g, f)] = h

    def label(w):
        return (objects[w[0]],) + tuple(generators[g][0] for g in w[1])

    cat = FinCat(msrc, mtgt, identity, table, obj_labels=list(objects),
                 mor_labels=[label(w) for w in reps], name=name)
    return Presented(cat, word_class, reps)
