"""Independent brute-force oracles for small groups (order <= ~48).

Everything here works on raw image tuples and explicit multiplication
tables; none of the library's structural machinery (BSGS, class
signatures, automorphism search) is used, so agreement is meaningful.
"""
from __future__ import annotations

from itertools import product


def compose(p: tuple, q: tuple) -> tuple:
    """(p then q) as image tuples."""
    return tuple(q[i] for i in p)


def inverse(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def closure(gens: list[tuple]) -> list[tuple]:
    """All elements generated, identity first, BFS order (deterministic)."""
    if not gens:
        return []
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    order = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    nxt.append(y)
        frontier = nxt
    return order


class Table:
    """Multiplication table of a small group over element indices."""

    def __init__(self, gens: list[tuple]):
        self.els = closure(gens)
        self.n = len(self.els)
        self.index = {e: i for i, e in enumerate(self.els)}
        self.gen_idx = [self.index[g] for g in gens]
        self.mul = [[self.index[compose(a, b)] for b in self.els]
                    for a in self.els]
        self.inv = [self.index[inverse(a)] for a in self.els]
        # expression of each element as a word in the generators (BFS)
        self.word: list[list[int]] = [[] for _ in range(self.n)]
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for i in frontier:
                for gi in self.gen_idx:
                    j = self.mul[i][gi]
                    if j not in seen:
                        seen.add(j)
                        self.word[j] = self.word[i] + [gi]
                        nxt.append(j)
            frontier = nxt

    def element_order(self, i: int) -> int:
        k, x = 1, i
        while x != 0:
            x = self.mul[x][i]
            k += 1
        return k


def conjugacy_classes(t: Table) -> list[frozenset]:
    """Classes by conjugating every element with every element."""
    left = set(range(t.n))
    classes = []
    while left:
        x = min(left)
        cls = {t.mul[t.mul[t.inv[g]][x]][g] for g in range(t.n)}
        classes.append(frozenset(cls))
        left -= cls
    return classes


def center(t: Table) -> frozenset:
    return frozenset(x for x in range(t.n)
                     if all(t.mul[x][y] == t.mul[y][x] for y in range(t.n)))


def class_order_structure(t: Table) -> str:
    """`o:n/c` string over non-identity element orders, like the library."""
    per: dict[int, list[int]] = {}
    for c in conjugacy_classes(t):
        rep = next(iter(c))
        if rep == 0 and len(c) == 1:
            continue
        o = t.element_order(rep)
        per.setdefault(o, [0, 0])
        per[o][0] += len(c)
        per[o][1] += 1
    return " ".join(f"{o}:{per[o][0]}/{per[o][1]}" for o in sorted(per))


def _extend(t_src: Table, t_dst: Table, images: tuple[int, ...]) -> list | None:
    """Extend generator images to a full map via stored words; None if the
    result is not a bijective homomorphism."""
    img_of_gen = dict(zip(t_src.gen_idx, images))
    f = [0] * t_src.n
    for i in range(t_src.n):
        y = 0
        for gi in t_src.word[i]:
            y = t_dst.mul[y][img_of_gen[gi]]
        f[i] = y
    if len(set(f)) != t_src.n or t_src.n != t_dst.n:
        return None
    for a in range(t_src.n):
        for b in range(t_src.n):
            if f[t_src.mul[a][b]] != t_dst.mul[f[a]][f[b]]:
                return None
    return f


def _candidate_images(t_src: Table, t_dst: Table):
    """Image tuples for the source generators, prefiltered by element order."""
    pools = []
    for gi in t_src.gen_idx:
        o = t_src.element_order(gi)
        pools.append([x for x in range(t_dst.n)
                      if t_dst.element_order(x) == o])
    return product(*pools)


def automorphism_count(t: Table) -> int:
    return sum(_extend(t, t, images) is not None
               for images in _candidate_images(t, t))


def are_isomorphic(t_a: Table, t_b: Table) -> bool:
    if t_a.n != t_b.n:
        return False
    return any(_extend(t_a, t_b, images) is not None
               for images in _candidate_images(t_a, t_b))


def _small_generating_tuples(els: list[tuple]) -> list[tuple]:
    """A generating set of at most 3 elements, found by exhaustive search
    over singles, then pairs, then triples (elements in BFS order)."""
    n = len(els)
    for x in els:
        if len(closure([x])) == n:
            return [x]
    for i, x in enumerate(els):
        for y in els[i + 1:]:
            if len(closure([x, y])) == n:
                return [x, y]
    for i, x in enumerate(els):
        for j in range(i + 1, len(els)):
            for k in range(j + 1, len(els)):
                if len(closure([x, els[j], els[k]])) == n:
                    return [x, els[j], els[k]]
    raise AssertionError("no generating set of size <= 3 found")


def from_group(G) -> Table:
    """Build a Table from a library PermGroup, reduced to a small
    generating set so brute-force image searches stay tractable."""
    els = closure([p.images for p in G.generators])
    return Table(_small_generating_tuples(els))
