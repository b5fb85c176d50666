"""Structural invariants computed from a faithful permutation representation.

Everything here works on an explicit element table: a (|G| x degree) numpy
matrix whose rows are the image arrays of all group elements, indexed by a
bytes dictionary.  Multiplication is a row gather, conjugation is vectorized
over whole blocks of rows, so conjugacy classes of groups with tens of
thousands of elements stay in the seconds range.  The table is cached on the
PermGroup object; everything downstream (classes, center, derived series,
Sylow subgroups, quotients, normal subgroup lattice) reuses it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

import numpy as np

from .perm import Permutation, PermGroup

ELEMENT_LIMIT = 1_500_000_000  # cap on table cells (rows x degree)
_CONJ_BLOCK = 4096


class TooLarge(RuntimeError):
    pass


def _dtype_for(degree: int):
    return np.uint16 if degree <= 0xFFFF else np.uint32


class ElementTable:
    """All elements of a finite permutation group, one image row each.

    Row 0 is the identity.  ``index`` maps row bytes to the row number, which
    makes multiplication by index (`mul`) and membership O(degree).
    """

    def __init__(self, E: np.ndarray, gen_rows: list[int],
                 parents: list[tuple[int, int]] | None = None):
        self.E = E
        self.n, self.degree = E.shape
        self.index = {E[i].tobytes(): i for i in range(self.n)}
        self.gen_rows = gen_rows
        self.parents = parents  # row -> (previous row, generator position)
        self._inv: np.ndarray | None = None
        self._words: list | None = None

    @property
    def inv(self) -> np.ndarray:
        if self._inv is None:
            E = self.E
            I = np.empty_like(E)
            rows = np.arange(self.n)[:, None]
            I[rows, E.astype(np.intp)] = np.arange(self.degree, dtype=E.dtype)
            self._inv = np.array([self.index[I[i].tobytes()]
                                  for i in range(self.n)], dtype=np.int64)
        return self._inv

    def mul(self, i: int, j: int) -> int:
        """Index of element i * j (left-to-right composition)."""
        row = self.E[j][self.E[i].astype(np.intp)]
        return self.index[row.tobytes()]

    def row_of(self, p: Permutation) -> int:
        arr = np.array(p.images, dtype=self.E.dtype)
        return self.index[arr.tobytes()]

    def perm(self, i: int) -> Permutation:
        return Permutation(int(x) for x in self.E[i])

    def word_of(self, i: int):
        """Word in the group's generators evaluating to element i (BFS word)."""
        from .words import Word
        if self._words is None:
            if self.parents is None:
                raise ValueError("table built without parent tracking")
            words = [Word.identity()]
            for k in range(1, self.n):
                prev, gpos = self.parents[k]
                words.append(words[prev] * Word.gen(gpos))
            self._words = words
        return self._words[i]

    def order_of(self, i: int) -> int:
        row = self.E[i]
        seen = np.zeros(self.degree, dtype=bool)
        o = 1
        for s in range(self.degree):
            if seen[s]:
                continue
            length = 0
            j = s
            while not seen[j]:
                seen[j] = True
                j = int(row[j])
                length += 1
            o = lcm(o, length)
        return o


def element_table(G: PermGroup) -> ElementTable:
    cached = getattr(G, "_element_table", None)
    if cached is not None:
        return cached
    order = G.order()
    if order * G.degree > ELEMENT_LIMIT:
        raise TooLarge(f"element table would need {order}x{G.degree} cells")
    dtype = _dtype_for(G.degree)
    gens = [np.array(g.images, dtype=dtype) for g in G.generators]
    E = np.empty((order, G.degree), dtype=dtype)
    E[0] = np.arange(G.degree, dtype=dtype)
    index = {E[0].tobytes(): 0}
    parents: list[tuple[int, int]] = [(-1, -1)]
    count = 1
    qi = 0
    while qi < count:
        x = E[qi].astype(np.intp)
        qi += 1
        for gpos, g in enumerate(gens):
            row = g[x]
            key = row.tobytes()
            if key not in index:
                index[key] = count
                E[count] = row
                parents.append((qi - 1, gpos))
                count += 1
    if count != order:
        raise AssertionError("element enumeration disagrees with group order")
    t = ElementTable(E, [index[g.tobytes()] for g in gens], parents)
    G._element_table = t
    return t


class _UnionFind:
    def __init__(self, n: int):
        self.p = list(range(n))

    def find(self, i: int) -> int:
        path = []
        while self.p[i] != i:
            path.append(i)
            i = self.p[i]
        for q in path:
            self.p[q] = i
        return i

    def union(self, a: int, b: int):
        a, b = self.find(a), self.find(b)
        if a != b:
            if a > b:
                a, b = b, a
            self.p[b] = a


@dataclass
class ConjugacyClasses:
    table: ElementTable
    class_of: np.ndarray      # element row -> class id
    reps: list[int]           # class id -> lowest element row in the class
    sizes: list[int]
    orders: list[int]         # element order of each class

    @property
    def count(self) -> int:
        return len(self.reps)

    def members(self, cid: int) -> np.ndarray:
        return np.nonzero(self.class_of == cid)[0]


def conjugacy_classes(G: PermGroup) -> ConjugacyClasses:
    cached = getattr(G, "_conj_classes", None)
    if cached is not None:
        return cached
    t = element_table(G)
    E = t.E
    uf = _UnionFind(t.n)
    for g in G.generators:
        g_arr = np.array(g.images, dtype=np.intp)
        g_inv = np.empty_like(g_arr)
        g_inv[g_arr] = np.arange(t.degree, dtype=np.intp)
        for start in range(0, t.n, _CONJ_BLOCK):
            block = E[start:start + _CONJ_BLOCK]
            conj = g_arr[block.astype(np.intp)[:, g_inv]].astype(E.dtype)
            for k in range(conj.shape[0]):
                j = t.index[conj[k].tobytes()]
                uf.union(start + k, j)
    roots = {}
    class_of = np.empty(t.n, dtype=np.int64)
    for i in range(t.n):
        r = uf.find(i)
        if r not in roots:
            roots[r] = len(roots)
        class_of[i] = roots[r]
    reps = [-1] * len(roots)
    sizes = [0] * len(roots)
    for i in range(t.n):
        cid = int(class_of[i])
        sizes[cid] += 1
        if reps[cid] < 0:
            reps[cid] = i
    orders = [t.order_of(r) for r in reps]
    cc = ConjugacyClasses(t, class_of, reps, sizes, orders)
    G._conj_classes = cc
    return cc


@dataclass(frozen=True)
class ClassOrderStructure:
    """Per element order: how many elements and how many classes have it.

    The identity is excluded, so element counts sum to |G| - 1 and class
    counts to (number of classes) - 1.
    """

    entries: tuple[tuple[int, int, int], ...]  # (order, n_elements, n_classes)

    def serialize(self) -> str:
        return " ".join(f"{o}:{n}/{c}" for o, n, c in self.entries)

    @staticmethod
    def parse(text: str) -> "ClassOrderStructure":
        entries = []
        for part in text.split():
            o, rest = part.split(":")
            n, c = rest.split("/")
            entries.append((int(o), int(n), int(c)))
        return ClassOrderStructure(tuple(sorted(entries)))

    def __str__(self) -> str:
        return self.serialize()


def class_order_structure(G: PermGroup) -> ClassOrderStructure:
    cc = conjugacy_classes(G)
    agg: dict[int, list[int]] = {}
    for cid in range(cc.count):
        o = cc.orders[cid]
        if o == 1:
            continue
        bucket = agg.setdefault(o, [0, 0])
        bucket[0] += cc.sizes[cid]
        bucket[1] += 1
    return ClassOrderStructure(tuple(sorted((o, n, c) for o, (n, c) in agg.items())))


# -- subgroups in element-index space ---------------------------------------

def subgroup_closure(t: ElementTable, seed: list[int]) -> set[int]:
    members = {0}
    queue = [0]
    gens = [s for s in set(seed) if s != 0]
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        for s in gens:
            y = t.mul(x, s)
            if y not in members:
                members.add(y)
                queue.append(y)
    return members


def normal_closure_indices(G: PermGroup, seed: list[int]) -> set[int]:
    t = element_table(G)
    gens = list({s for s in seed if s != 0})
    members = subgroup_closure(t, gens)
    changed = True
    while changed:
        changed = False
        for h in list(gens):
            for g in t.gen_rows:
                c = t.mul(t.mul(int(t.inv[g]), h), g)
                if c not in members:
                    gens.append(c)
                    members = subgroup_closure(t, gens)
                    changed = True
    return members


def commutator_indices(t: ElementTable, a: int, b: int) -> int:
    return t.mul(t.mul(int(t.inv[a]), int(t.inv[b])), t.mul(a, b))


def derived_subgroup_indices(G: PermGroup) -> set[int]:
    t = element_table(G)
    seeds = [commutator_indices(t, a, b)
             for a in t.gen_rows for b in t.gen_rows if a != b]
    return normal_closure_indices(G, seeds)


def subgroup_from_indices(G: PermGroup, members: set[int]) -> PermGroup:
    t = element_table(G)
    gens: list[int] = []
    have = {0}
    for i in sorted(members):
        if i in have:
            continue
        gens.append(i)
        have = subgroup_closure(t, gens)
        if len(have) == len(members):
            break
    H = PermGroup([t.perm(i) for i in gens], degree=G.degree)
    H.known_order = len(members)
    return H


def derived_subgroup(G: PermGroup) -> PermGroup:
    return subgroup_from_indices(G, derived_subgroup_indices(G))


def derived_series_orders(G: PermGroup) -> list[int]:
    """Orders down the derived series, starting at |G|, until it stabilizes."""
    orders = [G.order()]
    t = element_table(G)
    current = set(range(t.n))
    gen_rows = t.gen_rows
    while True:
        seeds = [commutator_indices(t, a, b)
                 for a in gen_rows for b in gen_rows if a != b]
        members = normal_closure_indices_in(t, seeds, gen_rows)
        if len(members) == orders[-1]:
            break
        orders.append(len(members))
        if len(members) == 1:
            break
        current = members
        gen_rows = _generating_rows(t, members)
    return orders


def _generating_rows(t: ElementTable, members: set[int]) -> list[int]:
    gens: list[int] = []
    have = {0}
    for i in sorted(members):
        if i in have:
            continue
        gens.append(i)
        have = subgroup_closure(t, gens)
        if len(have) == len(members):
            break
    return gens


def normal_closure_indices_in(t: ElementTable, seed: list[int],
                              conjugators: list[int]) -> set[int]:
    """Normal closure of seed under conjugation by the given rows."""
    gens = list({s for s in seed if s != 0})
    members = subgroup_closure(t, gens)
    changed = True
    while changed:
        changed = False
        for h in list(gens):
            for g in conjugators:
                c = t.mul(t.mul(int(t.inv[g]), h), g)
                if c not in members:
                    gens.append(c)
                    members = subgroup_closure(t, gens)
                    changed = True
    return members


def center(G: PermGroup) -> PermGroup:
    cc = conjugacy_classes(G)
    central = [cc.reps[cid] for cid in range(cc.count) if cc.sizes[cid] == 1]
    members = set(central)
    H = subgroup_from_indices(G, members)
    return H


def center_order(G: PermGroup) -> int:
    cc = conjugacy_classes(G)
    return sum(1 for cid in range(cc.count) if cc.sizes[cid] == 1)


def sylow_subgroup(G: PermGroup, p: int) -> PermGroup:
    """A Sylow p-subgroup, grown by adjoining compatible p-elements.

    Any p-subgroup S < P (Sylow) admits a p-element outside S that together
    with S still generates a p-group, so greedy extension terminates at full
    Sylow order.
    """
    order = G.order()
    pk = 1
    while order % (pk * p) == 0:
        pk *= p
    if pk == 1:
        return PermGroup([], degree=G.degree)
    t = element_table(G)
    cc = conjugacy_classes(G)
    p_elements = [i for i in range(t.n)
                  if _is_p_power(cc.orders[int(cc.class_of[i])], p)]
    gens: list[int] = []
    members = {0}
    for x in p_elements:
        if len(members) == pk:
            break
        if x in members:
            continue
        trial = subgroup_closure(t, gens + [x])
        if _is_p_power(len(trial), p):
            gens.append(x)
            members = trial
    if len(members) != pk:
        raise AssertionError("Sylow extension failed")
    H = PermGroup([t.perm(i) for i in gens], degree=G.degree)
    H.known_order = pk
    return H


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def is_normal_subgroup(G: PermGroup, H: PermGroup) -> bool:
    for h in H.generators:
        for g in G.generators:
            if h.conj(g) not in H:
                return False
    return True


def normal_subgroups(G: PermGroup, limit: int = 5000) -> list[set[int]]:
    """All normal subgroups, as element-index sets.

    Every normal subgroup is a join of normal closures of single classes, so
    the lattice is generated by those closures under pairwise join.
    """
    if G.order() > limit:
        raise TooLarge("normal subgroup lattice restricted to small groups")
    t = element_table(G)
    cc = conjugacy_classes(G)
    atoms = []
    seen: set[frozenset[int]] = set()
    for cid in range(cc.count):
        members = frozenset(normal_closure_indices(G, [cc.reps[cid]]))
        if members not in seen:
            seen.add(members)
            atoms.append(members)
    found = {frozenset({0})} | set(atoms)
    frontier = list(found)
    while frontier:
        new: list[frozenset[int]] = []
        for n1 in frontier:
            for a in atoms:
                if a <= n1:
                    continue
                join = frozenset(subgroup_closure(
                    t, _generating_rows(t, set(n1)) + _generating_rows(t, set(a))))
                if join not in found:
                    found.add(join)
                    new.append(join)
        frontier = new
    return sorted((set(m) for m in found), key=lambda m: (len(m), sorted(m)))


def quotient(G: PermGroup, normal_members: set[int]) -> PermGroup:
    """Action of G on the right cosets of a normal subgroup, as a PermGroup."""
    t = element_table(G)
    ngens = _generating_rows(t, normal_members)
    uf = _UnionFind(t.n)
    for x in range(t.n):
        for nrow in ngens:
            uf.union(x, t.mul(nrow, x))
    labels: dict[int, int] = {}
    # canonical labels in BFS-from-identity order for determinism
    coset_of = [uf.find(x) for x in range(t.n)]
    order = [coset_of[0]]
    labels[coset_of[0]] = 0
    qi = 0
    rep_row = {coset_of[0]: 0}
    while qi < len(order):
        root = order[qi]
        qi += 1
        x = rep_row[root]
        for g in t.gen_rows:
            y = t.mul(x, g)
            r = coset_of[y]
            if r not in labels:
                labels[r] = len(order)
                order.append(r)
                rep_row[r] = y
    m = len(order)
    perms = []
    for g in t.gen_rows:
        images = [0] * m
        for root in order:
            images[labels[root]] = labels[coset_of[t.mul(rep_row[root], g)]]
        perms.append(Permutation(images))
    Q = PermGroup(perms, degree=m)
    Q.known_order = m
    return Q


def exponent(G: PermGroup) -> int:
    cc = conjugacy_classes(G)
    e = 1
    for o in cc.orders:
        e = lcm(e, o)
    return e


def abelian_invariants(G: PermGroup) -> tuple[int, ...]:
    """Invariant factors d1 | d2 | ... of G/[G,G]."""
    der = derived_subgroup_indices(G)
    q_order = G.order() // len(der)
    if q_order == 1:
        return ()
    Q = quotient(G, der)
    qt = element_table(Q)
    orders = [qt.order_of(i) for i in range(qt.n)]
    # per prime: recover the exponent partition from counts of p^k-torsion
    primes = set()
    n = q_order
    d = 2
    while d * d <= n:
        while n % d == 0:
            primes.add(d)
            n //= d
        d += 1
    if n > 1:
        primes.add(n)
    per_prime: dict[int, list[int]] = {}
    for p in sorted(primes):
        # counts[k] = #elements whose p-part has order dividing p^k;
        # counts[k]/counts[0] = p^(sum_i min(k, a_i)) for p-type (a_1..a_r)
        counts = []
        k = 0
        while True:
            c = sum(1 for o in orders if _pdiv(o, p) <= p ** k)
            counts.append(c)
            if c == len(orders):
                break
            k += 1
        nonp = counts[0]
        exps = [_valuation(counts[k] // nonp, p) for k in range(1, len(counts))]
        # the k-th increment of exps counts the a_i that are >= k
        ge = [exps[0]] + [exps[k] - exps[k - 1] for k in range(1, len(exps))]
        invs = []
        for k in range(len(ge), 0, -1):
            while len(invs) < ge[k - 1]:
                invs.append(k)
        per_prime[p] = sorted(invs)
    nfac = max(len(v) for v in per_prime.values())
    factors = []
    for i in range(nfac):
        d = 1
        for p, invs in per_prime.items():
            padded = [0] * (nfac - len(invs)) + invs
            d *= p ** padded[i]
        factors.append(d)
    return tuple(factors)


def _pdiv(o: int, p: int) -> int:
    """p-part of o."""
    r = 1
    while o % p == 0:
        o //= p
        r *= p
    return r


def _pfree(o: int, p: int) -> int:
    while o % p == 0:
        o //= p
    return o


def _valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def power_map_signature(G: PermGroup) -> tuple:
    """Class-level invariant: for each class, its size/order and the
    size/order of its p-th power classes for primes dividing the exponent."""
    cc = conjugacy_classes(G)
    t = cc.table
    e = exponent(G)
    primes = sorted({p for p in range(2, e + 1) if e % p == 0 and _isprime(p)})
    sig = []
    for cid in range(cc.count):
        rep = cc.reps[cid]
        row = []
        for p in primes:
            q = rep
            for _ in range(p - 1):
                q = t.mul(q, rep)
            qc = int(cc.class_of[q])
            row.append((p, cc.orders[qc], cc.sizes[qc]))
        sig.append((cc.orders[cid], cc.sizes[cid], tuple(row)))
    return tuple(sorted(sig))


def _isprime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def class_signatures(G: PermGroup) -> list:
    """Per conjugacy class, a hashable isomorphism-invariant signature.

    Starts from (element order, class size) and refines twice with the
    signatures of prime-power classes, so two classes can only correspond
    under an isomorphism if their signatures are equal.  Signatures are
    comparable across groups.
    """
    cached = getattr(G, "_class_sigs", None)
    if cached is not None:
        return cached
    cc = conjugacy_classes(G)
    t = cc.table
    e = exponent(G)
    primes = [p for p in range(2, e + 1) if e % p == 0 and _isprime(p)]
    power_class: dict[int, list[int]] = {}
    for p in primes:
        col = []
        for cid in range(cc.count):
            rep = cc.reps[cid]
            q = rep
            for _ in range(p - 1):
                q = t.mul(q, rep)
            col.append(int(cc.class_of[q]))
        power_class[p] = col
    sig: list = [(cc.orders[cid], cc.sizes[cid]) for cid in range(cc.count)]
    for _ in range(2):
        sig = [(sig[cid], tuple(sig[power_class[p][cid]] for p in primes))
               for cid in range(cc.count)]
    G._class_sigs = sig
    return sig


def fingerprint(G: PermGroup) -> tuple:
    """Isomorphism-invariant refinement chain, cheap first."""
    return (
        G.order(),
        class_order_structure(G).entries,
        center_order(G),
        tuple(derived_series_orders(G)),
        abelian_invariants(G),
        power_map_signature(G),
    )
