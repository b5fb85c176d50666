"""Automorphism groups by generator-image backtracking.

The search maps each presentation generator to a candidate image constrained
to conjugacy classes with an equal refinement signature, prunes with relator
checks, and certifies surjectivity through incremental subgroup closure.
Relator checks chase only the parent group's BSGS base points (an element of
G fixing every base point is the identity), so a check costs a handful of
array lookups instead of a full permutation product.

|Aut| is the exact count of valid surjective image tuples.  A generating set
is collected in a second, early-terminated pass seeded with the inner
automorphisms.  Towers iterate G -> Aut(G) with Aut realized faithfully on
an automorphism-invariant union of conjugacy classes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .coset import CapacityExceeded, enumerate_cosets
from .parser import Presentation
from .perm import PermGroup, Permutation
from .structure import (ElementTable, center_order, class_signatures,
                        conjugacy_classes, element_table, normal_subgroups,
                        subgroup_closure, subgroup_from_indices, TooLarge)
from .words import Word

FULL_BOUND = 100_000        # |G| bound for full enumeration
COUNT_BOUND = 10_000_000    # automorphism count bound
NODE_BUDGET = 400_000_000


class AutBoundExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Automorphism:
    """Generator-image tuple; rows refer to the parent's element table."""

    parent: PermGroup
    images: tuple[int, ...]

    def table(self) -> ElementTable:
        return element_table(self.parent)

    def apply(self, row: int) -> int:
        """Image of an element (by table row), via its generator word."""
        t = self.table()
        w = t.word_of(row)
        acc = 0
        for g, e in w.syllables:
            step = self.images[g] if e > 0 else int(t.inv[self.images[g]])
            for _ in range(abs(e)):
                acc = t.mul(acc, step)
        return acc

    def image_words(self) -> list[Word]:
        t = self.table()
        return [t.word_of(i) for i in self.images]

    def order(self) -> int:
        t = self.table()
        gen_rows = tuple(t.gen_rows)
        current = self.images  # phi^k applied to the generators
        k = 1
        while current != gen_rows:
            current = tuple(self.apply(r) for r in current)
            k += 1
            if k > 10 * t.n:
                raise AssertionError("runaway automorphism order")
        return k

    def is_valid(self) -> bool:
        pres = self.parent.presentation
        t = self.table()
        for r in pres.relators:
            acc = 0
            for g, e in r.syllables:
                step = self.images[g] if e > 0 else int(t.inv[self.images[g]])
                for _ in range(abs(e)):
                    acc = t.mul(acc, step)
            if acc != 0:
                return False
        return len(subgroup_closure(t, list(self.images))) == t.n


class _ImageSearch:
    """Backtracking over generator images in a target group."""

    def __init__(self, pres: Presentation, gen_sigs: list, target: PermGroup,
                 require_surjective: bool = True):
        self.pres = pres
        self.target = target
        self.t = element_table(target)
        cc = conjugacy_classes(target)
        sigs = class_signatures(target)
        by_sig: dict = {}
        for i in range(self.t.n):
            by_sig.setdefault(sigs[int(cc.class_of[i])], []).append(i)
        self.pools = [sorted(by_sig.get(s, [])) for s in gen_sigs]
        self.require_surjective = require_surjective
        self.base_points = target.base
        self._plan()

    def _plan(self):
        """Choose a generator order that front-loads relator constraints."""
        n = len(self.pres.generators)
        supports = [frozenset(g for g, _ in r.syllables) for r in self.pres.relators]
        chosen: list[int] = []
        remaining = set(range(n))
        while remaining:
            def score(g):
                done = set(chosen) | {g}
                newly = sum(1 for s in supports if s <= done and not s <= set(chosen))
                return (-newly, len(self.pools[g]), g)
            nxt = min(remaining, key=score)
            chosen.append(nxt)
            remaining.discard(nxt)
        self.order = chosen          # position k in DFS -> generator index
        # schedule: relators checked at the first depth where fully supported
        self.schedule: list[list[list[tuple[int, int]]]] = [[] for _ in range(n)]
        for r, sup in zip(self.pres.relators, supports):
            if not sup:
                continue
            depth = max(chosen.index(g) for g in sup)
            letters = [(g, 1 if e > 0 else -1)
                       for g, e in r.syllables for _ in range(abs(e))]
            self.schedule[depth].append(letters)

    def _check(self, letters: list[tuple[int, int]], images: list[int]) -> bool:
        E = self.t.E
        inv = self.t.inv
        for beta in self.base_points:
            p = beta
            for g, s in letters:
                row = images[g] if s > 0 else int(inv[images[g]])
                p = int(E[row][p])
            if p != beta:
                return False
        return True

    def run(self, on_found, node_budget: int = NODE_BUDGET):
        """DFS; on_found(images tuple) returns False to stop the search."""
        n = len(self.order)
        if any(not p for p in self.pools):
            return 0
        t = self.t
        full = t.n
        images = [0] * len(self.pres.generators)
        spans: list = [None] * (n + 1)
        spans[0] = ({0}, [])
        self._nodes = 0

        def span_at(k: int):
            if spans[k] is not None:
                return spans[k]
            members, gens = span_at(k - 1)
            x = images[self.order[k - 1]]
            if x in members:
                spans[k] = (members, gens)
                return spans[k]
            new_members = set(members)
            new_gens = gens + [x]
            frontier = []
            for m in members:
                y = t.mul(m, x)
                if y not in new_members:
                    new_members.add(y)
                    frontier.append(y)
            qi = 0
            while qi < len(frontier):
                y = frontier[qi]
                qi += 1
                for g in new_gens:
                    z = t.mul(y, g)
                    if z not in new_members:
                        new_members.add(z)
                        frontier.append(z)
            spans[k] = (new_members, new_gens)
            return spans[k]

        stopped = False

        def dfs(k: int):
            nonlocal stopped
            if stopped:
                return
            if k == n:
                if self.require_surjective:
                    members, _ = span_at(n)
                    if len(members) != full:
                        return
                if on_found(tuple(images)) is False:
                    stopped = True
                return
            gpos = self.order[k]
            for cand in self.pools[gpos]:
                self._nodes += 1
                if self._nodes > node_budget:
                    raise AutBoundExceeded("search node budget exhausted")
                images[gpos] = cand
                ok = True
                for letters in self.schedule[k]:
                    if not self._check(letters, images):
                        ok = False
                        break
                if not ok:
                    continue
                for j in range(k + 1, n + 1):
                    spans[j] = None
                dfs(k + 1)
                if stopped:
                    return

        dfs(0)
        return self._nodes


@dataclass
class AutGroup:
    parent: PermGroup
    order: int
    gens: list[Automorphism]
    point_set: list[int] = field(default_factory=list)
    perm_gens: list[Permutation] = field(default_factory=list)

    def perm_group(self) -> PermGroup:
        A = PermGroup(self.perm_gens, degree=max(1, len(self.point_set)))
        A.known_order = self.order
        return A


def _require_presentation(G: PermGroup) -> Presentation:
    pres = G.presentation
    if pres is None or len(pres.generators) != len(G.generators):
        raise ValueError("group must carry a presentation on its generators")
    return pres


def aut_invariant_point_set(G: PermGroup) -> list[int]:
    """Union of the signature-buckets of the generator classes.

    Closed under every automorphism (signatures are Aut-invariant) and
    faithful (it contains a generating set)."""
    cc = conjugacy_classes(G)
    sigs = class_signatures(G)
    t = element_table(G)
    wanted = {sigs[int(cc.class_of[row])] for row in t.gen_rows}
    return [i for i in range(t.n) if sigs[int(cc.class_of[i])] in wanted]


def inner_automorphisms(G: PermGroup) -> AutGroup:
    t = element_table(G)
    order = G.order() // center_order(G)
    gens = []
    for g in t.gen_rows:
        ginv = int(t.inv[g])
        images = tuple(t.mul(t.mul(ginv, row), g) for row in t.gen_rows)
        gens.append(Automorphism(G, images))
    P = aut_invariant_point_set(G)
    perm_gens = [_conjugation_perm(t, P, g) for g in t.gen_rows]
    return AutGroup(G, order, gens, P, perm_gens)


def _conjugation_perm(t: ElementTable, P: list[int], g: int) -> Permutation:
    pos = {p: i for i, p in enumerate(P)}
    ginv = int(t.inv[g])
    return Permutation(pos[t.mul(t.mul(ginv, p), g)] for p in P)


def _tuple_to_perm(G: PermGroup, P: list[int], pos: dict[int, int],
                   images: tuple[int, ...]) -> Permutation:
    aut = Automorphism(G, images)
    return Permutation(pos[aut.apply(p)] for p in P)


def automorphism_group(G: PermGroup, full_bound: int = FULL_BOUND,
                       count_bound: int = COUNT_BOUND,
                       want_generators: bool = True) -> AutGroup:
    if G.order() > full_bound and want_generators:
        raise AutBoundExceeded(f"|G| = {G.order()} exceeds full bound {full_bound}")
    if G.order() == 1:
        return AutGroup(G, 1, [], [], [])
    pres = _require_presentation(G)
    t = element_table(G)
    cc = conjugacy_classes(G)
    sigs = class_signatures(G)
    gen_sigs = [sigs[int(cc.class_of[row])] for row in t.gen_rows]
    search = _ImageSearch(pres, gen_sigs, G)

    count = 0

    def count_one(images):
        nonlocal count
        count += 1
        if count > count_bound:
            raise AutBoundExceeded(f"more than {count_bound} automorphisms")
        return True

    search.run(count_one)
    if not want_generators:
        return AutGroup(G, count, [], [], [])

    inner = inner_automorphisms(G)
    P, perm_gens = inner.point_set, list(inner.perm_gens)
    pos = {p: i for i, p in enumerate(P)}
    gens = list(inner.gens)
    closure = _PermClosure(len(P))
    for p in perm_gens:
        closure.add(p)
    if closure.size < count:
        def collect(images):
            perm = _tuple_to_perm(G, P, pos, images)
            if closure.add(perm):
                gens.append(Automorphism(G, tuple(images)))
                perm_gens.append(perm)
            return closure.size < count
        search.run(collect)
    if closure.size != count:
        raise AssertionError("generator collection missed automorphisms")
    return AutGroup(G, count, gens, P, perm_gens)


class _PermClosure:
    """Explicit closure of a permutation subgroup, grown one generator at a
    time; element rows keyed by bytes for O(1) membership."""

    def __init__(self, degree: int):
        self.degree = degree
        dtype = np.uint16 if degree <= 0xFFFF else np.uint32
        self.dtype = dtype
        ident = np.arange(degree, dtype=dtype)
        self.rows = {ident.tobytes(): ident}
        self.gens: list[np.ndarray] = []

    @property
    def size(self) -> int:
        return len(self.rows)

    def add(self, p: Permutation) -> bool:
        arr = np.array(p.images, dtype=self.dtype)
        if arr.tobytes() in self.rows:
            return False
        self.gens.append(arr)
        frontier = []
        for row in list(self.rows.values()):
            new = arr[row.astype(np.intp)]
            key = new.tobytes()
            if key not in self.rows:
                self.rows[key] = new
                frontier.append(new)
        if arr.tobytes() not in self.rows:
            self.rows[arr.tobytes()] = arr
            frontier.append(arr)
        qi = 0
        while qi < len(frontier):
            row = frontier[qi]
            qi += 1
            for g in self.gens:
                new = g[row.astype(np.intp)]
                key = new.tobytes()
                if key not in self.rows:
                    self.rows[key] = new
                    frontier.append(new)
        return True


def outer_order(G: PermGroup, aut: AutGroup | None = None) -> int:
    if aut is None:
        aut = automorphism_group(G, want_generators=False)
    inn = G.order() // center_order(G)
    return aut.order // inn


def is_complete(G: PermGroup, aut: AutGroup | None = None) -> bool:
    if center_order(G) != 1:
        return False
    if aut is None:
        aut = automorphism_group(G, want_generators=False)
    return aut.order == G.order()


# -- presentations from permutation groups -----------------------------------

def small_generating_set(H: PermGroup, tries: int = 60) -> list[Permutation]:
    """A 2- or 3-element generating set when one is found quickly, else a
    greedy one; deterministic."""
    import random
    t = element_table(H)
    n = t.n
    if n == 1:
        return []
    rng = random.Random(0xD1CE)
    cc = conjugacy_classes(H)
    by_order = sorted(range(cc.count), key=lambda c: -cc.orders[c])
    first = cc.reps[by_order[0]]
    cands = list(range(1, n))
    for k in (2, 3):
        for trial in range(tries):
            picks = [first] + [cands[rng.randrange(len(cands))] for _ in range(k - 1)]
            if len(subgroup_closure(t, picks)) == n:
                return [t.perm(i) for i in picks]
    gens: list[int] = []
    have = {0}
    for i in range(1, n):
        if i in have:
            continue
        gens.append(i)
        have = subgroup_closure(t, gens)
        if len(have) == n:
            break
    return [t.perm(i) for i in gens]


def derive_presentation(H: PermGroup, name: str = "",
                        max_cosets_factor: int = 16) -> Presentation:
    """A certified defining presentation on H's own generators.

    Candidate relators are the Schreier relators of the Cayley BFS tree
    (always defining as a whole); short ones are added in batches until coset
    enumeration over the trivial subgroup closes at exactly |H|.
    """
    t = element_table(H)
    n = t.n
    ngens = len(t.gen_rows)
    if ngens == 0:
        return Presentation(generators=[], relators=[], name=name)
    gnames = [chr(ord("a") + i) if ngens <= 26 else f"g{i}" for i in range(ngens)]
    words = [t.word_of(i) for i in range(n)]
    seen: set = set()
    cands: list[Word] = []
    for x in range(n):
        wx = words[x]
        for gpos in range(ngens):
            y = t.mul(x, t.gen_rows[gpos])
            w = wx * Word.gen(gpos) * words[y].inv()
            if w.syllables and w.syllables not in seen:
                seen.add(w.syllables)
                seen.add(w.inv().syllables)
                cands.append(w)
    cands.sort(key=lambda w: (len(w), w.syllables))
    relators: list[Word] = []
    for gpos in range(ngens):
        relators.append(Word.gen(gpos) ** t.order_of(t.gen_rows[gpos]))
    cap = max(60_000, max_cosets_factor * n)
    idx = 0
    batch = max(8, 2 * ngens)
    while True:
        pres = Presentation(generators=list(gnames),
                            relators=list(relators), name=name)
        try:
            table = enumerate_cosets(pres, [], cap)
            if table.index == n:
                return pres
        except CapacityExceeded:
            pass
        if idx >= len(cands):
            cap *= 4
            if cap > 64 * max(60_000, max_cosets_factor * n):
                raise AssertionError("failed to certify derived presentation")
            continue
        take = cands[idx:idx + batch]
        idx += batch
        present = {r.syllables for r in relators}
        relators.extend(w for w in take if w.syllables not in present)
        batch = min(2 * batch, 128)


# -- odd-order automorphisms and the splitting pipeline ----------------------

def odd_order_automorphisms(G: PermGroup) -> list[tuple[int, Automorphism]]:
    """For each odd prime p dividing |Aut(G)|, one automorphism of order p.

    G must be a 2-group.  Elementary abelian groups are handled by GF(2)
    companion matrices (Aut = GL(n,2) is far too big to enumerate); other
    2-groups go through the full automorphism search.
    """
    from .structure import exponent
    o = G.order()
    if o & (o - 1):
        raise ValueError("expected a 2-group")
    if o == 1:
        return []
    n2 = o.bit_length() - 1
    if exponent(G) <= 2:
        return _elementary_abelian_odd(G, n2)
    aut = automorphism_group(G)
    A = aut.perm_group()
    at = element_table(A)
    acc = conjugacy_classes(A)
    out = []
    for p in _odd_primes(aut.order):
        row = None
        for cid in range(acc.count):
            if acc.orders[cid] % p == 0:
                row = acc.reps[cid]
                o_el = acc.orders[cid]
                break
        if row is None:
            raise AssertionError("Cauchy violated")
        power = o_el // p
        r = row
        for _ in range(power - 1):
            r = at.mul(r, row)
        perm = at.perm(r)
        pos = {q: i for i, q in enumerate(aut.point_set)}
        t = element_table(G)
        images = tuple(aut.point_set[perm(pos[g])] for g in t.gen_rows)
        out.append((p, Automorphism(G, images)))
    return out


def _elementary_abelian_odd(G: PermGroup, n: int) -> list[tuple[int, Automorphism]]:
    from .constructors import companion_matrix_of_order
    t = element_table(G)
    gl_order = 1
    for i in range(n):
        gl_order *= (2 ** n - 2 ** i)
    out = []
    for p in _odd_primes(gl_order):
        d = 1
        while pow(2, d, p) != 1:
            d += 1
        if d > n:
            continue
        m = companion_matrix_of_order(p)
        images = []
        for i, grow in enumerate(t.gen_rows):
            if i >= d:
                images.append(grow)
                continue
            acc = 0
            for j in range(d):
                if m.m[j][i]:
                    acc = t.mul(acc, t.gen_rows[j])
            images.append(acc)
        out.append((p, Automorphism(G, tuple(images))))
    return out


def _odd_primes(n: int) -> list[int]:
    out = []
    d = 3
    while n % 2 == 0:
        n //= 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 2
    if n > 1:
        out.append(n)
    return out


def on_small_generators(G: PermGroup) -> PermGroup:
    """Rebuild G on a small generating set with a derived presentation.

    The automorphism search branches once per presentation generator, so
    shrinking a many-generator presentation (e.g. a linear-action extension
    with one generator per basis vector) makes otherwise intractable
    searches feasible.
    """
    sg = small_generating_set(G)
    H = PermGroup(sg, degree=G.degree)
    H.known_order = G.order()
    H.presentation = derive_presentation(H)
    return H


def extension_by_automorphism(G: PermGroup, p: int, phi: Automorphism,
                              symbol: str = "t"):
    """Split extension of G by C_p acting through phi (the §-pipeline step)."""
    from .constructors import ActionSpec, split_extension
    from .parser import word_to_text
    pres = _require_presentation(G)
    action = [f"{g}^{symbol}*({word_to_text(w, pres.generators)})^{{-1}}"
              for g, w in zip(pres.generators, phi.image_words())]
    spec = ActionSpec(base=pres, extension_gens=[(symbol, p)],
                      action_relators=action,
                      name=f"{pres.name}@C{p}".strip("@"))
    return split_extension(spec, check_split=False)


# -- towers ------------------------------------------------------------------

@dataclass
class TowerStep:
    order: int
    center_order: int
    class_count: int | None


@dataclass
class TowerReport:
    steps: list[TowerStep]
    status: str   # complete | capacity | max_steps

    def serialize(self) -> str:
        lines = ["step\torder\tcenter_order\tclasses\tstatus"]
        for i, s in enumerate(self.steps):
            last = self.status if i == len(self.steps) - 1 else ""
            ncl = "" if s.class_count is None else str(s.class_count)
            lines.append(f"{i}\t{s.order}\t{s.center_order}\t{ncl}\t{last}")
        return "\n".join(lines) + "\n"


def automorphism_tower(G: PermGroup, max_steps: int = 8,
                       max_order: int = 100_000) -> TowerReport:
    steps: list[TowerStep] = []
    current = G
    for _ in range(max_steps):
        order = current.order()
        if order > max_order:
            steps.append(TowerStep(order, -1, None))
            return TowerReport(steps, "capacity")
        zo = center_order(current)
        ncl = conjugacy_classes(current).count
        steps.append(TowerStep(order, zo, ncl))
        try:
            aut = automorphism_group(current)
        except AutBoundExceeded:
            return TowerReport(steps, "capacity")
        if zo == 1 and aut.order == order:
            return TowerReport(steps, "complete")
        A = aut.perm_group()
        A.known_order = aut.order
        current = on_small_generators(A)
    return TowerReport(steps, "max_steps")


def multiplicity_heuristic_check(G: PermGroup, aut_g: PermGroup,
                                 aut2_g: PermGroup, limit: int = 5000) -> dict:
    """Compare the count of normal subgroups isomorphic to G in consecutive
    tower groups against the order ratio."""
    from .iso import is_isomorphic
    report: dict = {"order_ratio": aut2_g.order() / aut_g.order()}
    try:
        counts = []
        for H in (aut_g, aut2_g):
            c = 0
            for members in normal_subgroups(H, limit):
                if len(members) != G.order():
                    continue
                sub = subgroup_from_indices(H, members)
                if is_isomorphic(G, sub).result == "isomorphic":
                    c += 1
            counts.append(c)
        report["count_in_aut"], report["count_in_aut2"] = counts
        if counts[0]:
            ratio = counts[1] / counts[0]
            report["multiplicity_ratio"] = ratio
            report["matches"] = abs(ratio - report["order_ratio"]) < 1e-9
        else:
            report["multiplicity_ratio"] = None
            report["matches"] = None
        report["status"] = "ok"
    except TooLarge:
        report["status"] = "capacity"
    return report
