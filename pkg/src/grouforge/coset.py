"""Todd-Coxeter coset enumeration.

Turns a finite presentation into the permutation action on the cosets of a
subgroup.  The default strategy is HLT with lookahead; a Felsch-style
strategy is available behind a flag.  Coset numbering is canonicalized by a
breadth-first renumbering after closure so output is reproducible.
"""

from __future__ import annotations

from collections import deque

from .parser import Presentation
from .words import Word

DEFAULT_MAX_COSETS = 2_000_000
REGULAR_CAP = 1_000_000


class CapacityExceeded(RuntimeError):
    def __init__(self, max_cosets: int):
        super().__init__(f"coset enumeration did not close within {max_cosets} cosets")
        self.max_cosets = max_cosets


class NotFaithful(RuntimeError):
    pass


def _letters_to_cols(w: Word, ngens: int) -> list[int]:
    """Encode a word as table column indices: 2g for g, 2g+1 for g^-1."""
    cols = []
    for letter in w.letters():
        if letter >= 0:
            cols.append(2 * letter)
        else:
            cols.append(2 * ~letter + 1)
    for c in cols:
        if c // 2 >= ngens:
            raise ValueError("word uses generator outside presentation")
    return cols


class CosetTable:
    """Closed, collapsed coset table; row 0 is the subgroup coset."""

    def __init__(self, rows: list[list[int]], ngens: int, capacity: int):
        self.rows = rows
        self.ngens = ngens
        self.capacity = capacity

    @property
    def index(self) -> int:
        return len(self.rows)

    def permutations(self) -> list[list[int]]:
        """One permutation (image list) of {0..index-1} per generator."""
        return [[row[2 * g] for row in self.rows] for g in range(self.ngens)]


class _Enumerator:
    def __init__(self, ngens: int, max_cosets: int):
        self.ngens = ngens
        self.ncols = 2 * ngens
        self.max_cosets = max_cosets
        self.table: list[list[int | None]] = [[None] * self.ncols]
        self.p: list[int] = [0]
        self.n_live = 1

    # -- union-find over cosets ------------------------------------------
    def rep(self, k: int) -> int:
        path = []
        while self.p[k] != k:
            path.append(k)
            k = self.p[k]
        for q in path:
            self.p[q] = k
        return k

    def is_live(self, k: int) -> bool:
        return self.p[k] == k

    def new_coset(self, hard: bool) -> int | None:
        if len(self.table) >= self.max_cosets:
            if hard:
                raise CapacityExceeded(self.max_cosets)
            return None
        self.table.append([None] * self.ncols)
        self.p.append(len(self.table) - 1)
        self.n_live += 1
        return len(self.table) - 1

    # -- coincidence handling --------------------------------------------
    def coincidence(self, a: int, b: int):
        q: deque[int] = deque()
        self._merge(a, b, q)
        while q:
            e = q.popleft()
            for x in range(self.ncols):
                d = self.table[e][x]
                if d is None:
                    continue
                # drop the back-reference from d to the dead coset e
                if self.table[d][x ^ 1] == e:
                    self.table[d][x ^ 1] = None
                mu, nu = self.rep(e), self.rep(d)
                if self.table[mu][x] is not None:
                    self._merge(nu, self.rep(self.table[mu][x]), q)
                else:
                    self.table[mu][x] = nu
                if self.table[nu][x ^ 1] is not None:
                    self._merge(mu, self.rep(self.table[nu][x ^ 1]), q)
                else:
                    self.table[nu][x ^ 1] = mu

    def _merge(self, a: int, b: int, q: deque):
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        lo, hi = (a, b) if a < b else (b, a)
        self.p[hi] = lo
        self.n_live -= 1
        q.append(hi)

    # -- scanning ---------------------------------------------------------
    def scan(self, alpha: int, cols: list[int], fill: bool, hard: bool = True) -> bool:
        """Scan relator from alpha, optionally filling gaps with new cosets.

        Returns False only when fill=True and a needed coset could not be
        allocated (soft capacity); otherwise True.
        """
        f, i = alpha, 0
        b, j = alpha, len(cols) - 1
        while True:
            while i <= j and self.table[f][cols[i]] is not None:
                f = self.table[f][cols[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return True
            while j >= i and self.table[b][cols[j] ^ 1] is not None:
                b = self.table[b][cols[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return True
            if j == i:
                x = cols[i]
                self.table[f][x] = b
                self.table[b][x ^ 1] = f
                return True
            if not fill:
                return True
            n = self.new_coset(hard)
            if n is None:
                return False
            x = cols[i]
            self.table[f][x] = n
            self.table[n][x ^ 1] = f

    # -- table maintenance -------------------------------------------------
    def compress(self):
        live = [k for k in range(len(self.table)) if self.is_live(k)]
        remap = {old: new for new, old in enumerate(live)}
        new_table = []
        for old in live:
            row = self.table[old]
            new_row: list[int | None] = []
            for x in range(self.ncols):
                v = row[x]
                new_row.append(None if v is None else remap[self.rep(v)])
            new_table.append(new_row)
        self.table = new_table
        self.p = list(range(len(new_table)))
        self.n_live = len(new_table)

    def lookahead(self, relator_cols: list[list[int]]):
        alpha = 0
        while alpha < len(self.table):
            if self.is_live(alpha):
                for cols in relator_cols:
                    if not self.is_live(alpha):
                        break
                    self.scan(alpha, cols, fill=False)
            alpha += 1
        self.compress()


def enumerate_cosets(pres: Presentation, subgroup_generators: list[Word] = (),
                     max_cosets: int = DEFAULT_MAX_COSETS,
                     strategy: str = "hlt") -> CosetTable:
    """Run Todd-Coxeter; returns the closed table with index = [G : H]."""
    if pres.directives:
        from .parser import apply_substitutions
        pres = apply_substitutions(pres)
    ngens = len(pres.generators)
    if ngens == 0:
        return CosetTable([[]], 0, max_cosets)
    relator_cols = [_letters_to_cols(r, ngens) for r in pres.relators
                    if not r.is_identity()]
    sub_cols = [_letters_to_cols(w, ngens) for w in subgroup_generators]
    if strategy == "hlt":
        enum = _hlt(ngens, relator_cols, sub_cols, max_cosets)
    elif strategy == "felsch":
        enum = _felsch(ngens, relator_cols, sub_cols, max_cosets)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    enum.compress()
    rows = _bfs_standardize(enum.table, enum.ncols)
    return CosetTable(rows, ngens, max_cosets)


def _hlt(ngens, relator_cols, sub_cols, max_cosets) -> _Enumerator:
    enum = _Enumerator(ngens, max_cosets)
    for cols in sub_cols:
        enum.scan(0, cols, fill=True)
    alpha = 0
    while alpha < len(enum.table):
        if not enum.is_live(alpha):
            alpha += 1
            continue
        ok = True
        for cols in relator_cols:
            if not enum.is_live(alpha):
                break
            if not enum.scan(alpha, cols, fill=True, hard=False):
                ok = False
                break
        if not ok:
            # table full: lookahead pass to recover dead cosets, then retry
            before = len(enum.table)
            enum.lookahead(relator_cols)
            if len(enum.table) >= before or len(enum.table) >= max_cosets:
                raise CapacityExceeded(max_cosets)
            alpha = 0
            continue
        if enum.is_live(alpha):
            for x in range(enum.ncols):
                if enum.table[alpha][x] is None:
                    n = enum.new_coset(hard=True)
                    enum.table[alpha][x] = n
                    enum.table[n][x ^ 1] = alpha
        alpha += 1
    return enum


def _felsch(ngens, relator_cols, sub_cols, max_cosets) -> _Enumerator:
    """Define-one, deduce-exhaustively strategy (Felsch-style)."""
    enum = _Enumerator(ngens, max_cosets)
    for cols in sub_cols:
        enum.scan(0, cols, fill=True)

    def deduce():
        changed = True
        while changed:
            changed = False
            alpha = 0
            while alpha < len(enum.table):
                if enum.is_live(alpha):
                    before_live = enum.n_live
                    filled = _filled_count(enum)
                    for cols in relator_cols:
                        if not enum.is_live(alpha):
                            break
                        enum.scan(alpha, cols, fill=False)
                    if enum.n_live != before_live or _filled_count(enum) != filled:
                        changed = True
                alpha += 1

    deduce()
    while True:
        slot = None
        for alpha in range(len(enum.table)):
            if not enum.is_live(alpha):
                continue
            for x in range(enum.ncols):
                if enum.table[alpha][x] is None:
                    slot = (alpha, x)
                    break
            if slot:
                break
        if slot is None:
            break
        alpha, x = slot
        n = enum.new_coset(hard=True)
        enum.table[alpha][x] = n
        enum.table[n][x ^ 1] = alpha
        deduce()
    return enum


def _filled_count(enum: _Enumerator) -> int:
    return sum(1 for k in range(len(enum.table)) if enum.is_live(k)
               for v in enum.table[k] if v is not None)


def _bfs_standardize(table, ncols) -> list[list[int]]:
    """Breadth-first renumbering from coset 0, columns in order."""
    n = len(table)
    order: list[int] = [0]
    remap = {0: 0}
    qi = 0
    while qi < len(order):
        c = order[qi]
        qi += 1
        for x in range(ncols):
            d = table[c][x]
            if d is None:
                raise RuntimeError("table not closed")
            if d not in remap:
                remap[d] = len(order)
                order.append(d)
    if len(order) != n:
        raise RuntimeError("coset graph not connected")
    rows = [[0] * ncols for _ in range(n)]
    for old, new in remap.items():
        for x in range(ncols):
            rows[new][x] = remap[table[old][x]]
    return rows


def to_perm_group(t: CosetTable):
    """Permutation group of the coset action (degree = index)."""
    from .perm import PermGroup, Permutation
    if t.ngens == 0:
        return PermGroup([], degree=1)
    return PermGroup([Permutation(img) for img in t.permutations()])


def realize(pres: Presentation, max_cosets: int = DEFAULT_MAX_COSETS,
            degree_threshold: int = 6000):
    """Faithful permutation representation of the presented group.

    Enumerates over the trivial subgroup (regular representation).  When the
    regular degree is large, retries over the cyclic subgroup generated by
    the first generator and keeps the reduced-degree action if it can be
    certified faithful; otherwise falls back to the regular representation.
    """
    if pres.directives:
        from .parser import apply_substitutions
        pres = apply_substitutions(pres)
    regular_order = None
    regular_table = None
    try:
        regular_table = enumerate_cosets(pres, [], min(max_cosets, REGULAR_CAP))
        regular_order = regular_table.index
        if regular_table.index <= degree_threshold:
            g = to_perm_group(regular_table)
            g.presentation = pres
            g.known_order = regular_order
            return g
    except CapacityExceeded:
        pass

    if regular_order is not None:
        # pick the cyclic point stabilizer giving the smallest faithful degree
        gen_orders = [(_perm_order(img), i)
                      for i, img in enumerate(regular_table.permutations())]
        for _, i in sorted(gen_orders, reverse=True):
            try:
                t = enumerate_cosets(pres, [Word.gen(i)], max_cosets)
            except CapacityExceeded:
                continue
            g = to_perm_group(t)
            g.presentation = pres
            g.known_order = regular_order
            try:
                if g.order() == regular_order:
                    return g
            except AssertionError:
                pass
            g.known_order = None
        g2 = to_perm_group(regular_table)
        g2.presentation = pres
        g2.known_order = regular_order
        return g2

    t = enumerate_cosets(pres, [Word.gen(0)], max_cosets)
    g = to_perm_group(t)
    g.presentation = pres
    # no regular certificate: certify via a pure power relator of gen 0
    exponent = None
    for r in pres.relators:
        syl = r.syllables
        if len(syl) == 1 and syl[0][0] == 0:
            e = abs(syl[0][1])
            exponent = e if exponent is None else min(exponent, e)
    if exponent is not None:
        o_img = _perm_order(t.permutations()[0])
        if o_img == exponent:
            g.known_order = t.index * exponent
            return g
    raise NotFaithful(
        "reduced-degree action could not be certified and the regular "
        "representation exceeded capacity")


def _perm_order(images: list[int]) -> int:
    from math import lcm
    n = len(images)
    seen = [False] * n
    order = 1
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = images[j]
            length += 1
        order = lcm(order, length)
    return order
