"""Permutations and permutation groups with a deterministic BSGS.

Permutations act on {0..n-1} and are stored as image tuples; cycle notation
I/O is 1-based to match conventional printed form.  PermGroup builds a base
and strong generating set via Schreier-Sims.  Internally the chain works on
numpy image arrays with Schreier vectors (transversal elements are traced on
demand rather than stored), which keeps both time and memory tolerable at
degrees in the tens of thousands.  When the group order is already known
(e.g. from a coset enumeration) a randomized build is used whose stopping
condition certifies correctness; otherwise a deterministic verified build
runs.  Both are reproducible.
"""

from __future__ import annotations

import random
import re
from math import lcm

import numpy as np


class Permutation:
    __slots__ = ("images",)

    def __init__(self, images):
        object.__setattr__(self, "images", tuple(images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("not a permutation of 0..n-1")

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("Permutation is immutable")

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(range(degree))

    @staticmethod
    def from_cycles(text: str, degree: int) -> "Permutation":
        """Parse 1-based cycle notation like ``(1,2,3)(5,7)``."""
        images = list(range(degree))
        for cyc in re.findall(r"\(([^()]*)\)", text):
            pts = [int(s) - 1 for s in cyc.replace(" ", "").split(",") if s]
            for p in pts:
                if not 0 <= p < degree:
                    raise ValueError(f"point {p + 1} out of range 1..{degree}")
            for i, p in enumerate(pts):
                images[p] = pts[(i + 1) % len(pts)]
        return Permutation(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Left-to-right composition: (p*q)(x) = q(p(x))."""
        oi = other.images
        return Permutation(oi[i] for i in self.images)

    def inv(self) -> "Permutation":
        out = [0] * len(self.images)
        for i, img in enumerate(self.images):
            out[img] = i
        return Permutation(out)

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inv() ** (-n)
        result = Permutation.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self, by: "Permutation") -> "Permutation":
        return by.inv() * self * by

    def is_identity(self) -> bool:
        return all(i == img for i, img in enumerate(self.images))

    def order(self) -> int:
        o = 1
        for c in self.cycles(all_points=True):
            o = lcm(o, len(c))
        return o

    def cycles(self, all_points: bool = False) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for i in range(self.degree):
            if seen[i]:
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            if len(cyc) > 1 or all_points:
                out.append(tuple(cyc))
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other) -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(str(p + 1) for p in c) + ")" for c in cycs)


# -- array helpers (image arrays compose left-to-right: (p*q)(x)=q(p(x))) ----

def _compose(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    return q[p]


def _inverse(p: np.ndarray) -> np.ndarray:
    inv = np.empty_like(p)
    inv[p] = np.arange(len(p), dtype=p.dtype)
    return inv


def _is_id(p: np.ndarray) -> bool:
    return bool((p == np.arange(len(p), dtype=p.dtype)).all())


class PermGroup:
    """Permutation group with lazily built base and strong generating set."""

    def __init__(self, generators, degree: int | None = None):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree required for the trivial group")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise ValueError("mixed degrees")
        self.degree = degree
        self.generators = [g for g in gens if not g.is_identity()]
        self._base: list[int] | None = None
        self._strong: list[list[np.ndarray]] | None = None
        # Schreier vectors: per level, point -> (previous point, strong gen idx)
        self._sv: list[dict[int, tuple[int, int]]] | None = None
        self._order: int | None = None
        self.presentation = None
        self.known_order: int | None = None

    # -- BSGS -------------------------------------------------------------
    def _arange(self) -> np.ndarray:
        return np.arange(self.degree, dtype=np.int32)

    def _schreier_sims(self):
        if self._base is not None:
            return
        self._base = []
        self._strong = []
        self._sv = []
        if self.generators:
            gen_arrs = [np.array(g.images, dtype=np.int32) for g in self.generators]
            if self.known_order is not None:
                self._build_randomized(gen_arrs, self.known_order)
            else:
                self._build_verified(gen_arrs)
        order = 1
        for sv in self._sv:
            order *= len(sv)
        self._order = order
        if self.known_order is not None and order != self.known_order:
            raise AssertionError("BSGS order disagrees with known order")

    def _rebuild_orbit(self, level: int) -> list[int]:
        """Recompute the Schreier vector; returns orbit in BFS order."""
        beta = self._base[level]
        sv = {beta: (-1, -1)}
        queue = [beta]
        qi = 0
        gens = self._strong[level]
        while qi < len(queue):
            pt = queue[qi]
            qi += 1
            for gi, g in enumerate(gens):
                img = int(g[pt])
                if img not in sv:
                    sv[img] = (pt, gi)
                    queue.append(img)
        self._sv[level] = sv
        return queue

    def _transversal(self, level: int, point: int) -> np.ndarray:
        """Element t with base[level]^t = point, traced from the Schreier vector."""
        labels = []
        pt = point
        sv = self._sv[level]
        while True:
            prev, gi = sv[pt]
            if prev < 0:
                break
            labels.append(gi)
            pt = prev
        t = self._arange()
        gens = self._strong[level]
        for gi in reversed(labels):
            t = _compose(t, gens[gi])
        return t

    def _strip_arr(self, g: np.ndarray, from_level: int) -> tuple[np.ndarray, int]:
        h = g
        for lvl in range(from_level, len(self._base)):
            img = int(h[self._base[lvl]])
            if img not in self._sv[lvl]:
                return h, lvl
            h = _compose(h, _inverse(self._transversal(lvl, img)))
        return h, len(self._base)

    def _append_base_point(self, moved_by: np.ndarray):
        moved = np.nonzero(moved_by != self._arange())[0]
        if len(moved) == 0:
            raise AssertionError("identity has no moved point")
        self._base.append(int(moved[0]))
        self._strong.append([])
        self._sv.append({})

    def _build_verified(self, gen_arrs: list[np.ndarray]):
        """Deterministic Schreier-Sims with full Schreier-generator checks."""
        base, strong = self._base, self._strong
        self._append_base_point(gen_arrs[0])
        strong[0].extend(gen_arrs)

        def complete_level(level: int):
            while True:
                orbit_order = self._rebuild_orbit(level)
                restart = False
                for pt in orbit_order:
                    t = None
                    for gi, s in enumerate(strong[level]):
                        if t is None:
                            t = self._transversal(level, pt)
                        u = self._transversal(level, int(s[pt]))
                        sch = _compose(_compose(t, s), _inverse(u))
                        if _is_id(sch):
                            continue
                        h, drop = self._strip_arr(sch, level + 1)
                        if _is_id(h):
                            continue
                        if drop == len(base):
                            self._append_base_point(h)
                        for k in range(level + 1, drop + 1):
                            strong[k].append(h)
                        for k in range(drop, level, -1):
                            complete_level(k)
                        restart = True
                        break
                    if restart:
                        break
                if not restart:
                    return

        complete_level(0)

    def _build_randomized(self, gen_arrs: list[np.ndarray], target_order: int):
        """Sift pseudo-random products until the chain order hits the target.

        The stopping condition certifies correctness, so the random choices
        only affect speed; the RNG is seeded for reproducibility.
        """
        base, strong = self._base, self._strong

        def insert(g: np.ndarray) -> bool:
            h, drop = self._strip_arr(g, 0)
            if _is_id(h):
                return False
            if drop == len(base):
                self._append_base_point(h)
            for k in range(drop + 1):
                strong[k].append(h)
                self._rebuild_orbit(k)
            return True

        for g in gen_arrs:
            insert(g)
        rng = random.Random(0x5EED)
        pool = list(gen_arrs)
        guard = 0
        while True:
            order = 1
            for sv in self._sv:
                order *= len(sv)
            if order == target_order:
                return
            if order > target_order or guard > 20000:
                raise AssertionError("randomized BSGS failed to converge")
            guard += 1
            w = pool[rng.randrange(len(pool))]
            for _ in range(rng.randrange(1, 6)):
                w = _compose(w, pool[rng.randrange(len(pool))])
            if len(pool) < 12:
                pool.append(w)
            else:
                pool[rng.randrange(len(pool))] = w
            insert(w)

    @property
    def base(self) -> list[int]:
        self._schreier_sims()
        return self._base

    def basic_orbits(self) -> list[list[int]]:
        self._schreier_sims()
        return [sorted(sv) for sv in self._sv]

    def order(self) -> int:
        if self._order is None:
            self._schreier_sims()
        return self._order

    def strip(self, g: Permutation) -> Permutation:
        """Sift g through the stabilizer chain; identity iff g is a member."""
        self._schreier_sims()
        h, _ = self._strip_arr(np.array(g.images, dtype=np.int32), 0)
        return Permutation(int(x) for x in h)

    def __contains__(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        self._schreier_sims()
        h, _ = self._strip_arr(np.array(g.images, dtype=np.int32), 0)
        return _is_id(h)

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    # -- element access ----------------------------------------------------
    def elements(self):
        """All elements, as a list; only sensible for small orders."""
        self._schreier_sims()
        arrs = [self._arange()]
        for lvl in reversed(range(len(self._base))):
            trs = [self._transversal(lvl, p) for p in sorted(self._sv[lvl])]
            arrs = [_compose(t, e) for t in trs for e in arrs]
        return [Permutation(int(x) for x in a) for a in arrs]

    def random_element(self, rng) -> Permutation:
        """Uniformly random element via random transversal coset reps."""
        self._schreier_sims()
        g = self._arange()
        for lvl in range(len(self._base)):
            pts = sorted(self._sv[lvl])
            g = _compose(self._transversal(lvl, rng.choice(pts)), g)
        return Permutation(int(x) for x in g)

    def orbit(self, point: int) -> list[int]:
        seen = {point}
        queue = [point]
        qi = 0
        while qi < len(queue):
            pt = queue[qi]
            qi += 1
            for g in self.generators:
                img = g(pt)
                if img not in seen:
                    seen.add(img)
                    queue.append(img)
        return sorted(seen)

    def orbits(self) -> list[list[int]]:
        seen = set()
        out = []
        for pt in range(self.degree):
            if pt not in seen:
                orb = self.orbit(pt)
                seen.update(orb)
                out.append(orb)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def subgroup(self, gens) -> "PermGroup":
        return PermGroup(list(gens), degree=self.degree)

    def normal_closure(self, gens) -> "PermGroup":
        """Smallest normal subgroup containing gens."""
        closure = [g for g in gens if not g.is_identity()]
        h = PermGroup(closure, degree=self.degree)
        changed = True
        while changed:
            changed = False
            for n in list(closure):
                for g in self.generators:
                    c = n.conj(g)
                    if c not in h:
                        closure.append(c)
                        h = PermGroup(closure, degree=self.degree)
                        changed = True
        return h

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, ngens={len(self.generators)})"
