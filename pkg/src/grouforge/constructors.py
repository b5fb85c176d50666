"""Building presentations: direct products, split and nonsplit extensions,
GF(2) matrix actions, and a stock of standard small-group presentations.

Constructions are verified post hoc by coset enumeration: a split extension
whose action relators fail to define automorphisms collapses to a smaller
group, which is reported as OrderCollapse rather than silently accepted.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .coset import realize
from .parser import Presentation, ReplaceDirective, parse_presentation
from .perm import PermGroup
from .words import Word


class OrderCollapse(RuntimeError):
    def __init__(self, expected: int, got: int):
        super().__init__(f"extension collapsed: expected order {expected}, got {got}")
        self.expected = expected
        self.got = got


class ActuallySplit(UserWarning):
    """A nominally nonsplit extension turned out to have a complement."""


@dataclass
class ActionSpec:
    """A quotient acting on a base group, given by action relators.

    extension_gens lists (symbol, power) pairs contributing ``symbol^power``
    relators; extra_relators hold relators internal to the extension part
    (e.g. the dihedral relation of a D4 quotient).  quotient_order defaults
    to the product of the powers, which is right for all corpus actions.
    """

    base: Presentation
    extension_gens: list[tuple[str, int]]
    action_relators: list[str]
    extra_relators: list[str] = field(default_factory=list)
    quotient_order: int | None = None
    name: str = ""

    def expected_quotient_order(self) -> int:
        if self.quotient_order is not None:
            return self.quotient_order
        q = 1
        for _, e in self.extension_gens:
            q *= e
        return q


@dataclass
class CentralSubstitution:
    """Replace a quotient power relator, mapping the power onto a central
    element of the base (the nonsplit recipe)."""

    target: str                 # relator text to remove, e.g. "c^8"
    replacements: list[str]     # relator texts to add, e.g. ["c^16", "c^8*z"]
    central_word: str           # word in base generators that must be central


@dataclass
class ExtensionResult:
    presentation: Presentation
    group: PermGroup
    split_verified: bool | None    # None = complement search skipped (bounds)


def _merge_names(a: list[str], b: list[str]) -> tuple[list[str], dict[str, str]]:
    """Second alphabet renamed on collision; deterministic suffixing."""
    names = list(a)
    rename: dict[str, str] = {}
    for g in b:
        cand = g
        k = 1
        while cand in names:
            cand = f"{g}{k}"
            k += 1
        rename[g] = cand
        names.append(cand)
    return names, rename


def _shift_word(w: Word, offset: int) -> Word:
    return Word((g + offset, e) for g, e in w.syllables)


def direct_product(a: Presentation, b: Presentation, name: str = "") -> Presentation:
    gens, _ = _merge_names(a.generators, b.generators)
    na = len(a.generators)
    relators = list(a.relators)
    relators += [_shift_word(r, na) for r in b.relators]
    for i in range(na):
        for j in range(na, len(gens)):
            x, y = Word.gen(i), Word.gen(j)
            relators.append(x.inv() * y.inv() * x * y)
    return Presentation(generators=gens, relators=relators,
                        name=name or f"{a.name}x{b.name}".strip("x"))


def combined_presentation(spec: ActionSpec) -> Presentation:
    gens, _ = _merge_names(spec.base.generators,
                           [s for s, _ in spec.extension_gens])
    pres = Presentation(generators=gens, relators=list(spec.base.relators),
                        name=spec.name or spec.base.name)
    for (sym, power), actual in zip(spec.extension_gens,
                                    gens[len(spec.base.generators):]):
        if power:
            pres.relators.append(pres.word(actual) ** power)
    for text in spec.extra_relators + spec.action_relators:
        pres.relators.append(pres.word(text))
    return pres


def split_extension(spec: ActionSpec, check_split: bool = True,
                    complement_bound: int = 5000) -> ExtensionResult:
    pres = combined_presentation(spec)
    g = realize(pres)
    base_order = realize(spec.base).order()
    expected = base_order * spec.expected_quotient_order()
    if g.order() < expected:
        raise OrderCollapse(expected, g.order())
    if g.order() > expected:
        raise AssertionError("extension larger than base x quotient")
    verified: bool | None = None
    if check_split and g.order() <= complement_bound:
        verified = _has_complement(g, pres, len(spec.base.generators))
    return ExtensionResult(pres, g, verified)


def nonsplit_extension(spec: ActionSpec, sub: CentralSubstitution,
                       complement_bound: int = 5000) -> ExtensionResult:
    import warnings
    pres = combined_presentation(spec)
    target = pres.word(sub.target)
    if target not in pres.relators:
        raise ValueError(f"target relator {sub.target!r} not present")
    base_group = realize(spec.base)
    central = spec.base.word(sub.central_word)
    _check_central(base_group, spec.base, central)
    pres.relators = [r for r in pres.relators if r != target]
    pres.relators += [pres.word(t) for t in sub.replacements]
    pres.directives = list(pres.directives) + [
        ReplaceDirective(target, tuple(pres.word(t) for t in sub.replacements))]
    g = realize(pres)
    expected = base_group.order() * spec.expected_quotient_order()
    if g.order() != expected:
        raise OrderCollapse(expected, g.order())
    verified: bool | None = None
    if g.order() <= complement_bound:
        verified = _has_complement(g, pres, len(spec.base.generators))
        if verified:
            warnings.warn("substituted extension still splits", ActuallySplit)
    return ExtensionResult(pres, g, None if verified is None else not verified)


from .parser import apply_substitutions  # noqa: E402  (re-export)


def _check_central(base_group: PermGroup, base: Presentation, central: Word):
    z = _evaluate(base_group, central)
    for g in base_group.generators:
        if not (z * g == g * z):
            raise ValueError("substitution word is not central in the base")


def _evaluate(group: PermGroup, w: Word):
    out = group.identity()
    for g, e in w.syllables:
        out = out * (group.generators[g] ** e)
    return out


def _has_complement(g: PermGroup, pres: Presentation, n_base_gens: int) -> bool:
    """Exhaustive search for a subgroup of quotient order meeting the base
    only in the identity (a complement)."""
    from .structure import element_table, normal_closure_indices, subgroup_closure

    t = element_table(g)
    base = normal_closure_indices(g, t.gen_rows[:n_base_gens])
    q = g.order() // len(base)
    if q == 1:
        return True

    def extend(gens: list[int], members: set[int]) -> bool:
        if len(members) == q:
            return True
        # generating sequences taken with increasing indices, so each
        # candidate subgroup is visited once
        start = (gens[-1] + 1) if gens else 1
        for x in range(start, t.n):
            if x in members or x in base:
                continue
            trial = subgroup_closure(t, gens + [x])
            if (len(trial) <= q and q % len(trial) == 0
                    and len(trial & base) == 1):
                if extend(gens + [x], trial):
                    return True
        return False

    return extend([], {0})


# -- GF(2) matrix actions ----------------------------------------------------

class GF2Matrix:
    def __init__(self, rows):
        self.m = np.array(rows, dtype=np.uint8) % 2
        if self.m.ndim != 2 or self.m.shape[0] != self.m.shape[1]:
            raise ValueError("matrix must be square")

    @property
    def n(self) -> int:
        return self.m.shape[0]

    def __mul__(self, other: "GF2Matrix") -> "GF2Matrix":
        return GF2Matrix((self.m @ other.m) % 2)

    def is_identity(self) -> bool:
        return bool((self.m == np.eye(self.n, dtype=np.uint8)).all())

    def order(self) -> int:
        """Multiplicative order; raises if singular (no power is identity)."""
        acc = GF2Matrix(self.m)
        for k in range(1, 2 ** (self.n * self.n) + 1):
            if acc.is_identity():
                return k
            acc = acc * self
            if k > 2 ** self.n:
                break
        raise ValueError("matrix is singular or order exceeds bound")

    def __eq__(self, other) -> bool:
        return isinstance(other, GF2Matrix) and (self.m == other.m).all()


def companion_matrix_of_order(p: int) -> GF2Matrix:
    """Smallest companion matrix over GF(2) with multiplicative order p (odd).

    Brute-forces a monic divisor of x^p - 1: the companion matrix of any
    irreducible factor of degree d = ord_p(2) works.
    """
    if p % 2 == 0:
        raise ValueError("order must be odd")
    d = 1
    while pow(2, d, p) != 1:
        d += 1
        if d > 64:
            raise ValueError("no reasonable degree found")
    for bits in range(2 ** d):
        coeffs = [(bits >> i) & 1 for i in range(d)]  # c0..c_{d-1}
        if coeffs[0] == 0:
            continue
        m = np.zeros((d, d), dtype=np.uint8)
        for i in range(1, d):
            m[i][i - 1] = 1
        for i in range(d):
            m[i][d - 1] = coeffs[i]
        cand = GF2Matrix(m)
        try:
            if cand.order() == p:
                return cand
        except ValueError:
            continue
    raise ValueError(f"no companion matrix of order {p} in dimension {d}")


def matrix_action_extension(p: int, mats: list[GF2Matrix], n: int,
                            name: str = "") -> Presentation:
    """C_p (or C_p x C_p) acting linearly on an elementary abelian 2-group.

    Generators a1..an are commuting involutions; each matrix contributes one
    order-p generator x with x^-1 * a_i * x = prod_j a_j^(M[j][i]).
    """
    for m in mats:
        if m.n != n:
            raise ValueError("matrix dimension mismatch")
        if m.order() != p:
            raise ValueError(f"matrix order {m.order()} != {p}")
    if len(mats) > 1:
        for m1 in mats:
            for m2 in mats:
                if not (m1 * m2 == m2 * m1):
                    raise ValueError("matrices must commute")
    gens = [f"a{i + 1}" for i in range(n)] + [f"x{k + 1}" for k in range(len(mats))]
    relators: list[Word] = []
    for i in range(n):
        relators.append(Word.gen(i) ** 2)
    for i in range(n):
        for j in range(i + 1, n):
            x, y = Word.gen(i), Word.gen(j)
            relators.append(x.inv() * y.inv() * x * y)
    for k, m in enumerate(mats):
        xg = Word.gen(n + k)
        relators.append(xg ** p)
        for i in range(n):
            image = Word.identity()
            for j in range(n):
                if m.m[j][i]:
                    image = image * Word.gen(j)
            relators.append(Word.gen(i).conj(xg) * image.inv())
    return Presentation(generators=gens, relators=relators,
                        name=name or f"1^{n}@C{p}")


# -- stock small-group presentations ----------------------------------------

def _pres(name: str, text: str) -> Presentation:
    return parse_presentation(text, name=name)


def cyclic(n: int) -> Presentation:
    return Presentation(generators=["a"], relators=[Word.gen(0) ** n],
                        name=f"C{n}")


def elementary_abelian(k: int) -> Presentation:
    gens = [f"a{i + 1}" for i in range(k)]
    relators = [Word.gen(i) ** 2 for i in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            x, y = Word.gen(i), Word.gen(j)
            relators.append(x.inv() * y.inv() * x * y)
    return Presentation(generators=gens, relators=relators, name=f"1^{k}")


def dihedral(order: int) -> Presentation:
    n = order // 2
    return _pres(f"D{order}", f"gens r s\nr^{n} = s^2 = (r*s)^2 = 1;")


def quaternion(order: int) -> Presentation:
    n = order // 4
    return _pres(f"Q{order}",
                 f"gens a b\na^{2 * n} = b^2*a^{{{-n}}} = a^b*a = 1;")


def semidihedral(order: int) -> Presentation:
    half = order // 2
    t = half // 2 - 1
    return _pres(f"SD{order}",
                 f"gens a b\na^{half} = b^2 = a^b*a^{{{-t}}} = 1;")


def modular2(order: int) -> Presentation:
    half = order // 2
    t = half // 2 + 1
    return _pres(f"M{order}",
                 f"gens a b\na^{half} = b^2 = a^b*a^{{{-t}}} = 1;")


def stock_two_groups(max_order: int = 32) -> list[Presentation]:
    """Standard presentations of 2-groups; complete through order 16, a broad
    spread at order 32."""
    out: list[Presentation] = []

    def add(p: Presentation):
        out.append(p)

    # order 2, 4
    add(cyclic(2))
    add(cyclic(4))
    add(elementary_abelian(2))
    # order 8
    add(cyclic(8))
    add(direct_product(cyclic(4), cyclic(2), name="C4xC2"))
    add(elementary_abelian(3))
    add(dihedral(8))
    add(quaternion(8))
    if max_order >= 16:
        add(cyclic(16))
        add(direct_product(cyclic(4), cyclic(4), name="C4xC4"))
        add(direct_product(cyclic(8), cyclic(2), name="C8xC2"))
        add(direct_product(cyclic(4), elementary_abelian(2), name="C4x1^2"))
        add(elementary_abelian(4))
        add(dihedral(16))
        add(semidihedral(16))
        add(quaternion(16))
        add(modular2(16))
        add(direct_product(dihedral(8), cyclic(2), name="D4xC2"))
        add(direct_product(quaternion(8), cyclic(2), name="Q2xC2"))
        add(_pres("C4sC4", "gens a b\na^4 = b^4 = a^b*a = 1;"))
        add(_pres("1^2sC4", "gens a b c\na^2 = b^2 = (a,b) = c^4 = a^c*b = b^c*a = 1;"))
        add(_pres("D4YC4", "gens a b c\na^4 = b^2 = a^b*a = c^2*a^2 = (a,c) = (b,c) = 1;"))
    if max_order >= 32:
        add(cyclic(32))
        add(direct_product(cyclic(16), cyclic(2), name="C16xC2"))
        add(direct_product(cyclic(8), cyclic(4), name="C8xC4"))
        add(direct_product(cyclic(8), elementary_abelian(2), name="C8x1^2"))
        add(direct_product(direct_product(cyclic(4), cyclic(4)), cyclic(2),
                           name="C4xC4xC2"))
        add(direct_product(cyclic(4), elementary_abelian(3), name="C4x1^3"))
        add(elementary_abelian(5))
        add(dihedral(32))
        add(semidihedral(32))
        add(quaternion(32))
        add(modular2(32))
        add(direct_product(dihedral(8), cyclic(4), name="D4xC4"))
        add(direct_product(quaternion(8), cyclic(4), name="Q2xC4"))
        add(direct_product(dihedral(8), elementary_abelian(2), name="D4x1^2"))
        add(direct_product(quaternion(8), elementary_abelian(2), name="Q2x1^2"))
        add(direct_product(dihedral(16), cyclic(2), name="D8xC2"))
        add(direct_product(quaternion(16), cyclic(2), name="Q4xC2"))
        add(_pres("C4wC2", "gens a b c\na^4 = b^4 = (a,b) = c^2 = a^c*b^{-1} = 1;"))
        add(_pres("Dih(C4xC4)",
                  "gens a b c\na^4 = b^4 = (a,b) = c^2 = a^c*a = b^c*b = 1;"))
    return out
