#!/usr/bin/env python3
"""Generate the derived corpus entries.

Part 1 (t4a): the 28 split extensions of A_4 by an order-16 group acting
through a surjection onto C_2.  Enumerate every order-16 stock group with
every generator-sign assignment, keep the ones that realize to order 192,
dedup up to isomorphism, and match each class to its expected class-order
row to assign a stable id.

Part 2 (t2a): entries of the order-192-with-normal-Sylow-2 catalog that are
direct products of shipped factors or small explicit constructions.
"""
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))
from a4_rows import ROWS

from grouforge import parse_presentation, realize
from grouforge.autos import automorphism_group
from grouforge.constructors import (GF2Matrix, cyclic, dihedral, direct_product,
                                    elementary_abelian,
                                    matrix_action_extension, modular2,
                                    quaternion, semidihedral,
                                    stock_two_groups)
from grouforge.iso import dedup
from grouforge.parser import serialize, word_to_text
from grouforge.structure import class_order_structure, conjugacy_classes

ROOT = pathlib.Path(__file__).resolve().parent.parent
CORPUS = ROOT / "src" / "grouforge" / "data" / "corpus"
BASE = CORPUS / "base"


def base_text(name):
    return (BASE / f"{name}.grp").read_text().split("\n", 1)[1]


def base_pres(name):
    return parse_presentation((BASE / f"{name}.grp").read_text())


# ---------------------------------------------------------------------------
# Part 1: A4 @ [order 16] family

A4_RELS = "x^2 = y^3 = (y*x)^3 = 1;"


def a4_by_16_candidates():
    """All (presentation, description) realizing to order 192."""
    out = []
    for T in stock_two_groups(16):
        if realize(T).order() != 16:
            continue
        tg = T.generators
        rels = " = ".join(word_to_text(r, tg) for r in T.relators)
        for mask in range(1, 1 << len(tg)):
            action = []
            for k, g in enumerate(tg):
                if mask >> k & 1:
                    action.append(f"(x,{g}) = y^{g}*y = 1;")
                else:
                    action.append(f"(x,{g}) = (y,{g}) = 1;")
            text = (f"gens x y {' '.join(tg)}\n{A4_RELS}\n{rels} = 1;\n"
                    + "\n".join(action) + "\n")
            try:
                G = realize(parse_presentation(text), max_cosets=4000)
            except Exception:
                continue
            if G.order() == 192:
                out.append((text, f"{T.name} mask={mask:b}"))
    return out


def generate_t4a():
    cands = a4_by_16_candidates()
    groups = [realize(parse_presentation(t)) for t, _ in cands]
    print(f"t4a: {len(cands)} raw candidates")
    res = dedup(groups)
    if res.undecided_pairs:
        print("t4a: undecided pairs!", res.undecided_pairs)
    reps = sorted(c.representative for c in res.classes)
    print(f"t4a: {len(reps)} isomorphism classes")

    rows16 = {k: v for k, v in ROWS.items() if k.startswith("a16.")}
    sig_to_key = {}
    for k, (ncl, row, _) in rows16.items():
        sig_to_key.setdefault((ncl, row), []).append(k)

    outdir = CORPUS / "t4a"
    outdir.mkdir(parents=True, exist_ok=True)
    used = set()
    assigned = []
    for r in reps:
        G = groups[r]
        sig = (conjugacy_classes(G).count, class_order_structure(G).serialize())
        keys = [k for k in sig_to_key.get(sig, []) if k not in used]
        if not keys:
            print(f"t4a UNMATCHED: {cands[r][1]} sig={sig}")
            continue
        key = sorted(keys)[0]
        used.add(key)
        assigned.append((key, r))
    for key, r in assigned:
        (outdir / f"{key}.grp").write_text(f"group {key}\n{cands[r][0]}")
    missing = sorted(set(rows16) - used)
    if missing:
        print("t4a rows with no group:", missing)
    print(f"t4a: wrote {len(assigned)} files")
    return len(assigned) == 28 and not missing


# ---------------------------------------------------------------------------
# Part 2: table-2a generated entries

M3 = GF2Matrix([[0, 1], [1, 1]])


def blockdiag3(m):
    n = m.n
    rows = [[0] * (3 * n) for _ in range(3 * n)]
    for b in range(3):
        for i in range(n):
            for j in range(n):
                rows[b * n + i][b * n + j] = int(m.m[i][j])
    return GF2Matrix(rows)


T2A_TEXT = {
    # [C4 x C4 x C2 x C2] @ C3, the order-3 map acting on both blocks
    "8": ("gens a b c d e\n"
          "a^4 = b^4 = (a,b) = c^2 = d^2 = (c,d) = "
          "(a,c) = (a,d) = (b,c) = (b,d) = e^3 = "
          "a^e*(b^{-1})*(a^{-1}) = b^e*b^2*(a^{-1}) = "
          "c^e*(d^{-1}) = d^e*((c*d)^{-1}) = 1;\n"),
    # [C8 x C8] @ C3 via the order-3 integral matrix [[0,-1],[1,-1]]
    "12": ("gens a b e\n"
           "a^8 = b^8 = (a,b) = e^3 = a^e*(b^{-1}) = b^e*a*b = 1;\n"),
    # [C4YQ2 x C2 x C2] @ C3: order-3 on the central product and the 2^2 block
    "19": ("gens x p q z c d\n"
           "x^3 = p^4 = p^2*(q^{-2}) = p^q*p = z^2*p^2 = (z,p) = (z,q) = "
           "(z,x) = c^2 = d^2 = (c,d) = (p,c) = (p,d) = (q,c) = (q,d) = "
           "(z,c) = (z,d) = p^x*(q^{-1}) = q^x*((p*q)^{-1}) = "
           "c^x*(d^{-1}) = d^x*((c*d)^{-1}) = 1;\n"),
    # [Q2 x Q2] @ C3, diagonal order-3 action on each factor
    "55": ("gens a b c d e\n"
           "a^4 = a^2*(b^{-2}) = a^b*a = c^4 = c^2*(d^{-2}) = c^d*c = "
           "(a,c) = (a,d) = (b,c) = (b,d) = e^3 = "
           "a^e*(b^{-1}) = b^e*((a*b)^{-1}) = "
           "c^e*(d^{-1}) = d^e*((c*d)^{-1}) = 1;\n"),
}

# order-96 building blocks only used here
WR96 = ("gens a b c d\n"
        "a^2 = b^2 = c^2 = (a,b) = ((a,c),a) = ((b,c),a) = ((b,c),b) = "
        "d^3 = a^d*b = b^d*b*a = (c,d) = 1;\n")
DIH96 = ("gens a b c d\n"
         "a^4 = b^4 = c^2 = (a,b) = (a,c)*a^2 = (b,c)*b^2 = "
         "d^3 = a^d*b*(a^{-1}) = b^d*a*(b^{-2}) = (c,d) = 1;\n")
# [Q2 x C2 x C2] @ C3 on explicit quaternion generators; the 2-generator
# SL(2,3) form cannot be reused here: its braid-style relator equates two
# words that would act differently on the rotated 2^2 block.
Q2E2C3 = ("gens x p q c d\n"
          "x^3 = p^4 = p^2*(q^{-2}) = p^q*p = c^2 = d^2 = (c,d) = "
          "(p,c) = (p,d) = (q,c) = (q,d) = "
          "p^x*(q^{-1}) = q^x*((p*q)^{-1}) = "
          "c^x*(d^{-1}) = d^x*((c*d)^{-1}) = 1;\n")


def generate_t2a():
    a4 = base_pres("a4")
    sl = base_pres("sl23")
    stock = {p.name: p for p in stock_two_groups(16)}
    c2, c4, c8, c16 = cyclic(2), cyclic(4), cyclic(8), cyclic(16)

    def dp(*ps):
        out = ps[0]
        for p in ps[1:]:
            out = direct_product(out, p)
        return out

    recipes = {
        "1": dp(a4, elementary_abelian(4)),
        "2": dp(base_pres("e16c3"), elementary_abelian(2)),
        "3": matrix_action_extension(3, [blockdiag3(M3)], 6),
        "4": dp(a4, c4, elementary_abelian(2)),
        "5": dp(base_pres("e16c3"), c4),
        "6": dp(base_pres("c44c3"), elementary_abelian(2)),
        "7": dp(a4, c4, c4),
        "8": parse_presentation(T2A_TEXT["8"]),
        "9": dp(a4, c8, c2),
        "10": dp(base_pres("c44c3"), c4),
        "11": dp(a4, c16),
        "12": parse_presentation(T2A_TEXT["12"]),
        "13": dp(a4, dihedral(8), c2),
        "14": dp(sl, elementary_abelian(3)),
        "15": dp(a4, quaternion(8), c2),
        "16": dp(parse_presentation(Q2E2C3), c2),
        "17": dp(a4, stock["D4YC4"]),
        "18": dp(base_pres("c4yq2c3"), elementary_abelian(2)),
        "19": parse_presentation(T2A_TEXT["19"]),
        "20": dp(a4, stock["C4sC4"]),
        "21": dp(a4, stock["1^2sC4"]),
        "22": dp(a4, modular2(16)),
        "23": dp(sl, c4, c2),
        "24": dp(base_pres("c8yq2c3"), c2),
        "25": dp(base_pres("c42c4c3"), c2),
        "26": dp(base_pres("c4yq2c3"), c4),
        "28": dp(sl, c8),
        "30": dp(a4, dihedral(16)),
        "31": dp(a4, semidihedral(16)),
        "32": dp(a4, quaternion(16)),
        "33": dp(parse_presentation(WR96), c2),
        "34": dp(parse_presentation(DIH96), c2),
        "53": dp(sl, dihedral(8)),
        "54": dp(sl, quaternion(8)),
        "55": parse_presentation(T2A_TEXT["55"]),
    }
    # gates: every entry has order 192; empirically-built entries must also
    # reproduce their recorded automorphism-group orders
    aut_gate = {"12": 6144, "16": 2304, "19": 2304, "55": 576,
                "25": 768, "33": 768, "34": 768}
    ncl_gate = {}
    outdir = CORPUS / "t2a"
    ok = True
    for key in sorted(recipes, key=int):
        pres = recipes[key]
        t0 = time.time()
        G = realize(pres)
        if G.order() != 192:
            print(f"t2a/{key}: ORDER {G.order()} != 192")
            ok = False
            continue
        msg = ""
        if key in aut_gate and aut_gate[key] is not None:
            a = automorphism_group(G).order
            msg += f" |Aut|={a}"
            if a != aut_gate[key]:
                print(f"t2a/{key}: AUT {a} != {aut_gate[key]}")
                ok = False
                continue
        if key in ncl_gate:
            n = conjugacy_classes(G).count
            msg += f" ncl={n}"
            if n != ncl_gate[key]:
                print(f"t2a/{key}: NCL {n} != {ncl_gate[key]}")
                ok = False
                continue
        text = serialize(pres)
        text = text[text.index("gens"):]  # normalize header
        (outdir / f"{key}.grp").write_text(f"group {key}\n{text}")
        print(f"t2a/{key}: ok{msg} ({time.time()-t0:.1f}s)")
    return ok


# ---------------------------------------------------------------------------
# Part 3: order-448 groups (elementary-abelian / homocyclic kernels with a C7)

M3X3 = GF2Matrix([[0, 1, 1], [1, 0, 0], [1, 0, 1]])
M6_BLOCK = GF2Matrix([[0, 1, 1, 0, 0, 0],
                      [1, 0, 0, 0, 0, 0],
                      [1, 0, 1, 0, 0, 0],
                      [0, 0, 0, 0, 1, 1],
                      [0, 0, 0, 1, 0, 0],
                      [0, 0, 0, 1, 0, 1]])
M6_DENSE = GF2Matrix([[1, 0, 1, 1, 1, 1],
                      [1, 1, 0, 0, 0, 1],
                      [0, 0, 0, 1, 1, 0],
                      [0, 0, 1, 1, 1, 0],
                      [0, 0, 0, 1, 0, 0],
                      [1, 1, 0, 0, 1, 0]])

C448 = ("gens a b c d\n"
        "a^4 = b^4 = c^4 = (a,b) = (a,c) = (b,c) = d^7 = "
        "a^d*c*((a*b)^{-1}) = b^d*((a*b^2)^{-1}) = c^d*c*a = 1;\n")


def generate_t2b():
    outdir = CORPUS / "t2b"
    outdir.mkdir(parents=True, exist_ok=True)
    entries = {
        "e64c7a": serialize(matrix_action_extension(7, [M6_BLOCK], 6,
                                                    name="e64c7a")),
        "e64c7b": serialize(matrix_action_extension(7, [M6_DENSE], 6,
                                                    name="e64c7b")),
        "h64c7": C448,
    }
    # aut orders are verified by the slow-tier harness (the searches run
    # minutes each on order-448 groups); only gate on the order here
    ok = True
    for key, text in entries.items():
        t0 = time.time()
        G = realize(parse_presentation(text))
        if G.order() != 448:
            print(f"t2b/{key}: ORDER {G.order()} != 448")
            ok = False
            continue
        msg = ""
        text = text[text.index("gens"):]
        (outdir / f"{key}.grp").write_text(f"group {key}\n{text}")
        print(f"t2b/{key}: ok{msg} ({time.time()-t0:.1f}s)")
    return ok


if __name__ == "__main__":
    what = sys.argv[1:] or ["t4a", "t2a", "t2b"]
    good = True
    if "t4a" in what:
        good &= generate_t4a()
    if "t2a" in what:
        good &= generate_t2a()
    if "t2b" in what:
        good &= generate_t2b()
    print("OK" if good else "PROBLEMS")
    sys.exit(0 if good else 1)
