#!/usr/bin/env python3
"""Realize every hand-written corpus file and check orders and class rows."""
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))
from a4_rows import ROWS, SUSPECT, T8_ROWS

from grouforge import parse_presentation, realize
from grouforge.structure import class_order_structure, conjugacy_classes

ROOT = pathlib.Path(__file__).resolve().parent.parent
CORPUS = ROOT / "src" / "grouforge" / "data" / "corpus"

BASE_ORDERS = {
    "a4": 12, "sl23": 24, "gl23": 48, "t234": 48, "c44c3": 48,
    "c4yq2c3": 48, "e16c3": 48, "c8yq2c3": 96, "c42c4c3": 96,
    "q2yq2c3a": 96, "q2yq2c3b": 96, "q2yd4c3": 96, "g384": 384,
}
TOWER_ORDERS = {
    "tw181": 64, "tw183": 64, "g10752": 10752, "g1536": 1536,
    "g6144": 6144, "g12288": 12288, "g9216": 9216, "g18432": 18432,
    "g36864": 36864,
}


def run(tables):
    bad = []
    for table in tables:
        for f in sorted((CORPUS / table).glob("*.grp")):
            name = f.stem
            t0 = time.time()
            try:
                pres = parse_presentation(f.read_text())
                G = realize(pres)
            except Exception as e:
                bad.append((table, name, f"FAIL {type(e).__name__}: {e}"))
                print(f"{table}/{name}: ERROR {type(e).__name__}: {e}")
                continue
            order = G.order()
            msg = f"order={order}"
            want = None
            if table == "base":
                want = BASE_ORDERS[name]
            elif table == "towers":
                want = TOWER_ORDERS[name]
            elif table in ("t4", "t5", "t8", "t2a", "a23"):
                want = 192
            status = "ok" if order == want else f"WRONG (want {want})"
            detail = ""
            if order == 192 and table in ("t4", "t5", "t8"):
                key = name if name in ROWS else None
                exp = None
                if key:
                    ncl, row, _ = ROWS[key]
                    exp = (ncl, row)
                elif name in T8_ROWS:
                    exp = (None, T8_ROWS[name])
                if exp:
                    got = class_order_structure(G).serialize()
                    ncl_got = len(conjugacy_classes(G).reps) if hasattr(conjugacy_classes(G), "reps") else conjugacy_classes(G).count
                    m = got == exp[1] and (exp[0] is None or ncl_got == exp[0])
                    sus = " [suspect]" if name in SUSPECT else ""
                    detail = (" struct-ok" if m
                              else f" STRUCT-MISMATCH{sus} got ncl={ncl_got}"
                                   f" {got} want {exp[1]}")
            line = (f"{table}/{name}: {msg} {status}{detail} "
                    f"({time.time()-t0:.1f}s)")
            print(line, flush=True)
            if status != "ok" or "MISMATCH" in detail:
                bad.append((table, name, line))
    print("\n==== problems:", len(bad))
    for b in bad:
        print(" ", b[2])


if __name__ == "__main__":
    run(sys.argv[1:] or ["base", "t4", "t5", "t8", "t2a", "a23", "towers"])
