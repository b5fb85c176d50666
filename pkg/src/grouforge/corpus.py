"""Access to the shipped presentation corpus and expected-value tables.

Corpus layout: ``data/corpus/<table>/<id>.grp`` (one presentation per file,
``group <name>`` header).  Expected values: ``data/expected/<table>.tsv``,
hand-transcribed with a citation column on every row; rows whose source
value is internally inconsistent are flagged ``suspect`` and reported
informationally instead of gating verification runs.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .parser import Presentation, parse_presentation

_DATA = Path(__file__).resolve().parent / "data"
CORPUS_DIR = _DATA / "corpus"
EXPECTED_DIR = _DATA / "expected"

#: selectors accepted by ``verify`` (case-insensitive)
SELECTORS = ("a4", "8", "2a", "45", "2b", "a1", "a23", "dedup45", "dedup458")


@dataclass(frozen=True)
class CorpusEntry:
    """One verifiable claim: a presentation plus its expected values.

    ``expected`` maps check names (order, ncl, structure, aut_order,
    complete, aut_orders, iso_to, classes) to expected values; every entry
    carries the citation of the source row.  ``path`` is None when the
    claim has no realizable presentation (capacity tier).
    """

    table: str
    id: str
    path: Path | None
    expected: dict
    tier: str = "fast"
    suspect: bool = False
    citation: str = ""
    note: str = ""

    @property
    def key(self) -> str:
        return f"{self.table}/{self.id}"

    def load(self) -> Presentation:
        if self.path is None:
            raise FileNotFoundError(f"no presentation for {self.key}: {self.note}")
        return load_presentation(self.path)


def read_table(name: str) -> list[dict]:
    path = EXPECTED_DIR / f"{name}.tsv"
    lines = path.read_text().splitlines()
    header = lines[0].split("\t")
    return [dict(zip(header, ln.split("\t"))) for ln in lines[1:]]


def corpus_path(table: str, ident: str) -> Path | None:
    p = CORPUS_DIR / table / f"{ident}.grp"
    return p if p.is_file() else None


def load_presentation(path: Path) -> Presentation:
    return parse_presentation(path.read_text())


def resolve(spec: str) -> Path:
    """Resolve a CLI file argument: a filesystem path or ``table/id``."""
    p = Path(spec)
    if p.is_file():
        return p
    if "/" in spec:
        table, ident = spec.split("/", 1)
        cp = corpus_path(table, ident)
        if cp is not None:
            return cp
    raise FileNotFoundError(f"no such file or corpus entry: {spec}")


def _sort_key(row_id: str):
    return (0, int(row_id)) if row_id.isdigit() else (1, row_id)


def entries(selector: str) -> list[CorpusEntry]:
    """Corpus entries for a verify selector, deterministically ordered."""
    sel = selector.lower()
    if sel == "a4":
        out = []
        for r in read_table("a4"):
            out.append(CorpusEntry(
                table=r["table"], id=r["id"],
                path=corpus_path(r["table"], r["id"]),
                expected={"order": 192, "ncl": int(r["ncl"]),
                          "structure": r["structure"]},
                tier="fast", suspect=bool(r["suspect"]),
                citation=r["citation"]))
        out.sort(key=lambda e: (e.table, _sort_key(e.id)))
        return out
    if sel == "8":
        return [CorpusEntry(
            table="t8", id=r["id"], path=corpus_path("t8", r["id"]),
            expected={"order": 192, "structure": r["structure"]},
            tier="fast", suspect=bool(r["suspect"]), citation=r["citation"])
            for r in sorted(read_table("t8"), key=lambda r: _sort_key(r["id"]))]
    if sel == "2a":
        return [CorpusEntry(
            table="t2a", id=r["id"], path=corpus_path("t2a", r["id"]),
            expected={"order": 192, "aut_order": int(r["aut_order"])},
            tier=r["tier"], suspect=bool(r["suspect"]),
            citation=r["citation"], note=r["note"])
            for r in sorted(read_table("2a"), key=lambda r: _sort_key(r["id"]))]
    if sel == "45":
        out = []
        for r in sorted(read_table("t45aut"), key=lambda r: _sort_key(r["id"])):
            exp = {"order": 192, "aut_order": int(r["aut_order"])}
            if r["complete"]:
                exp["complete"] = True
            out.append(CorpusEntry(
                table=r["table"], id=r["id"],
                path=corpus_path(r["table"], r["id"]),
                expected=exp, tier="fast", suspect=bool(r["suspect"]),
                citation=r["citation"]))
        return out
    if sel == "2b":
        return [CorpusEntry(
            table="t2b", id=r["id"], path=corpus_path("t2b", r["id"]),
            expected={"order": int(r["order"]),
                      "aut_order": int(r["aut_order"])},
            tier=r["tier"], suspect=bool(r["suspect"]), citation=r["citation"])
            for r in sorted(read_table("2b"), key=lambda r: r["id"])]
    if sel == "a1":
        return [CorpusEntry(
            table="towers", id=r["id"], path=corpus_path("towers", r["id"]),
            expected={"aut_orders": [int(x) for x in
                                     r["aut_orders"].split(",")],
                      "terminal": r["terminal"]},
            tier="slow", suspect=bool(r["suspect"]), citation=r["citation"])
            for r in sorted(read_table("a1"), key=lambda r: r["id"])]
    if sel == "a23":
        return [CorpusEntry(
            table="a23", id=r["id"], path=corpus_path("a23", r["id"]),
            expected={"order": 192, "iso_to": r["target"]},
            tier="fast", suspect=bool(r["suspect"]),
            citation=r["citation"], note=r["note"])
            for r in sorted(read_table("a23"), key=lambda r: r["id"])]
    if sel in ("dedup45", "dedup458"):
        want = "t4+t5+t4a" if sel == "dedup45" else "t4+t5+t4a+t8"
        for r in read_table("dedup"):
            if r["selector"] == want:
                return [CorpusEntry(
                    table="dedup", id=r["selector"], path=None,
                    expected={"classes": int(r["classes"])},
                    tier="fast", citation=r["citation"],
                    note="aggregate over " + want)]
        raise KeyError(want)
    raise KeyError(f"unknown selector {selector!r}; choose from {SELECTORS}")


def dedup_members(selector: str) -> list[tuple[str, Path]]:
    """(key, path) pairs of the presentations a dedup selector covers."""
    tables = ["t4", "t5", "t4a"]
    if selector.lower() == "dedup458":
        tables.append("t8")
    out = []
    for t in tables:
        for p in sorted((CORPUS_DIR / t).glob("*.grp"),
                        key=lambda p: _sort_key(p.stem)):
            out.append((f"{t}/{p.stem}", p))
    return out


def all_corpus_files() -> list[tuple[str, Path]]:
    out = []
    for d in sorted(CORPUS_DIR.iterdir()):
        if d.is_dir():
            for p in sorted(d.glob("*.grp"), key=lambda p: _sort_key(p.stem)):
                out.append((f"{d.name}/{p.stem}", p))
    return out
