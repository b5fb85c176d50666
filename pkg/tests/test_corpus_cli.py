"""Corpus integrity, the verification driver, and the CLI surface."""
import json

import pytest
from click.testing import CliRunner

from grouforge import parse_presentation, realize
from grouforge.cli import main, run_verify
from grouforge.corpus import (SELECTORS, all_corpus_files, corpus_path,
                              dedup_members, entries, load_presentation,
                              resolve)


# -- corpus data -------------------------------------------------------------

EXPECTED_COUNTS = {"a4": 82, "8": 5, "2a": 70, "45": 53, "2b": 3,
                   "a1": 3, "a23": 8, "dedup45": 1, "dedup458": 1}


@pytest.mark.parametrize("sel", sorted(EXPECTED_COUNTS))
def test_selector_row_counts(sel):
    assert len(entries(sel)) == EXPECTED_COUNTS[sel]


def test_every_entry_has_citation_and_tier():
    for sel in SELECTORS:
        for e in entries(sel):
            assert e.citation, (sel, e.id)
            assert e.tier in ("fast", "slow", "capacity"), (sel, e.id)


def test_capacity_entries_are_the_only_missing_files():
    for sel in SELECTORS:
        for e in entries(sel):
            if e.path is None and "classes" not in e.expected:
                assert e.tier == "capacity", (sel, e.id)


def test_unknown_selector_rejected():
    with pytest.raises(KeyError):
        entries("nope")


def test_corpus_files_all_parse():
    files = all_corpus_files()
    assert len(files) >= 180
    for key, path in files:
        p = load_presentation(path)
        assert p.generators, key


def test_dedup_member_counts():
    assert len(dedup_members("dedup45")) == 81
    assert len(dedup_members("dedup458")) == 86


def test_resolve_corpus_id_and_path():
    p = resolve("base/sl23")
    assert p == corpus_path("base", "sl23")
    assert resolve(str(p)) == p
    with pytest.raises(FileNotFoundError):
        resolve("base/notthere")


# -- verification driver -----------------------------------------------------

def test_verify_report_row_count_matches_corpus():
    rep = run_verify("8")
    assert len(rep.rows) == len(entries("8"))
    assert rep.ok


def test_verify_skips_offtier_with_reason():
    rep = run_verify("2b", tier="fast")
    assert len(rep.rows) == 3
    assert all(r.verdict == "skipped(tier)" for r in rep.rows)
    assert rep.ok


def test_verify_capacity_rows_reported_not_silently_dropped(monkeypatch):
    # stub out the per-entry computation: this tests report plumbing only
    import grouforge.cli as cli
    monkeypatch.setattr(cli, "_compute_checks",
                        lambda sel, e: dict(e.expected))
    rep = run_verify("2a", tier="all")
    by_id = {r.id: r for r in rep.rows}
    assert by_id["3"].verdict == "skipped(capacity)"
    assert by_id["35"].verdict == "skipped(capacity)"
    assert by_id["35"].note
    assert len(rep.rows) == 70
    assert sum(r.verdict in ("match", "suspect-informational")
               for r in rep.rows) == 68


def test_verify_mismatch_gates(monkeypatch):
    import grouforge.cli as cli

    def wrong(sel, e):
        comp = dict(e.expected)
        comp["order"] = 1
        return comp

    monkeypatch.setattr(cli, "_compute_checks", wrong)
    rep = run_verify("8")
    assert not rep.ok
    # suspect rows never gate even when they disagree
    assert all(r.verdict != "mismatch" or not entries("8")[i].suspect
               for i, r in enumerate(rep.rows))


def test_verify_deterministic_tsv():
    a = run_verify("8").to_tsv()
    b = run_verify("8").to_tsv()
    assert a == b
    assert a.count("\n") == len(entries("8")) + 1


def test_verify_parallel_equals_serial():
    assert run_verify("8", jobs=3).to_tsv() == run_verify("8").to_tsv()


def test_verify_suspect_rows_do_not_gate():
    rep = run_verify("a23")
    suspects = [r for r in rep.rows if r.verdict == "suspect-informational"]
    assert len(suspects) == 2
    assert rep.ok


# -- CLI ---------------------------------------------------------------------

runner = CliRunner()


def test_cli_order():
    res = runner.invoke(main, ["order", "base/sl23"])
    assert res.exit_code == 0
    assert res.output.strip() == "24"


def test_cli_order_tsv():
    res = runner.invoke(main, ["order", "base/gl23", "--format", "tsv"])
    assert res.exit_code == 0
    assert res.output.strip() == "order\t48"


def test_cli_classes_expected_census():
    res = runner.invoke(main, ["classes", "t4/55"])
    assert res.exit_code == 0
    assert "ncl 11" in res.output
    assert "2:19/3 3:32/1 4:60/3 6:32/1 8:48/2" in res.output


def test_cli_aut():
    res = runner.invoke(main, ["aut", "base/sl23"])
    assert res.exit_code == 0
    assert res.output.strip() == "24"


def test_cli_iso():
    res = runner.invoke(main, ["iso", "base/sl23", "base/sl23"])
    assert res.exit_code == 0
    assert "isomorphic" in res.output
    res = runner.invoke(main, ["iso", "base/sl23", "base/gl23"])
    assert res.exit_code == 0
    assert "non-isomorphic" in res.output


def test_cli_tower_pretty():
    res = runner.invoke(main, ["tower", "base/t234", "--max-order", "4000"])
    assert res.exit_code == 0
    assert "->" in res.output or "[" in res.output


def test_cli_verify_exit_codes_and_determinism():
    a = runner.invoke(main, ["verify", "8", "--format", "tsv"])
    b = runner.invoke(main, ["verify", "8", "--format", "tsv"])
    assert a.exit_code == 0 and b.exit_code == 0
    assert a.output == b.output


def test_cli_verify_unknown_selector():
    res = runner.invoke(main, ["verify", "bogus"])
    assert res.exit_code != 0


def test_cli_construct_matrix(tmp_path):
    spec = {"kind": "matrix", "p": 7, "n": 3, "name": "c2cubedc7",
            "matrices": [[[0, 1, 1], [1, 0, 0], [1, 0, 1]]]}
    f = tmp_path / "spec.json"
    f.write_text(json.dumps(spec))
    out = tmp_path / "out.grp"
    res = runner.invoke(main, ["construct", str(f), "-o", str(out)])
    assert res.exit_code == 0, res.output
    assert "order\t56" in res.output or "# order 56" in res.output
    assert realize(parse_presentation(out.read_text())).order() == 56


def test_cli_construct_nonsplit_noop_same_order(tmp_path):
    base = tmp_path / "c2.grp"
    base.write_text("gens a\na^2 = 1;\n")
    spec = {"kind": "nonsplit", "base": str(base),
            "extension_gens": [["c", 2]],
            "action_relators": ["(a,c)"], "name": "c4",
            "substitution": {"target": "c^2",
                             "replacements": ["c^4", "c^2*a"],
                             "central": "a"}}
    f = tmp_path / "spec.json"
    f.write_text(json.dumps(spec))
    res = runner.invoke(main, ["construct", str(f)])
    assert res.exit_code == 0, res.output
    assert "order 4" in res.output.replace("\t", " ").replace("#", "").strip() \
        or "order\t4" in res.output


def test_cli_capacity_error_is_nonzero(tmp_path):
    f = tmp_path / "free.grp"
    f.write_text("gens a b\n")
    res = runner.invoke(main, ["order", str(f)])
    assert res.exit_code != 0
