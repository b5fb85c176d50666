"""Presentation grammar: parsing, serialization, substitution directives."""
import pytest

from grouforge import Word, parse_presentation, realize, serialize
from grouforge.corpus import all_corpus_files
from grouforge.parser import PresentationSyntaxError, apply_substitutions


def test_basic_parse():
    p = parse_presentation("gens a b\na^2 = b^3 = (a*b)^4 = 1;\n")
    assert p.generators == ["a", "b"]
    assert len(p.relators) == 3


def test_chained_equalities_make_one_relator_each():
    p = parse_presentation("gens x y\nx^4 = y^2 = 1;\n")
    assert len(p.relators) == 2


def test_duplicate_relators_dropped_with_warning():
    with pytest.warns(UserWarning):
        p = parse_presentation("gens x\nx^4 = x^2*x^2 = 1;\n")
    assert len(p.relators) == 1


def test_conjugation_is_right_action():
    p = parse_presentation("gens a b\na^b = 1;\n")
    b, a = Word.gen(1), Word.gen(0)
    assert p.relators[0] == b.inv() * a * b


def test_commutator_vs_grouping():
    p = parse_presentation("gens a b\n(a,b) = (a*b) = 1;\n")
    a, b = Word.gen(0), Word.gen(1)
    assert p.relators[0] == a.inv() * b.inv() * a * b
    assert p.relators[1] == a * b


def test_negative_and_braced_exponents():
    p = parse_presentation("gens a\na^{-2} = 1;\n")
    q = parse_presentation("gens a\na^-2 = 1;\n")
    assert p.relators[0] == q.relators[0] == Word.gen(0, -2)


def test_group_header_names_presentation():
    p = parse_presentation("group  k4\ngens a b\na^2 = b^2 = (a,b) = 1;\n")
    assert p.name == "k4"


def test_unknown_generator_rejected():
    with pytest.raises(PresentationSyntaxError):
        parse_presentation("gens a\nb^2 = 1;\n")


def test_stray_character_rejected():
    with pytest.raises(PresentationSyntaxError):
        parse_presentation("gens a\na@2 = 1;\n")


def test_unbalanced_parenthesis_rejected():
    with pytest.raises(PresentationSyntaxError):
        parse_presentation("gens a b\n(a*b^2 = 1;\n")


def test_chain_must_end_in_one():
    with pytest.raises(PresentationSyntaxError):
        parse_presentation("gens a\na^2 = a^4;\n")


def test_replace_directive_applied_on_realization():
    # C2 extension of C2 with the square mapped onto the central generator:
    # the substituted presentation is C4, not C2 x C2.
    from grouforge import class_order_structure
    split = parse_presentation("gens z c\nz^2 = (z,c) = c^2 = 1;\n")
    nonsplit = parse_presentation(
        "gens z c\nz^2 = (z,c) = c^2 = 1;\n"
        "replace c^2 with c^4 = c^2*z;\n")
    assert realize(split).order() == 4
    assert class_order_structure(realize(split)).serialize() == "2:3/3"
    g = realize(nonsplit)
    assert g.order() == 4
    assert class_order_structure(g).serialize() == "2:1/1 4:2/2"
    # applying the directives eagerly gives the same group
    assert realize(apply_substitutions(nonsplit)).order() == 4


def test_serialize_roundtrip_simple():
    p = parse_presentation("group d4\ngens r s\nr^4 = s^2 = r^s*r = 1;\n")
    q = parse_presentation(serialize(p))
    assert q.name == p.name
    assert q.generators == p.generators
    assert q.relators == p.relators


def test_serialize_roundtrip_whole_corpus():
    """Every shipped corpus file reparses to the same presentation."""
    for key, path in all_corpus_files():
        p = parse_presentation(path.read_text())
        q = parse_presentation(serialize(p))
        assert q.generators == p.generators, key
        assert q.relators == p.relators, key
        assert q.directives == p.directives, key
