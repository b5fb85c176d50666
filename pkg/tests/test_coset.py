"""Coset enumeration: orders, subgroup index, capacity behaviour."""
import pytest

from grouforge import (CapacityExceeded, enumerate_cosets, parse_presentation,
                       realize)
from grouforge.constructors import cyclic, dihedral, quaternion


def _order(text):
    return realize(parse_presentation(text)).order()


def test_cyclic_orders():
    for n in (1, 2, 3, 12, 17):
        assert realize(cyclic(n)).order() == n


def test_dihedral_and_quaternion():
    assert realize(dihedral(8)).order() == 8
    assert realize(dihedral(16)).order() == 16
    assert realize(quaternion(8)).order() == 8


def test_symmetric_group_presentation():
    assert _order("gens a b\na^2 = b^3 = (a*b)^4 = 1;\n") == 24


def test_trivial_quotient():
    assert _order("gens a\na = 1;\n") == 1


def test_collapse_to_trivial():
    # relators force a = a^2, hence a = 1
    assert _order("gens a\na^2 = a^3 = 1;\n") == 1


def test_free_group_exceeds_capacity():
    p = parse_presentation("gens a b\n")
    with pytest.raises(CapacityExceeded):
        realize(p, max_cosets=2000)


def test_infinite_cyclic_rejected():
    from grouforge import NotFaithful
    p = parse_presentation("gens a\n")
    with pytest.raises((CapacityExceeded, NotFaithful)):
        realize(p, max_cosets=2000)


def test_subgroup_index():
    # index of <b> (order 3) in S4 given on 2 generators is 8
    p = parse_presentation("gens a b\na^2 = b^3 = (a*b)^4 = 1;\n")
    table = enumerate_cosets(p, subgroup_generators=[p.word("b")])
    assert table.index == 8


def test_full_enumeration_degree_equals_order():
    p = parse_presentation("gens r s\nr^4 = s^2 = r^s*r = 1;\n")
    table = enumerate_cosets(p, subgroup_generators=[])
    assert table.index == 8


def test_presentation_attached_to_group():
    p = parse_presentation("gens a\na^6 = 1;\n")
    g = realize(p)
    assert g.presentation is not None
    assert g.order() == 6
