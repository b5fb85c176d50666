"""Automorphism machinery: orders, inner/outer, completeness, towers."""
import pytest

from grouforge import (automorphism_group, automorphism_tower, center,
                       inner_automorphisms, is_complete, is_isomorphic,
                       odd_order_automorphisms, outer_order,
                       parse_presentation, realize)
from grouforge.autos import extension_by_automorphism
from grouforge.constructors import (cyclic, dihedral, elementary_abelian,
                                    quaternion)


def _g(text):
    return realize(parse_presentation(text))


S4 = "gens a b\na^2 = b^3 = (a*b)^4 = 1;\n"


def test_aut_of_cyclic():
    assert automorphism_group(realize(cyclic(8))).order == 4
    assert automorphism_group(realize(cyclic(5))).order == 4
    assert automorphism_group(realize(cyclic(12))).order == 4


def test_aut_of_elementary_abelian_is_gl():
    # |GL(2,2)| = 6, |GL(3,2)| = 168
    assert automorphism_group(realize(elementary_abelian(2))).order == 6
    assert automorphism_group(realize(elementary_abelian(3))).order == 168


def test_aut_of_q8_and_d4():
    assert automorphism_group(realize(quaternion(8))).order == 24
    assert automorphism_group(realize(dihedral(8))).order == 8


def test_aut_of_s4_and_completeness():
    G = _g(S4)
    aut = automorphism_group(G)
    assert aut.order == 24
    assert center(G).order() == 1
    assert is_complete(G, aut)
    assert outer_order(G, aut) == 1


def test_abelian_group_is_not_complete():
    G = realize(cyclic(3))
    assert not is_complete(G)


def test_inner_automorphisms_order():
    for pres in (dihedral(8), quaternion(8)):
        G = realize(pres)
        inn = inner_automorphisms(G)
        assert inn.order == G.order() // center(G).order()


def test_outer_order_multiplies():
    G = realize(quaternion(8))
    aut = automorphism_group(G)
    inn = inner_automorphisms(G)
    assert aut.order == outer_order(G, aut) * inn.order


def test_automorphisms_are_valid_maps():
    G = realize(dihedral(8))
    aut = automorphism_group(G)
    for phi in aut.gens:
        assert phi.is_valid()


def test_odd_order_automorphisms_on_v4():
    G = realize(elementary_abelian(2))
    found = odd_order_automorphisms(G)
    assert [p for p, _ in found] == [3]
    p, phi = found[0]
    assert phi.order() == 3


def test_odd_order_automorphisms_on_q8():
    found = odd_order_automorphisms(realize(quaternion(8)))
    assert [p for p, _ in found] == [3]


def test_cyclic_two_group_has_no_odd_automorphism():
    assert odd_order_automorphisms(realize(cyclic(8))) == []


def test_odd_order_requires_two_group():
    with pytest.raises(ValueError):
        odd_order_automorphisms(realize(cyclic(6)))


def test_extension_by_automorphism_builds_a4():
    G = realize(elementary_abelian(2))
    p, phi = odd_order_automorphisms(G)[0]
    res = extension_by_automorphism(G, p, phi)
    assert res.group.order() == 12
    a4 = _g("gens a b\na^3 = b^3 = (a*b)^2 = 1;\n")
    assert is_isomorphic(res.group, a4).result == "isomorphic"


def test_tower_of_complete_group_is_single_step():
    rep = automorphism_tower(_g(S4))
    assert rep.status == "complete"
    assert [s.order for s in rep.steps] == [24]


def test_tower_of_c3():
    rep = automorphism_tower(realize(cyclic(3)))
    assert rep.status == "complete"
    assert [s.order for s in rep.steps][:2] == [3, 2]


def test_tower_respects_order_bound():
    rep = automorphism_tower(realize(elementary_abelian(3)), max_order=100)
    assert rep.status == "capacity"


def test_tower_serializes_deterministically():
    a = automorphism_tower(_g(S4)).serialize()
    b = automorphism_tower(_g(S4)).serialize()
    assert a == b and "complete" in a
