"""Conjugacy classes, centers, and class/order censuses vs the oracle."""
import pytest

from grouforge import (ClassOrderStructure, center, class_order_structure,
                       conjugacy_classes, parse_presentation, realize)
from grouforge.constructors import dihedral, quaternion, cyclic
import oracles


def _g(text):
    return realize(parse_presentation(text))


def test_s3_classes():
    G = _g("gens a b\na^2 = b^3 = (a*b)^2 = 1;\n")
    assert G.order() == 6
    assert conjugacy_classes(G).count == 3
    assert class_order_structure(G).serialize() == "2:3/1 3:2/1"


def test_q8_census_and_center():
    G = realize(quaternion(8))
    assert conjugacy_classes(G).count == 5
    assert class_order_structure(G).serialize() == "2:1/1 4:6/3"
    assert center(G).order() == 2


def test_d4_census_and_center():
    G = realize(dihedral(8))
    assert conjugacy_classes(G).count == 5
    assert class_order_structure(G).serialize() == "2:5/3 4:2/1"
    assert center(G).order() == 2


def test_abelian_center_is_whole_group():
    G = realize(cyclic(12))
    assert center(G).order() == 12
    assert conjugacy_classes(G).count == 12


def test_structure_serialize_parse_roundtrip():
    s = "2:19/3 3:32/1 4:60/3 6:32/1 8:48/2"
    assert ClassOrderStructure.parse(s).serialize() == s


def test_census_identities_on_sl23():
    G = _g("gens a b\na^3 = a*b*a*((b*a*b)^{-1}) = 1;\n")
    assert G.order() == 24
    cs = class_order_structure(G)
    assert sum(n for _, n, _ in cs.entries) == G.order() - 1
    assert sum(c for _, _, c in cs.entries) == conjugacy_classes(G).count - 1


@pytest.mark.parametrize("text,order", [
    ("gens a b\na^2 = b^3 = (a*b)^2 = 1;\n", 6),          # S3
    ("gens a b\na^2 = b^3 = (a*b)^4 = 1;\n", 24),         # S4
    ("gens a b\na^4 = b^4 = a^2*(b^{-2}) = a^b*a = 1;\n", 8),   # Q8
    ("gens a b\na^3 = b^2 = (a,b) = 1;\n", 6),            # C6
])
def test_against_oracle(text, order):
    G = _g(text)
    assert G.order() == order
    t = oracles.from_group(G)
    assert t.n == order
    assert conjugacy_classes(G).count == len(oracles.conjugacy_classes(t))
    assert center(G).order() == len(oracles.center(t))
    assert class_order_structure(G).serialize() == \
        oracles.class_order_structure(t)
