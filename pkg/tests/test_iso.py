"""Isomorphism testing: verdicts, witnesses, and dedup partitioning."""
from grouforge import is_isomorphic, parse_presentation, realize
from grouforge.constructors import (cyclic, dihedral, direct_product,
                                    elementary_abelian, quaternion)
from grouforge.iso import dedup, verify_witness

import oracles


def _g(text):
    return realize(parse_presentation(text))


def test_different_orders_are_non_isomorphic():
    v = is_isomorphic(realize(cyclic(4)), realize(cyclic(8)))
    assert v.result == "non-isomorphic"
    assert not v


def test_c4_vs_v4():
    v = is_isomorphic(realize(cyclic(4)), realize(elementary_abelian(2)))
    assert v.result == "non-isomorphic"
    assert v.distinguishing


def test_d4_vs_q8():
    assert is_isomorphic(realize(dihedral(8)),
                         realize(quaternion(8))).result == "non-isomorphic"


def test_same_group_two_presentations_with_witness():
    a = _g("gens a b\na^2 = b^3 = (a*b)^4 = 1;\n")          # S4
    b = _g("gens x y\nx^4 = y^2 = (x*y)^3 = 1;\n")          # S4 again
    v = is_isomorphic(a, b)
    assert v.result == "isomorphic"
    assert v.witness is not None
    assert verify_witness(a, b, v.witness)


def test_isomorphism_is_reflexive_and_symmetric():
    a = realize(dihedral(16))
    b = realize(dihedral(16))
    assert is_isomorphic(a, a).result == "isomorphic"
    assert is_isomorphic(a, b).result == "isomorphic"
    assert is_isomorphic(b, a).result == "isomorphic"


def test_c2xc4_vs_c8():
    a = realize(direct_product(cyclic(2), cyclic(4), name="C2xC4"))
    b = realize(cyclic(8))
    assert is_isomorphic(a, b).result == "non-isomorphic"


def test_verdict_agrees_with_oracle():
    pres = [cyclic(8), dihedral(8), quaternion(8),
            direct_product(cyclic(2), cyclic(4), name="C2xC4"),
            elementary_abelian(3)]
    groups = [realize(p) for p in pres]
    tables = [oracles.from_group(g) for g in groups]
    for i in range(len(groups)):
        for j in range(i, len(groups)):
            lib = is_isomorphic(groups[i], groups[j]).result == "isomorphic"
            assert lib == oracles.are_isomorphic(tables[i], tables[j]), (i, j)


def test_dedup_partitions_duplicates():
    groups = [realize(dihedral(8)), realize(quaternion(8)),
              realize(dihedral(8)), realize(cyclic(8)),
              realize(quaternion(8))]
    res = dedup(groups)
    assert res.count == 3
    assert res.undecided_pairs == []
    members = {tuple(sorted(c.members)) for c in res.classes}
    assert (0, 2) in members and (1, 4) in members and (3,) in members


def test_dedup_representative_is_lowest_index():
    groups = [realize(cyclic(4)), realize(cyclic(4)), realize(cyclic(4))]
    res = dedup(groups)
    assert res.count == 1
    assert res.classes[0].representative == 0


def test_dedup_serialize_uses_ids():
    groups = [realize(cyclic(4)), realize(cyclic(4))]
    res = dedup(groups)
    text = res.serialize(ids=["first", "second"])
    assert "first" in text and "second" in text
