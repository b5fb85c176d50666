"""Products, extensions, matrix actions, and the stock 2-group battery."""
import pytest

from grouforge import (ActionSpec, CentralSubstitution, GF2Matrix,
                       direct_product, is_isomorphic, matrix_action_extension,
                       nonsplit_extension, realize, split_extension)
from grouforge.constructors import (companion_matrix_of_order, cyclic,
                                    dihedral, elementary_abelian, modular2,
                                    quaternion, semidihedral, stock_two_groups)
from grouforge.iso import dedup


def test_direct_product_order_multiplies():
    p = direct_product(cyclic(4), dihedral(8), name="C4xD4")
    assert realize(p).order() == 32


def test_direct_product_merges_generator_names():
    p = direct_product(cyclic(2), cyclic(2), name="V4")
    assert len(p.generators) == 2
    assert len(set(p.generators)) == 2
    assert realize(p).order() == 4


def test_gf2_matrix_order():
    assert GF2Matrix([[0, 1], [1, 1]]).order() == 3
    assert GF2Matrix([[1, 0], [0, 1]]).order() == 1
    assert GF2Matrix([[0, 1, 1], [1, 0, 0], [1, 0, 1]]).order() == 7


def test_companion_matrix_order():
    for p in (3, 7, 31):
        assert companion_matrix_of_order(p).order() == p


def test_matrix_action_builds_a4():
    m = GF2Matrix([[0, 1], [1, 1]])
    pres = matrix_action_extension(3, [m], 2, name="a4")
    G = realize(pres)
    assert G.order() == 12
    a4 = realize(matrix_action_extension(3, [m], 2, name="a4b"))
    assert is_isomorphic(G, a4).result == "isomorphic"


def test_matrix_action_validates_order():
    with pytest.raises(ValueError):
        matrix_action_extension(3, [GF2Matrix([[1, 0], [0, 1]])], 2)


def test_split_extension_s4():
    # C3 quotient acting on V4 by cycling the involutions gives A4;
    # a C2 on top of that is not needed -- keep it simple: V4 @ C3 = A4.
    spec = ActionSpec(base=elementary_abelian(2),
                      extension_gens=[("t", 3)],
                      action_relators=["a1^t*(a2^{-1})",
                                       "a2^t*((a1*a2)^{-1})"],
                      name="v4c3")
    res = split_extension(spec)
    assert res.group.order() == 12
    assert res.split_verified in (True, None)


def test_nonsplit_extension_gives_c4():
    spec = ActionSpec(base=cyclic(2), extension_gens=[("c", 2)],
                      action_relators=["(a,c)"], name="c2c2")
    sub = CentralSubstitution(target="c^2", replacements=["c^4", "c^2*a"],
                              central_word="a")
    res = nonsplit_extension(spec, sub)
    assert res.group.order() == 4
    # the flag records that the substituted extension was confirmed to have
    # no complement: C4 over its order-2 subgroup is genuinely nonsplit
    assert res.split_verified is True
    c4 = realize(cyclic(4))
    assert is_isomorphic(res.group, c4).result == "isomorphic"


def test_nonsplit_noncentral_target_rejected():
    spec = ActionSpec(base=dihedral(8), extension_gens=[("c", 2)],
                      action_relators=["(r,c)", "(s,c)"], name="bad")
    with pytest.raises(Exception):
        nonsplit_extension(spec, CentralSubstitution(
            target="c^2", replacements=["c^4", "c^2*r"],
            central_word="r"))


def test_noop_substitution_still_splits():
    spec = ActionSpec(base=cyclic(2), extension_gens=[("c", 2)],
                      action_relators=["(a,c)"], name="noop")
    sub = CentralSubstitution(target="c^2", replacements=["c^2"],
                              central_word="a^2")
    with pytest.warns(UserWarning):
        res = nonsplit_extension(spec, sub)
    assert res.group.order() == 4
    assert res.split_verified is False        # a complement exists


def test_stock_counts_are_complete_through_16():
    groups = stock_two_groups(16)
    by_order = {}
    for p in groups:
        g = realize(p)
        by_order.setdefault(g.order(), []).append(g)
    assert len(by_order[2]) == 1
    assert len(by_order[4]) == 2
    assert len(by_order[8]) == 5
    assert len(by_order[16]) == 14
    # each family is pairwise non-isomorphic
    for order, gs in by_order.items():
        assert dedup(gs).count == len(gs), f"duplicate at order {order}"


def test_named_small_families():
    assert realize(semidihedral(16)).order() == 16
    assert realize(modular2(16)).order() == 16
    assert realize(quaternion(16)).order() == 16
    assert is_isomorphic(realize(dihedral(8)),
                         realize(quaternion(8))).result == "non-isomorphic"
