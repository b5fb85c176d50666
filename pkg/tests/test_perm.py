"""Permutations and BSGS-backed group orders, cross-checked by closure."""
import hypothesis.strategies as st
import pytest
from hypothesis import given

from grouforge import PermGroup, Permutation
from oracles import closure

perms7 = st.permutations(range(7)).map(Permutation)


def test_identity_and_call():
    e = Permutation.identity(4)
    assert [e(i) for i in range(4)] == [0, 1, 2, 3]
    assert e.is_identity()


def test_from_cycles():
    p = Permutation.from_cycles("(1,2,3)(5,7)", 7)
    assert p.images == (1, 2, 0, 3, 6, 5, 4)


def test_from_cycles_out_of_range():
    with pytest.raises(ValueError):
        Permutation.from_cycles("(1,9)", 7)


def test_not_a_permutation_rejected():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


def test_composition_is_left_to_right():
    p = Permutation.from_cycles("(1,2)", 3)
    q = Permutation.from_cycles("(2,3)", 3)
    assert (p * q)(0) == q(p(0))


@given(perms7, perms7)
def test_inverse_and_product(p, q):
    assert (p * p.inv()).is_identity()
    assert ((p * q).inv()).images == (q.inv() * p.inv()).images


@given(perms7, perms7, perms7)
def test_associative(p, q, r):
    assert ((p * q) * r).images == (p * (q * r)).images


def _grp(*cycles, degree):
    return PermGroup([Permutation.from_cycles(c, degree) for c in cycles])


def test_orders_of_known_groups():
    assert _grp("(1,2)", "(1,2,3,4)", degree=4).order() == 24     # S4
    assert _grp("(1,2,3)", "(2,3,4)", degree=4).order() == 12     # A4
    assert _grp("(1,2,3,4,5)", degree=5).order() == 5
    assert _grp("(1,2)(3,4)", "(1,3)(2,4)", degree=4).order() == 4


def test_order_matches_element_closure():
    G = _grp("(1,2)", "(1,2,3,4,5)", degree=5)
    els = closure([p.images for p in G.generators])
    assert G.order() == len(els) == 120


@given(st.lists(perms7, min_size=1, max_size=3))
def test_bsgs_order_equals_closure(gens):
    G = PermGroup(gens, degree=7)
    els = closure([p.images for p in gens] or [tuple(range(7))])
    assert G.order() == len(els)


def test_membership_via_order():
    # <(1,2,3)> has order 3 and does not contain a transposition
    G = _grp("(1,2,3)", degree=3)
    H = PermGroup(G.generators + [Permutation.from_cycles("(1,2)", 3)])
    assert G.order() == 3
    assert H.order() == 6
