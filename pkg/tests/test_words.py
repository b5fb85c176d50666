"""Free-group word reduction and algebra."""
import hypothesis.strategies as st
from hypothesis import given

from grouforge import Word

syllables = st.lists(
    st.tuples(st.integers(0, 4), st.integers(-5, 5).filter(bool)),
    max_size=8)
words = syllables.map(Word)


def test_reduction_cancels_adjacent():
    w = Word.gen(0) * Word.gen(0).inv()
    assert w.is_identity()
    w = Word.gen(0, 2) * Word.gen(0, -1)
    assert w == Word.gen(0)


def test_gen_and_identity():
    assert Word.identity().is_identity()
    assert not Word.gen(1).is_identity()
    assert Word.gen(2, 0).is_identity()


def test_power():
    a = Word.gen(0)
    assert a ** 3 == Word.gen(0, 3)
    assert a ** 0 == Word.identity()
    assert a ** -2 == Word.gen(0, -2)


def test_conjugation_convention():
    # x^y = y^-1 x y
    x, y = Word.gen(0), Word.gen(1)
    assert x.conj(y) == y.inv() * x * y


def test_commutator_via_conj():
    x, y = Word.gen(0), Word.gen(1)
    comm = x.inv() * y.inv() * x * y
    assert x * comm == x.conj(y) * Word.identity() * (y.inv() * y)


def test_letters_and_max_generator():
    w = Word.gen(0) * Word.gen(3, -2)
    assert w.max_generator() == 3
    assert len(w) == 3


@given(words)
def test_inverse_is_inverse(w):
    assert (w * w.inv()).is_identity()
    assert (w.inv() * w).is_identity()


@given(words, words)
def test_antihomomorphism_of_inverse(u, v):
    assert (u * v).inv() == v.inv() * u.inv()


@given(words, words, words)
def test_associativity(u, v, w):
    assert (u * v) * w == u * (v * w)


@given(words, st.integers(-4, 4), st.integers(-4, 4))
def test_power_addition(w, m, n):
    assert (w ** m) * (w ** n) == w ** (m + n)


@given(words, words)
def test_conjugation_composes(u, v):
    w = Word.gen(0)
    assert w.conj(u * v) == w.conj(u).conj(v)


@given(words)
def test_double_inverse(w):
    assert w.inv().inv() == w
