import pytest
from hypothesis import given

from vtwin.errors import InvalidStrandCount, WordParseError
from vtwin.rewriting import vt_is_identity
from vtwin.words import (
    VWord, commutator, concat, defining_relators, free_reduce, invert, parity, parse_word, r, s, word,
)

from conftest import vwords


def test_parse_and_format_round_trip():
    w = parse_word("s1 r2  s3", 4)
    assert w.letters == (s(1), r(2), s(3))
    assert str(w) == "s1 r2 s3"
    assert parse_word(str(w), 4) == w


def test_empty_word():
    assert parse_word("", 3).is_empty()
    assert str(VWord(3)) == ""


@pytest.mark.parametrize("text,col", [("s1 x2", 3), ("s1 s4", 3), ("r0", 0), ("s1 r", 3)])
def test_parse_errors_carry_position(text, col):
    with pytest.raises(WordParseError) as exc:
        parse_word(text, 4)
    assert exc.value.position == col


def test_strand_count_checked():
    with pytest.raises(InvalidStrandCount):
        parse_word("", 1)
    with pytest.raises(ValueError):
        VWord(3, (s(3),))


@given(vwords(5))
def test_inverse_is_reversal_and_trivialises(w):
    assert invert(invert(w)) == w
    assert vt_is_identity(concat(w, invert(w)))
    assert free_reduce(concat(w, invert(w))).is_empty()


@given(vwords(4), vwords(4))
def test_free_reduce_is_sound(u, v):
    assert vt_is_identity(concat(free_reduce(concat(u, v)), invert(concat(u, v))))


def test_power_and_commutator():
    w = word(3, "s1 r2")
    assert str(w ** 2) == "s1 r2 s1 r2"
    assert str(w ** -1) == "r2 s1"
    assert (w ** 0).is_empty()
    assert str(commutator(word(3, "s1"), word(3, "r2"))) == "s1 r2 s1 r2"


@pytest.mark.parametrize("n,count", [(2, 2), (3, 6), (4, 14), (5, 26), (6, 42)])
def test_relator_counts(n, count):
    # s^2, r^2 per index; both far-commute families; braids; ordered mixed far pairs; twists
    rels = defining_relators(n)
    assert len(rels) == count
    assert set(rels.families) <= {
        "s-involution", "s-far-commute", "r-involution", "r-far-commute",
        "r-braid", "mixed-far-commute", "mixed-twist",
    }


def test_twist_relator_shape():
    (tw,) = defining_relators(3).by_family("mixed-twist")
    assert str(tw) == "r1 r2 s1 r2 r1 s2"


@given(vwords(5), vwords(5))
def test_parity_is_additive(u, v):
    a, b = parity(u), parity(v)
    assert parity(concat(u, v)) == ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2)


def test_parity_examples():
    assert parity(word(3, "s1")) == (1, 0)
    assert parity(word(3, "r1")) == (0, 1)
    assert parity(word(3, "s1 r2")) == (1, 1)
