import itertools
import math

import pytest
from hypothesis import given, strategies as st

from vtwin.errors import NotApplicable, WordParseError
from vtwin.perms import (
    Perm, SignedLambda, act, all_schreier_tuples, all_signed_lambdas, diagonal_orbit_check,
    lambda_orbit, parse_perm, pi_image, schreier_tuple, schreier_word,
)
from vtwin.words import concat, word

from conftest import vwords


def perms(n):
    return st.permutations(range(1, n + 1)).map(lambda xs: Perm(tuple(xs)))


def test_pi_leftmost_acts_first():
    assert str(pi_image(word(3, "r1 r2"))) == "[3,1,2]"
    assert pi_image(word(3, "s1")) == Perm.transposition(3, 1)


@given(vwords(5), vwords(5))
def test_pi_is_homomorphism(u, v):
    assert pi_image(concat(u, v)) == pi_image(u) * pi_image(v)


def test_parse_perm_forms():
    assert parse_perm("[3,1,2]") == Perm((3, 1, 2))
    assert parse_perm("(1 3 2)", 3) == Perm((3, 1, 2))
    assert parse_perm("(1 2)(3 4)") == Perm((2, 1, 4, 3))
    assert parse_perm("()", 3).is_identity()
    with pytest.raises(WordParseError):
        parse_perm("(1 2 1)", 3)
    with pytest.raises(WordParseError):
        parse_perm("[1,1,2]")


@given(perms(5))
def test_perm_text_round_trip(p):
    assert parse_perm(str(p)) == p
    assert parse_perm(p.cycle_str(), 5) == p


# Literal transcription of the rho_i table on signed generators; built without act().
def table_image(n, i, x: SignedLambda) -> SignedLambda:
    k, l, e = x.i, x.j, x.sign
    if (k, l) == (i, i + 1):
        return SignedLambda(k, l, -e)
    if k == i and l >= i + 2:
        return SignedLambda(i + 1, l, e)
    if k == i + 1 and l >= i + 2:
        return SignedLambda(i, l, e)
    if l == i and k < i:
        return SignedLambda(k, i + 1, e)
    if l == i + 1 and k < i:
        return SignedLambda(k, i, e)
    return x


@pytest.mark.parametrize("n", range(2, 7))
def test_act_matches_transposition_table_exhaustively(n):
    for i in range(1, n):
        t = Perm.transposition(n, i)
        for x in all_signed_lambdas(n):
            assert act(t, x) == table_image(n, i, x), (i, x)


@given(perms(5), perms(5), st.sampled_from(all_signed_lambdas(5)))
def test_act_is_left_action(a, b, x):
    # with leftmost-first products, a*b means "a then b", i.e. conjugation by a word for a followed by b
    assert act(a * b, x) == act(a, act(b, x))


def test_act_on_inverse_commutes_with_inverse():
    p = Perm((2, 3, 1, 4))
    for x in all_signed_lambdas(4):
        assert act(p, x.inverse()) == act(p, x).inverse()


@pytest.mark.parametrize("n", range(2, 7))
def test_orbit_is_everything(n):
    assert len(lambda_orbit(n)) == n * (n - 1) == len(all_signed_lambdas(n))


def test_schreier_examples():
    assert schreier_tuple(Perm.transposition(3, 1)).indices == (0, 2)
    assert schreier_tuple(Perm.identity(4)).indices == (1, 2, 3)
    from vtwin.perms import SchreierTuple

    assert str(schreier_word(SchreierTuple(3, (0, 0)))) == "r1 r2 r1"


@pytest.mark.parametrize("n", range(2, 6))
def test_schreier_bijection(n):
    tuples = list(all_schreier_tuples(n))
    assert len(tuples) == math.factorial(n)
    images = {pi_image(schreier_word(t)) for t in tuples}
    assert len(images) == math.factorial(n)
    for t in tuples:
        assert schreier_tuple(pi_image(schreier_word(t))) == t


@pytest.mark.parametrize("n", range(2, 7))
def test_schreier_tuple_inverts_pi(n):
    for im in itertools.islice(itertools.permutations(range(1, n + 1)), 200):
        p = Perm(im)
        assert pi_image(schreier_word(schreier_tuple(p))) == p


def test_diagonal_small_n_rejected():
    with pytest.raises(NotApplicable):
        diagonal_orbit_check(3)


def test_diagonal_n4():
    rep = diagonal_orbit_check(4)
    assert rep.orbit_count == 1
    assert rep.stabiliser_size == 1
