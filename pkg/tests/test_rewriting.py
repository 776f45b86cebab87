import pytest
from hypothesis import given

from vtwin.errors import InvalidInput, NotInKernel
from vtwin.perms import all_schreier_tuples, pi_image, schreier_tuple, schreier_word
from vtwin.raag import expand_to_vtn, normal_form
from vtwin.rewriting import decompose, rewrite_raw, rewrite_tau, vt_equal, vt_is_identity
from vtwin.words import R, VWord, concat, defining_relators, invert, word

from conftest import raag_words, vwords


def test_rewrite_examples():
    assert str(rewrite_tau(word(3, "s1 r1"))) == "L1.2"
    assert str(rewrite_tau(word(3, "r1 s1 r1 s1"))) == "L1.2^-2"
    assert rewrite_tau(word(3, "")).is_identity()
    with pytest.raises(NotInKernel):
        rewrite_tau(word(3, "s1"))


def test_decompose_example():
    p, sigma = decompose(word(3, "s1"))
    assert str(p) == "L1.2" and str(sigma) == "[2,1,3]"


@pytest.mark.parametrize("n", range(2, 7))
def test_relators_trivial(n):
    for w in defining_relators(n):
        assert vt_is_identity(w), w


@pytest.mark.parametrize("n", [2, 3, 4])
def test_relator_conjugates_by_transversal(n):
    # every transversal conjugate of a relator rewrites to a trivial PVT_n word
    for t in all_schreier_tuples(n):
        m = schreier_word(t)
        for rel in defining_relators(n):
            assert rewrite_tau(concat(m, rel, invert(m))).is_identity()


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_round_trip_small(n):
    from hypothesis import given as g, settings

    @settings(max_examples=100, deadline=None)
    @g(raag_words(n))
    def inner(x):
        assert rewrite_tau(expand_to_vtn(x)) == normal_form(x)

    inner()


@given(vwords(5), vwords(5))
def test_conjugation_coherence(w, c):
    # conjugating a pure word by a rho-word relabels its rewrite by that word's permutation
    c = VWord(5, tuple(g for g in c.letters if g.kind == R))
    pure = concat(w, invert(schreier_word(schreier_tuple(pi_image(w)))))
    conj = concat(c, pure, invert(c))
    from vtwin.morphisms import perm_auto

    assert rewrite_tau(conj) == perm_auto(pi_image(c))(rewrite_tau(pure))


@given(vwords(5))
def test_decompose_reassembles(w):
    p, sigma = decompose(w)
    assert sigma == pi_image(w)
    assert vt_equal(w, concat(expand_to_vtn(p), schreier_word(schreier_tuple(sigma))))


@given(vwords(4), vwords(4))
def test_vt_equal_is_group_law(u, v):
    assert vt_equal(concat(u, v), concat(u, v))
    assert vt_equal(invert(concat(u, v)), concat(invert(v), invert(u)))


def test_vt_equal_strand_mismatch():
    with pytest.raises(InvalidInput):
        vt_equal(word(3, "s1"), word(4, "s1"))


def test_nontrivial_words():
    assert not vt_is_identity(word(3, "s1 r1"))
    assert not vt_is_identity(word(4, "s1 s2 s1 s2"))
    assert vt_is_identity(word(4, "s1 s3 s1 s3"))
    assert not vt_is_identity(word(3, "s1 r2 s1 r2"))


def test_raw_scan_tracks_permutation():
    raw, sigma = rewrite_raw(word(3, "s1 r2"))
    assert str(sigma) == str(pi_image(word(3, "s1 r2")))
    assert str(raw) == "L1.2"
