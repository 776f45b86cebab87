"""Reidemeister-Schreier rewriting from VT_n words into PVT_n and the VT_n word problem.

gamma(mu, rho_i) is trivial and gamma(mu, s_i) = mu lambda_{i,i+1} mu^-1, which
depends on the coset representative mu only through its permutation.  So the
rewriting scan only has to carry the permutation of the prefix read so far.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidInput, NotInKernel
from .perms import Perm, SignedLambda, act, pi_image, schreier_tuple, schreier_word
from .raag import RaagWord, normal_form
from .words import S, VGen, VWord, concat, invert


def gamma(mu: Perm, a: VGen) -> RaagWord:
    if a.kind != S:
        return RaagWord.identity(mu.n)
    x = act(mu, SignedLambda(a.index, a.index + 1))
    return RaagWord.gen(mu.n, x.i, x.j, x.sign)


@dataclass
class RewriteState:
    """Permutation of the processed prefix plus the letters emitted so far.

    The inverse permutation is what conjugation uses, so that is what is
    stored; swapping two entries updates it for one more rho/s letter.
    """

    n: int
    inverse_images: list[int] = field(default_factory=list)
    emitted: list = field(default_factory=list)

    def __post_init__(self):
        if not self.inverse_images:
            self.inverse_images = list(range(self.n + 1))

    @property
    def sigma(self) -> Perm:
        return Perm(tuple(self.inverse_images[1:])).inverse()

    def step(self, g: VGen) -> None:
        inv = self.inverse_images
        i = g.index
        if g.kind == S:
            a, b = inv[i], inv[i + 1]
            self.emitted.append(((a, b), 1) if a < b else ((b, a), -1))
        inv[i], inv[i + 1] = inv[i + 1], inv[i]

    def result(self) -> RaagWord:
        return RaagWord.from_letters(self.n, self.emitted)


def rewrite_raw(w: VWord) -> tuple[RaagWord, Perm]:
    """One left-to-right scan; returns (emitted word, permutation of w).

    Only meaningful as an element of PVT_n when the permutation is trivial.
    """
    st = RewriteState(w.strands)
    for g in w.letters:
        st.step(g)
    return st.result(), st.sigma


def rewrite_tau(w: VWord) -> RaagWord:
    word, sigma = rewrite_raw(w)
    if not sigma.is_identity():
        raise NotInKernel(f"word {w} maps to {sigma}, not the identity")
    return normal_form(word)


def vt_is_identity(w: VWord) -> bool:
    word, sigma = rewrite_raw(w)
    return sigma.is_identity() and normal_form(word).is_identity()


def vt_equal(u: VWord, v: VWord) -> bool:
    if u.strands != v.strands:
        raise InvalidInput(f"strand mismatch: {u.strands} vs {v.strands}")
    return vt_is_identity(concat(u, invert(v)))


def decompose(w: VWord) -> tuple[RaagWord, Perm]:
    """Split w = p * m with p in PVT_n (normal form) and m the transversal word of pi(w)."""
    sigma = pi_image(w)
    m = schreier_word(schreier_tuple(sigma))
    return rewrite_tau(concat(w, invert(m))), sigma
