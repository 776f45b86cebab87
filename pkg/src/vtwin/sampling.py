"""Seeded random words for the property suites."""

from __future__ import annotations

import random

from .raag import RaagWord, vertices
from .words import VGen, VWord, R, S


def random_vword(n: int, rng: random.Random, max_len: int = 24) -> VWord:
    k = rng.randint(0, max_len)
    return VWord(n, tuple(VGen(rng.choice((S, R)), rng.randint(1, n - 1)) for _ in range(k)))


def random_raag_word(n: int, rng: random.Random, max_syllables: int = 15, max_exp: int = 3) -> RaagWord:
    vs = vertices(n)
    syl = []
    for _ in range(rng.randint(0, max_syllables)):
        e = rng.choice([k for k in range(-max_exp, max_exp + 1) if k])
        syl.append((rng.choice(vs), e))
    return RaagWord.from_letters(n, syl)
