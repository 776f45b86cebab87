import random

import pytest
from hypothesis import settings, strategies as st

from vtwin.raag import RaagWord, vertices
from vtwin.words import R, S, VGen, VWord

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


def vwords(n: int, max_size: int = 24):
    letter = st.builds(VGen, st.sampled_from((S, R)), st.integers(1, n - 1))
    return st.lists(letter, max_size=max_size).map(lambda xs: VWord(n, tuple(xs)))


def raag_words(n: int, max_syllables: int = 12, max_exp: int = 3):
    syl = st.tuples(
        st.sampled_from(vertices(n)),
        st.integers(-max_exp, max_exp).filter(bool),
    )
    return st.lists(syl, max_size=max_syllables).map(lambda xs: RaagWord.from_letters(n, xs))


@pytest.fixture
def rng():
    return random.Random(0x5EED)
