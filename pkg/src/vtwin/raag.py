"""PVT_n as a right-angled Artin group on the letters lambda_{i,j}.

lambda_{i,j} and lambda_{k,l} commute exactly when {i,j} and {k,l} are
disjoint.  Words are stored as syllables ``((i, j), exponent)``.

Normal form: reduce by piling (one pile per generator, Viennot heaps), then
read the heap off by always emitting the least available generator in the
lexicographic order on (i, j).

Text form: ``L<i>.<j>`` with optional ``^<k>`` exponent, e.g. ``"L1.2 L3.4^-1"``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import InvalidInput, WordParseError
from .words import VGen, VWord, free_reduce, r, s

Vertex = tuple[int, int]


@lru_cache(maxsize=None)
def vertices(n: int) -> tuple[Vertex, ...]:
    return tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))


def commute(u: Vertex, v: Vertex) -> bool:
    """True when the two generators commute (equal, or disjoint index sets)."""
    return u == v or not set(u) & set(v)


@lru_cache(maxsize=None)
def _blockers(n: int) -> dict[Vertex, tuple[Vertex, ...]]:
    vs = vertices(n)
    return {v: tuple(u for u in vs if not commute(u, v)) for v in vs}


@dataclass(frozen=True)
class RaagWord:
    n: int
    syllables: tuple[tuple[Vertex, int], ...] = ()

    def __post_init__(self):
        syl = tuple((tuple(v), int(e)) for v, e in self.syllables)
        for (i, j), e in syl:
            if not 1 <= i < j <= self.n:
                raise ValueError(f"generator L{i}.{j} out of range for n={self.n}")
            if e == 0:
                raise ValueError("syllable exponent must be nonzero")
        object.__setattr__(self, "syllables", syl)

    @classmethod
    def gen(cls, n: int, i: int, j: int, e: int = 1) -> RaagWord:
        return cls(n, (((i, j), e),))

    @classmethod
    def identity(cls, n: int) -> RaagWord:
        return cls(n)

    @classmethod
    def from_letters(cls, n: int, letters: Iterable[tuple[Vertex, int]]) -> RaagWord:
        """Group a letter sequence into syllables, merging equal neighbours."""
        out: list[list] = []
        for v, e in letters:
            if out and out[-1][0] == v:
                out[-1][1] += e
                if out[-1][1] == 0:
                    out.pop()
            else:
                out.append([v, e])
        return cls(n, tuple((v, e) for v, e in out))

    @classmethod
    def parse(cls, text: str, n: int) -> RaagWord:
        return parse_raag(text, n)

    def letters(self) -> list[tuple[Vertex, int]]:
        out = []
        for v, e in self.syllables:
            step = 1 if e > 0 else -1
            out.extend([(v, step)] * abs(e))
        return out

    def inverse(self) -> RaagWord:
        return RaagWord(self.n, tuple((v, -e) for v, e in reversed(self.syllables)))

    def __mul__(self, other: RaagWord) -> RaagWord:
        if other.n != self.n:
            raise InvalidInput(f"strand mismatch: {self.n} vs {other.n}")
        return RaagWord.from_letters(self.n, self.letters() + other.letters())

    def __pow__(self, k: int) -> RaagWord:
        base = self if k >= 0 else self.inverse()
        return RaagWord.from_letters(self.n, base.letters() * abs(k))

    def __len__(self):
        return sum(abs(e) for _, e in self.syllables)

    def is_identity(self) -> bool:
        return not self.syllables

    def with_strands(self, n: int) -> RaagWord:
        return RaagWord(n, self.syllables)

    def __str__(self):
        parts = []
        for (i, j), e in self.syllables:
            parts.append(f"L{i}.{j}" + ("" if e == 1 else f"^{e}"))
        return " ".join(parts)


_TOKEN = re.compile(r"\S+")
_LAMBDA = re.compile(r"L([0-9]+)\.([0-9]+)(?:\^(-?[0-9]+))?")


def parse_raag(text: str, n: int) -> RaagWord:
    syl = []
    for m in _TOKEN.finditer(text):
        lm = _LAMBDA.fullmatch(m.group())
        if lm is None:
            raise WordParseError(f"bad token {m.group()!r}", text, m.start())
        i, j = int(lm.group(1)), int(lm.group(2))
        e = int(lm.group(3)) if lm.group(3) is not None else 1
        if not 1 <= i < j <= n:
            raise WordParseError(f"generator L{i}.{j} invalid for n={n}", text, m.start())
        if e == 0:
            raise WordParseError("zero exponent", text, m.start())
        syl.append(((i, j), e))
    return RaagWord.from_letters(n, syl)


def normal_form(w: RaagWord) -> RaagWord:
    """Reduced, lexicographically least representative of w.

    Equal group elements give identical results.
    """
    n = w.n
    block = _blockers(n)
    piles: dict[Vertex, deque] = {v: deque() for v in vertices(n)}
    for v, e in w.letters():
        pile = piles[v]
        if pile and pile[-1] == -e:
            # nothing non-commuting arrived since the last v, so it cancels;
            # tiles above it on other piles are interchangeable zeros
            pile.pop()
            for u in block[v]:
                piles[u].pop()
        else:
            pile.append(e)
            for u in block[v]:
                piles[u].append(0)
    order = vertices(n)
    out = []
    while True:
        for v in order:
            p = piles[v]
            if p and p[0] != 0:
                break
        else:
            break
        out.append((v, p.popleft()))
        for u in block[v]:
            piles[u].popleft()
    return RaagWord.from_letters(n, out)


def raag_equal(u: RaagWord, v: RaagWord) -> bool:
    if u.n != v.n:
        raise InvalidInput(f"strand mismatch: {u.n} vs {v.n}")
    return normal_form(u) == normal_form(v)


def is_trivial(w: RaagWord) -> bool:
    return normal_form(w).is_identity()


def commutes_with(u: RaagWord, v: RaagWord) -> bool:
    return raag_equal(u * v, v * u)


@dataclass(frozen=True)
class AbelianImage:
    n: int
    vector: tuple[int, ...]  # indexed by vertices(n)

    def __add__(self, other: AbelianImage) -> AbelianImage:
        return AbelianImage(self.n, tuple(a + b for a, b in zip(self.vector, other.vector)))

    def __getitem__(self, v: Vertex) -> int:
        return self.vector[vertices(self.n).index(v)]

    def is_zero(self) -> bool:
        return not any(self.vector)


def abelianize(w: RaagWord) -> AbelianImage:
    vs = vertices(w.n)
    pos = {v: k for k, v in enumerate(vs)}
    vec = [0] * len(vs)
    for v, e in w.syllables:
        vec[pos[v]] += e
    return AbelianImage(w.n, tuple(vec))


def lambda_vword(n: int, i: int, j: int) -> list[VGen]:
    """rho_{j-1} ... rho_{i+1} s_i rho_i rho_{i+1} ... rho_{j-1}."""
    down = [r(k) for k in range(j - 1, i, -1)]
    return down + [s(i), r(i)] + down[::-1]


def expand_to_vtn(w: RaagWord) -> VWord:
    letters: list[VGen] = []
    for (i, j), e in w.syllables:
        base = lambda_vword(w.n, i, j)
        if e < 0:
            base = base[::-1]
        letters.extend(base * abs(e))
    return free_reduce(VWord(w.n, tuple(letters)))
