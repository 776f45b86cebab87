"""Words over the generators s_i, rho_i of the virtual twin group VT_n.

Every generator is an involution, so a word is just a sequence of letters
without exponents and the inverse of a word is its reversal.

Text form: whitespace separated tokens ``s<i>`` and ``r<i>``, e.g. ``"s1 r2 s1"``.
The empty string is the identity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .config import DEFAULT
from .errors import InvalidStrandCount, WordParseError

S = "S"
R = "R"


class VGen(NamedTuple):
    kind: str  # S or R
    index: int

    def __str__(self):
        return f"{'s' if self.kind == S else 'r'}{self.index}"


def s(i: int) -> VGen:
    return VGen(S, i)


def r(i: int) -> VGen:
    return VGen(R, i)


def _check_strands(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise InvalidStrandCount(f"strand count must be an integer >= 2, got {n!r}")
    if n > DEFAULT.max_n:
        raise InvalidStrandCount(f"strand count {n} exceeds configured maximum {DEFAULT.max_n}")


@dataclass(frozen=True)
class VWord:
    strands: int
    letters: tuple[VGen, ...] = ()

    def __post_init__(self):
        _check_strands(self.strands)
        letters = tuple(VGen(*g) for g in self.letters)
        for g in letters:
            if g.kind not in (S, R) or not 1 <= g.index <= self.strands - 1:
                raise ValueError(f"letter {g} out of range for n={self.strands}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text: str, n: int) -> VWord:
        return parse_word(text, n)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: VWord) -> VWord:
        return concat(self, other)

    def __pow__(self, k: int) -> VWord:
        base = self if k >= 0 else invert(self)
        return VWord(self.strands, base.letters * abs(k))

    def __str__(self):
        return " ".join(map(str, self.letters))

    def is_empty(self) -> bool:
        return not self.letters


_TOKEN = re.compile(r"\S+")
_LETTER = re.compile(r"([sr])([0-9]+)")


def parse_word(text: str, n: int) -> VWord:
    """Parse ``"s1 r2 s1"`` into a word on ``n`` strands."""
    _check_strands(n)
    letters = []
    for m in _TOKEN.finditer(text):
        tok = m.group()
        lm = _LETTER.fullmatch(tok)
        if lm is None:
            raise WordParseError(f"bad token {tok!r}", text, m.start())
        i = int(lm.group(2))
        if not 1 <= i <= n - 1:
            raise WordParseError(f"index {i} out of range 1..{n - 1}", text, m.start())
        letters.append(VGen(S if lm.group(1) == "s" else R, i))
    return VWord(n, tuple(letters))


def format_word(w: VWord) -> str:
    return str(w)


def word(n: int, letters: Iterable[VGen] | str = ()) -> VWord:
    if isinstance(letters, str):
        return parse_word(letters, n)
    return VWord(n, tuple(letters))


def concat(*words: VWord) -> VWord:
    if not words:
        raise ValueError("concat needs at least one word")
    n = words[0].strands
    for w in words[1:]:
        if w.strands != n:
            raise ValueError(f"strand mismatch: {n} vs {w.strands}")
    return VWord(n, tuple(g for w in words for g in w.letters))


def free_reduce(w: VWord) -> VWord:
    """Cancel adjacent equal letters until none remain."""
    stack: list[VGen] = []
    for g in w.letters:
        if stack and stack[-1] == g:
            stack.pop()
        else:
            stack.append(g)
    return VWord(w.strands, tuple(stack))


def invert(w: VWord) -> VWord:
    return VWord(w.strands, w.letters[::-1])


def commutator(a: VWord, b: VWord) -> VWord:
    """[a, b] = a^-1 b^-1 a b."""
    return concat(invert(a), invert(b), a, b)


@dataclass(frozen=True)
class RelatorSet:
    strands: int
    relators: tuple[VWord, ...]
    families: tuple[str, ...]  # one family label per relator

    def __iter__(self):
        return iter(self.relators)

    def __len__(self):
        return len(self.relators)

    def by_family(self, family: str) -> list[VWord]:
        return [w for w, f in zip(self.relators, self.families) if f == family]


RELATOR_FAMILIES = (
    "s-involution",
    "s-far-commute",
    "r-involution",
    "r-far-commute",
    "r-braid",
    "mixed-far-commute",
    "mixed-twist",
)


def defining_relators(n: int) -> RelatorSet:
    """All instances of the defining relations of VT_n, each written as a relator.

    The twisted relation rho_i rho_{i+1} s_i = s_{i+1} rho_i rho_{i+1} is moved
    to one side as ``r_i r_{i+1} s_i r_{i+1} r_i s_{i+1}``.
    """
    _check_strands(n)
    idx = range(1, n)
    out: list[tuple[str, list[VGen]]] = []
    out += [("s-involution", [s(i), s(i)]) for i in idx]
    out += [("s-far-commute", [s(i), s(j), s(i), s(j)]) for i in idx for j in idx if j - i >= 2]
    out += [("r-involution", [r(i), r(i)]) for i in idx]
    out += [("r-far-commute", [r(i), r(j), r(i), r(j)]) for i in idx for j in idx if j - i >= 2]
    out += [("r-braid", [r(i), r(i + 1)] * 3) for i in range(1, n - 1)]
    out += [("mixed-far-commute", [r(i), s(j), r(i), s(j)]) for i in idx for j in idx if abs(i - j) >= 2]
    out += [("mixed-twist", [r(i), r(i + 1), s(i), r(i + 1), r(i), s(i + 1)]) for i in range(1, n - 1)]
    return RelatorSet(
        n,
        tuple(VWord(n, tuple(ls)) for _, ls in out),
        tuple(f for f, _ in out),
    )


def parity(w: VWord) -> tuple[int, int]:
    """Image in the abelianization Z_2 x Z_2: (number of s letters, number of rho letters) mod 2."""
    ns = sum(1 for g in w.letters if g.kind == S)
    return ns % 2, (len(w.letters) - ns) % 2
