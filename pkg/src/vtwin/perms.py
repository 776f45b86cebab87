"""The projection VT_n -> S_n, the Schreier transversal and the S_n action on lambda letters.

Composition convention: the leftmost letter acts first.  A permutation is a
row of images ``(sigma(1), ..., sigma(n))`` and ``sigma * tau`` means "apply
sigma, then tau".  With this convention ``pi_image`` is a homomorphism.

Conjugating lambda_{a,b} by a rho-word mu transports its index pair by
``pi_image(mu)^-1``; ``act`` is defined that way so that
``act(pi_image(mu), x)`` is exactly ``mu x mu^-1``.
"""

from __future__ import annotations

import itertools
import math
import re
from collections import deque
from dataclasses import dataclass

from .errors import NotApplicable, WordParseError
from .words import R, VWord


@dataclass(frozen=True)
class Perm:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Perm:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int | None = None) -> Perm:
        """The transposition (a b); with one argument, the adjacent (a a+1)."""
        if b is None:
            b = a + 1
        im = list(range(1, n + 1))
        im[a - 1], im[b - 1] = b, a
        return cls(tuple(im))

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: Perm) -> Perm:
        if other.n != self.n:
            raise ValueError("degree mismatch")
        return Perm(tuple(other.images[x - 1] for x in self.images))

    def inverse(self) -> Perm:
        inv = [0] * self.n
        for x, y in enumerate(self.images, 1):
            inv[y - 1] = x
        return Perm(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.images, 1))

    def is_even(self) -> bool:
        return (self.n - len(self.cycles(include_fixed=True))) % 2 == 0

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def __str__(self):
        return "[" + ",".join(map(str, self.images)) + "]"

    def cycle_str(self) -> str:
        cs = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cs) or "()"


_ONE_LINE = re.compile(r"\[\s*([0-9]+(?:\s*,\s*[0-9]+)*)?\s*\]")
_CYCLE = re.compile(r"\(\s*([0-9]+(?:\s+[0-9]+)*)?\s*\)")


def parse_perm(text: str, n: int | None = None) -> Perm:
    """Parse ``[3,1,2]`` or cycle notation such as ``(1 3 2)(4 5)``.

    Cycle notation needs ``n`` unless the largest moved point is the degree.
    """
    t = text.strip()
    m = _ONE_LINE.fullmatch(t)
    if m:
        imgs = tuple(int(x) for x in re.findall(r"[0-9]+", t))
        try:
            p = Perm(imgs)
        except ValueError as e:
            raise WordParseError(str(e), text, 0) from None
        if n is not None and p.n != n:
            raise WordParseError(f"expected degree {n}, got {p.n}", text, 0)
        return p
    pos = 0
    cycles = []
    while pos < len(t):
        if t[pos].isspace():
            pos += 1
            continue
        m = _CYCLE.match(t, pos)
        if m is None:
            raise WordParseError("expected '(' or '['", text, pos)
        cycles.append((pos, [int(x) for x in (m.group(1) or "").split()]))
        pos = m.end()
    moved = [x for _, c in cycles for x in c]
    deg = n if n is not None else max(moved, default=1)
    im = list(range(1, deg + 1))
    seen: set[int] = set()
    for at, c in cycles:
        if any(x < 1 or x > deg for x in c) or len(set(c)) != len(c) or seen & set(c):
            raise WordParseError("invalid cycle", text, at)
        seen |= set(c)
        for a, b in zip(c, c[1:] + c[:1]):
            im[a - 1] = b
    return Perm(tuple(im))


def pi_image(w: VWord) -> Perm:
    """Image of a VT_n word in S_n; s_i and rho_i both go to (i i+1)."""
    pos = list(range(w.strands + 1))  # pos[x] = current image of x
    where = list(range(w.strands + 1))  # inverse of pos
    for g in w.letters:
        a, b = g.index, g.index + 1
        xa, xb = where[a], where[b]
        pos[xa], pos[xb] = b, a
        where[a], where[b] = xb, xa
    return Perm(tuple(pos[1:]))


@dataclass(frozen=True, order=True)
class SignedLambda:
    i: int
    j: int
    sign: int = 1

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise ValueError(f"need 1 <= i < j, got ({self.i}, {self.j})")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @classmethod
    def from_ordered(cls, a: int, b: int) -> SignedLambda:
        """lambda_{a,b} for a < b, and lambda_{b,a}^-1 when a > b."""
        if a == b:
            raise ValueError("indices must differ")
        return cls(a, b, 1) if a < b else cls(b, a, -1)

    def ordered(self) -> tuple[int, int]:
        return (self.i, self.j) if self.sign == 1 else (self.j, self.i)

    @property
    def vertex(self) -> tuple[int, int]:
        return (self.i, self.j)

    def inverse(self) -> SignedLambda:
        return SignedLambda(self.i, self.j, -self.sign)

    def __str__(self):
        return f"L{self.i}.{self.j}" + ("" if self.sign == 1 else "^-1")


def act(sigma: Perm, x: SignedLambda) -> SignedLambda:
    """Conjugation action of S_n on signed lambda letters."""
    if x.j > sigma.n:
        raise ValueError(f"{x} does not live on {sigma.n} strands")
    a, b = x.ordered()
    inv = sigma.inverse()
    return SignedLambda.from_ordered(inv(a), inv(b))


def all_signed_lambdas(n: int) -> list[SignedLambda]:
    return [SignedLambda(i, j, e) for i in range(1, n + 1) for j in range(i + 1, n + 1) for e in (1, -1)]


def lambda_orbit(n: int, x: SignedLambda | None = None) -> set[SignedLambda]:
    """Orbit of x (default lambda_{1,2}) under the adjacent transpositions."""
    x = x or SignedLambda(1, 2)
    gens = [Perm.transposition(n, k) for k in range(1, n)]
    seen = {x}
    todo = deque([x])
    while todo:
        y = todo.popleft()
        for t in gens:
            z = act(t, y)
            if z not in seen:
                seen.add(z)
                todo.append(z)
    return seen


# --- Schreier transversal M_n -------------------------------------------------


@dataclass(frozen=True)
class SchreierTuple:
    n: int
    indices: tuple[int, ...]  # (i_1, ..., i_{n-1}) with 0 <= i_k <= k

    def __post_init__(self):
        idx = tuple(self.indices)
        if len(idx) != self.n - 1 or any(not 0 <= i <= k for k, i in enumerate(idx, 1)):
            raise ValueError(f"invalid Schreier tuple {idx} for n={self.n}")
        object.__setattr__(self, "indices", idx)


def _block(k: int, i: int) -> list[int]:
    # m_{k,i} = rho_k rho_{k-1} ... rho_{i+1}; empty when i == k
    return list(range(k, i, -1))


def schreier_word(t: SchreierTuple) -> VWord:
    letters = [(R, a) for k, i in enumerate(t.indices, 1) for a in _block(k, i)]
    return VWord(t.n, tuple(letters))


def schreier_tuple(sigma: Perm) -> SchreierTuple:
    """The unique transversal tuple whose word maps to sigma.

    The last block m_{n-1,i} is the only one that moves n, sending it to i+1,
    so i_{n-1} = sigma(n) - 1; strip that block off and recurse on n-1.
    """
    n = sigma.n
    cur = sigma
    idx = [0] * (n - 1)
    for k in range(n - 1, 0, -1):
        i = cur(k + 1) - 1
        idx[k - 1] = i
        block = Perm.identity(n)
        for a in _block(k, i):
            block = block * Perm.transposition(n, a)
        cur = cur * block.inverse()
    assert cur.is_identity()
    return SchreierTuple(n, tuple(idx))


def all_schreier_tuples(n: int):
    for idx in itertools.product(*(range(k + 1) for k in range(1, n))):
        yield SchreierTuple(n, idx)


# --- diagonal action on commuting pairs ----------------------------------------


@dataclass(frozen=True)
class DiagonalReport:
    n: int
    pair_count: int
    orbit_count: int
    stabiliser_size: int

    @property
    def expected_stabiliser(self) -> int:
        return math.factorial(self.n - 4)


def diagonal_orbit_check(n: int) -> DiagonalReport:
    """Orbits of S_n on ordered pairs of signed lambdas with disjoint indices."""
    if n < 4:
        raise NotApplicable("disjoint index pairs need n >= 4")
    lams = all_signed_lambdas(n)
    pairs = [(x, y) for x in lams for y in lams if not {x.i, x.j} & {y.i, y.j}]
    gens = [Perm.transposition(n, k) for k in range(1, n)]
    parent = {p: p for p in pairs}

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    for x, y in pairs:
        for t in gens:
            q = (act(t, x), act(t, y))
            a, b = find((x, y)), find(q)
            if a != b:
                parent[a] = b
    orbits = len({find(p) for p in pairs})
    base = (SignedLambda(1, 2), SignedLambda(n - 1, n))
    stab = 0
    for im in itertools.permutations(range(1, n + 1)):
        sigma = Perm(im)
        if (act(sigma, base[0]), act(sigma, base[1])) == base:
            stab += 1
    return DiagonalReport(n, len(pairs), orbits, stab)


def generated_subgroup(gens: list[Perm]) -> set[Perm]:
    """Closure of a set of permutations under multiplication."""
    if not gens:
        return set()
    e = Perm.identity(gens[0].n)
    seen = {e}
    todo = deque([e])
    while todo:
        p = todo.popleft()
        for g in gens:
            q = p * g
            if q not in seen:
                seen.add(q)
                todo.append(q)
    return seen
