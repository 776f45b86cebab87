"""Endomorphisms of PVT_n: strand deletion/inclusion and the generator families of Aut(PVT_n).

An endomorphism is given by the image of every generator.  ``compose(e1, e2)``
is e1 after e2.  Automorphism status is never decided in general: a family
constructor attaches its known inverse, composition composes inverses, and
``is_automorphism`` checks both composites against the identity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .errors import DominationViolation, InvalidInput, InvalidStrandCount, NotAComponentUnion
from .graph import components_minus_star, dominates, graph_automorphisms
from .perms import Perm, SignedLambda, act
from .raag import RaagWord, Vertex, normal_form, parse_raag, vertices


# --- strand deletion and inclusion ---------------------------------------------


def f_map(n: int, w: RaagWord) -> RaagWord:
    """Forget the n-th strand: drop every lambda_{i,n} syllable."""
    if n < 3:
        raise InvalidStrandCount("f_map needs n >= 3")
    if w.n != n:
        raise InvalidInput(f"word lives on {w.n} strands, expected {n}")
    return normal_form(RaagWord.from_letters(n - 1, [(v, e) for v, e in w.syllables if v[1] != n]))


def include(n: int, w: RaagWord) -> RaagWord:
    """Add a strand on the right: PVT_{n-1} -> PVT_n."""
    if w.n != n - 1:
        raise InvalidInput(f"word lives on {w.n} strands, expected {n - 1}")
    return w.with_strands(n)


def u_generator(n: int, mu: RaagWord, i: int) -> RaagWord:
    """mu lambda_{i,n} mu^-1 for mu in PVT_{n-1}; lies in the kernel of f_map."""
    if not 1 <= i <= n - 1:
        raise InvalidInput(f"need 1 <= i <= {n - 1}")
    m = include(n, mu)
    return normal_form(m * RaagWord.gen(n, i, n) * m.inverse())


def alpha(n: int, eps: int) -> RaagWord:
    """lambda_{n-2,n-1}^-eps lambda_{n-1,n} lambda_{n-2,n-1}^eps."""
    c = RaagWord.gen(n, n - 2, n - 1, eps) if eps else RaagWord.identity(n)
    return normal_form(c.inverse() * RaagWord.gen(n, n - 1, n) * c)


# --- endomorphisms ----------------------------------------------------------------


@dataclass(frozen=True)
class GroupEndo:
    n: int
    images: Mapping[Vertex, RaagWord]
    inverse_images: Mapping[Vertex, RaagWord] | None = field(default=None, compare=False)
    name: str = field(default="", compare=False)

    def __post_init__(self):
        imgs = {tuple(v): normal_form(w) for v, w in self.images.items()}
        if set(imgs) != set(vertices(self.n)):
            raise InvalidInput("images must cover every generator exactly once")
        if any(w.n != self.n for w in imgs.values()):
            raise InvalidInput("images must live on the same strand count")
        object.__setattr__(self, "images", imgs)
        if self.inverse_images is not None:
            inv = {tuple(v): normal_form(w) for v, w in self.inverse_images.items()}
            object.__setattr__(self, "inverse_images", inv)

    def __call__(self, w: RaagWord) -> RaagWord:
        return endo_apply(self, w)

    def __eq__(self, other):
        return isinstance(other, GroupEndo) and endo_equal(self, other)

    def __hash__(self):
        return hash((self.n, tuple(sorted((v, w.syllables) for v, w in self.images.items()))))

    @cached_property
    def is_automorphism(self) -> bool:
        if self.inverse_images is None:
            return False
        inv = GroupEndo(self.n, self.inverse_images)
        ident = identity_endo(self.n)
        return endo_equal(endo_compose(self, inv), ident) and endo_equal(endo_compose(inv, self), ident)

    def inverse(self) -> GroupEndo:
        if not self.is_automorphism:
            raise InvalidInput(f"no certified inverse for {self.name or 'endomorphism'}")
        return GroupEndo(self.n, self.inverse_images, self.images, f"({self.name})^-1" if self.name else "")

    def __str__(self):
        return format_endo(self)


def endo_apply(e: GroupEndo, w: RaagWord) -> RaagWord:
    if w.n != e.n:
        raise InvalidInput(f"strand mismatch: {e.n} vs {w.n}")
    letters = []
    for v, k in w.syllables:
        img = e.images[v]
        letters.extend((img if k > 0 else img.inverse()).letters() * abs(k))
    return normal_form(RaagWord.from_letters(e.n, letters))


def endo_compose(e1: GroupEndo, e2: GroupEndo) -> GroupEndo:
    """e1 after e2."""
    if e1.n != e2.n:
        raise InvalidInput(f"strand mismatch: {e1.n} vs {e2.n}")
    imgs = {v: endo_apply(e1, w) for v, w in e2.images.items()}
    inv = None
    if e1.inverse_images is not None and e2.inverse_images is not None:
        i1 = GroupEndo(e1.n, e1.inverse_images)
        inv = {v: endo_apply(GroupEndo(e2.n, e2.inverse_images), w) for v, w in i1.images.items()}
    name = f"{e1.name}{e2.name}" if e1.name and e2.name else ""
    return GroupEndo(e1.n, imgs, inv, name)


def compose_all(*es: GroupEndo) -> GroupEndo:
    out = es[0]
    for e in es[1:]:
        out = endo_compose(out, e)
    return out


def endo_equal(e1: GroupEndo, e2: GroupEndo) -> bool:
    if e1.n != e2.n:
        raise InvalidInput(f"strand mismatch: {e1.n} vs {e2.n}")
    return all(e1.images[v] == e2.images[v] for v in vertices(e1.n))


def endo_power(e: GroupEndo, k: int) -> GroupEndo:
    base = e if k >= 0 else e.inverse()
    out = identity_endo(e.n)
    for _ in range(abs(k)):
        out = endo_compose(out, base)
    return out


def endo_commutator(a: GroupEndo, b: GroupEndo) -> GroupEndo:
    """[a, b] = a^-1 b^-1 a b."""
    return compose_all(a.inverse(), b.inverse(), a, b)


def _gen(n: int, v: Vertex, e: int = 1) -> RaagWord:
    return RaagWord.gen(n, v[0], v[1], e)


def identity_endo(n: int) -> GroupEndo:
    imgs = {v: _gen(n, v) for v in vertices(n)}
    return GroupEndo(n, imgs, imgs, "id")


def from_vertex_map(n: int, f: Mapping[Vertex, Vertex], name: str = "") -> GroupEndo:
    """Graph automorphism induced by a vertex bijection."""
    inv = {w: v for v, w in f.items()}
    return GroupEndo(n, {v: _gen(n, f[v]) for v in vertices(n)}, {v: _gen(n, inv[v]) for v in vertices(n)}, name)


def _check_vertex(n: int, v) -> Vertex:
    v = tuple(v)
    if v not in vertices(n):
        raise InvalidInput(f"{v} is not a generator for n={n}")
    return v


def inversion(n: int, v: Vertex) -> GroupEndo:
    v = _check_vertex(n, v)
    imgs = {u: _gen(n, u, -1 if u == v else 1) for u in vertices(n)}
    return GroupEndo(n, imgs, imgs, f"i[{v[0]}.{v[1]}]")


def inner(n: int, g: RaagWord) -> GroupEndo:
    """x -> g^-1 x g."""
    if g.n != n:
        raise InvalidInput("conjugator lives on a different strand count")
    gi = g.inverse()
    imgs = {u: gi * _gen(n, u) * g for u in vertices(n)}
    inv = {u: g * _gen(n, u) * gi for u in vertices(n)}
    return GroupEndo(n, imgs, inv, f"inn[{g}]")


def partial_conj(n: int, v: Vertex, comp: Iterable[Vertex]) -> GroupEndo:
    """Conjugate every generator in comp by v: a -> v^-1 a v.

    comp must be a union of components of the graph minus st(v).
    """
    v = _check_vertex(n, v)
    comp = frozenset(tuple(c) for c in comp)
    parts = components_minus_star(n, v)
    covered = frozenset().union(*(p for p in parts if p & comp)) if comp else frozenset()
    if covered != comp:
        raise NotAComponentUnion(f"{sorted(comp)} is not a union of components of Gamma - st({v})")
    g = _gen(n, v)
    gi = g.inverse()
    imgs = {u: (gi * _gen(n, u) * g if u in comp else _gen(n, u)) for u in vertices(n)}
    inv = {u: (g * _gen(n, u) * gi if u in comp else _gen(n, u)) for u in vertices(n)}
    return GroupEndo(n, imgs, inv, f"p[{v[0]}.{v[1]}]")


def transvection(n: int, a: Vertex, b: Vertex) -> GroupEndo:
    """a -> a b, requires lk(a) within st(b)."""
    a, b = _check_vertex(n, a), _check_vertex(n, b)
    if a == b or not dominates(n, a, b):
        raise DominationViolation(f"L{a[0]}.{a[1]} is not dominated by L{b[0]}.{b[1]}")
    imgs = {u: (_gen(n, a) * _gen(n, b) if u == a else _gen(n, u)) for u in vertices(n)}
    inv = {u: (_gen(n, a) * _gen(n, b, -1) if u == a else _gen(n, u)) for u in vertices(n)}
    return GroupEndo(n, imgs, inv, f"t[{a[0]}.{a[1]},{b[0]}.{b[1]}]")


def perm_auto(sigma: Perm) -> GroupEndo:
    """phi(sigma): conjugation by a rho-word with permutation sigma."""
    n = sigma.n

    def images(p):
        out = {}
        for v in vertices(n):
            x = act(p, SignedLambda(*v))
            out[v] = RaagWord.gen(n, x.i, x.j, x.sign)
        return out

    return GroupEndo(n, images(sigma), images(sigma.inverse()), f"phi{sigma}")


def theta(n: int, k: int) -> GroupEndo:
    """The graph automorphism swapping indices k and k+1 and fixing lambda_{k,k+1}."""
    if not 1 <= k <= n - 1:
        raise InvalidInput(f"need 1 <= k <= {n - 1}")
    t = Perm.transposition(n, k)
    f = {}
    for v in vertices(n):
        a, b = sorted((t(v[0]), t(v[1])))
        f[v] = (a, b)
    return from_vertex_map(n, f, f"th{k}")


# --- text form ---------------------------------------------------------------


def format_endo(e: GroupEndo) -> str:
    return "\n".join(f"L{v[0]}.{v[1]} -> {e.images[v]}" for v in vertices(e.n))


def parse_endo(text: str, n: int) -> GroupEndo:
    """Parse ``L<i>.<j> -> <word>`` lines; unmentioned generators are fixed."""
    imgs = {v: _gen(n, v) for v in vertices(n)}
    seen = set()
    for line in text.splitlines():
        if not line.strip():
            continue
        lhs, sep, rhs = line.partition("->")
        if not sep:
            raise InvalidInput(f"missing '->' in {line!r}")
        src = parse_raag(lhs, n)
        if len(src.syllables) != 1 or src.syllables[0][1] != 1:
            raise InvalidInput(f"left side must be a single generator: {lhs!r}")
        v = src.syllables[0][0]
        if v in seen:
            raise InvalidInput(f"generator {lhs.strip()} mapped twice")
        seen.add(v)
        imgs[v] = parse_raag(rhs, n)
    return GroupEndo(n, imgs)


# --- PVT_4 ------------------------------------------------------------------


PVT4_BASE_DICTIONARY = {
    "x1": (1, 2), "y1": (3, 4),
    "x2": (1, 3), "y2": (2, 4),
    "x3": (1, 4), "y3": (2, 3),
}


def pvt4_dictionaries() -> list[dict[str, Vertex]]:
    """The base x_i/y_i naming transported by every graph automorphism of PVT_4."""
    out = []
    for f in graph_automorphisms(4):
        d = {k: f[v] for k, v in PVT4_BASE_DICTIONARY.items()}
        if d not in out:
            out.append(d)
    return out


class PVT4:
    """The x_i, y_i generator families of Aut(PVT_4) under a fixed naming of the generators."""

    def __init__(self, dictionary: Mapping[str, Vertex] | None = None):
        self.d = dict(dictionary or PVT4_BASE_DICTIONARY)
        if sorted(self.d.values()) != list(vertices(4)):
            raise InvalidInput("dictionary must name every generator of PVT_4 once")
        for i in (1, 2, 3):
            if not dominates(4, self.d[f"x{i}"], self.d[f"y{i}"]):
                raise InvalidInput(f"x{i}, y{i} must span an edge")

    def g(self, name: str) -> RaagWord:
        return _gen(4, self.d[name])

    def _swap(self, pairs, name) -> GroupEndo:
        f = {v: v for v in vertices(4)}
        for a, b in pairs:
            f[self.d[a]], f[self.d[b]] = self.d[b], self.d[a]
        return from_vertex_map(4, f, name)

    def sigma(self, i: int) -> GroupEndo:
        return self._swap([(f"x{i}", f"y{i}")], f"s{i}")

    def psi(self, k: int) -> GroupEndo:
        a, b = (1, 2) if k == 1 else (2, 3)
        return self._swap([(f"x{a}", f"x{b}"), (f"y{a}", f"y{b}")], f"psi{k}")

    def iota(self, name: str) -> GroupEndo:
        return inversion(4, self.d[name])

    def tau(self, a: str, b: str) -> GroupEndo:
        return transvection(4, self.d[a], self.d[b])

    def p(self, name: str, *components: int) -> GroupEndo:
        comp = set()
        for c in components:
            comp |= {self.d[f"x{c}"], self.d[f"y{c}"]}
        return partial_conj(4, self.d[name], comp)

    def inner(self, name: str) -> GroupEndo:
        return inner(4, self.g(name))


def generated_group(gens: list[GroupEndo], limit: int = 10_000) -> list[GroupEndo]:
    """Closure of finitely many finite-order automorphisms (used for graph automorphism groups)."""
    n = gens[0].n
    seen = [identity_endo(n)]
    keys = {hash(seen[0])}
    frontier = list(seen)
    while frontier:
        nxt = []
        for a, g in itertools.product(frontier, gens):
            c = endo_compose(a, g)
            h = hash(c)
            if h in keys and any(endo_equal(c, x) for x in seen):
                continue
            keys.add(h)
            seen.append(c)
            nxt.append(c)
            if len(seen) > limit:
                raise RuntimeError("group closure exceeded limit")
        frontier = nxt
    return seen
