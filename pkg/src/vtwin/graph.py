"""The defining graph of PVT_n and the graph predicates that control Aut(PVT_n).

Vertices are pairs (i, j), i < j; (i, j) -- (k, l) is an edge iff the four
indices are distinct.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .config import DEFAULT
from .errors import InvalidInput, ResourceLimit
from .raag import Vertex, vertices


@dataclass(frozen=True)
class DefGraph:
    n: int
    vertices: tuple[Vertex, ...]
    adjacency: Mapping[Vertex, frozenset]

    def link(self, v: Vertex) -> frozenset:
        return self.adjacency[v]

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[Vertex, Vertex]]:
        return [(u, v) for u in self.vertices for v in self.vertices if u < v and v in self.adjacency[u]]

    def degree(self, v: Vertex) -> int:
        return len(self.adjacency[v])


@lru_cache(maxsize=None)
def defining_graph(n: int) -> DefGraph:
    if n < 2:
        raise InvalidInput("n must be >= 2")
    vs = vertices(n)
    adj = {v: frozenset(u for u in vs if not set(u) & set(v)) for v in vs}
    return DefGraph(n, vs, adj)


def _check_vertex(n: int, v: Vertex) -> Vertex:
    v = tuple(v)
    if len(v) != 2 or not 1 <= v[0] < v[1] <= n:
        raise InvalidInput(f"{v} is not a vertex for n={n}")
    return v


def link(n: int, v: Vertex) -> frozenset:
    return defining_graph(n).link(_check_vertex(n, v))


def star(n: int, v: Vertex) -> frozenset:
    v = _check_vertex(n, v)
    return defining_graph(n).link(v) | {v}


def non_neighbors(n: int, v: Vertex) -> frozenset:
    """N_{i,j}: generators that do not commute with v."""
    return frozenset(vertices(n)) - star(n, v)


def dominates(n: int, v: Vertex, w: Vertex) -> bool:
    """v <= w, i.e. lk(v) is contained in st(w): the transvection v -> vw exists."""
    v, w = _check_vertex(n, v), _check_vertex(n, w)
    if v == w:
        raise InvalidInput("domination needs distinct vertices")
    return link(n, v) <= star(n, w)


def dominating_pairs(n: int) -> list[tuple[Vertex, Vertex]]:
    vs = vertices(n)
    return [(v, w) for v in vs for w in vs if v != w and dominates(n, v, w)]


def _components(adj: Mapping, keep) -> list[frozenset]:
    keep = set(keep)
    seen: set = set()
    comps = []
    for start in sorted(keep):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in keep and y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def components_minus_star(n: int, v: Vertex) -> list[frozenset]:
    """Connected components of the subgraph induced on S minus st(v)."""
    return _components(defining_graph(n).adjacency, non_neighbors(n, v))


def complement_connected(n: int) -> bool:
    """Connectivity of the complement graph (irreducibility of the RAAG)."""
    g = defining_graph(n)
    vs = set(g.vertices)
    co = {v: frozenset(vs - g.link(v) - {v}) for v in g.vertices}
    return len(_components(co, vs)) == 1


# --- chordality ----------------------------------------------------------------


def max_cardinality_search(adj: Mapping) -> list:
    """Maximum cardinality search order; its reverse is a PEO iff the graph is chordal."""
    weight = {v: 0 for v in adj}
    order = []
    remaining = set(adj)
    while remaining:
        # ties broken by vertex order for determinism
        v = max(sorted(remaining), key=lambda x: weight[x])
        order.append(v)
        remaining.remove(v)
        for u in adj[v]:
            if u in remaining:
                weight[u] += 1
    return order


def is_perfect_elimination_order(adj: Mapping, order: list) -> bool:
    """Each vertex's later neighbours form a clique."""
    pos = {v: k for k, v in enumerate(order)}
    for v in order:
        later = [u for u in adj[v] if pos[u] > pos[v]]
        if not later:
            continue
        # enough to check the earliest later neighbour is adjacent to the rest
        first = min(later, key=pos.__getitem__)
        if any(u != first and u not in adj[first] for u in later):
            return False
    return True


def is_chordal_graph(adj: Mapping) -> bool:
    order = max_cardinality_search(adj)
    return is_perfect_elimination_order(adj, order[::-1])


def is_chordal(n: int) -> bool:
    return is_chordal_graph(defining_graph(n).adjacency)


# --- automorphisms ---------------------------------------------------------------


def _signature(g: DefGraph, v: Vertex) -> tuple:
    lk = g.link(v)
    common = sorted(len(lk & g.link(u)) for u in g.vertices if u != v)
    return (len(lk), tuple(common))


def graph_automorphisms(n: int, limit: int | None = None) -> list[dict[Vertex, Vertex]]:
    """All adjacency-preserving bijections of the vertex set, by backtracking."""
    limit = DEFAULT.max_aut_n if limit is None else limit
    if n > limit:
        raise ResourceLimit(f"automorphism enumeration capped at n={limit}")
    g = defining_graph(n)
    sig = {v: _signature(g, v) for v in g.vertices}
    # BFS order keeps each new vertex adjacent to something already placed
    order: list[Vertex] = []
    for v in g.vertices:
        if v in order:
            continue
        order.append(v)
        k = len(order) - 1
        while k < len(order):
            for u in sorted(g.link(order[k])):
                if u not in order:
                    order.append(u)
            k += 1
    results: list[dict[Vertex, Vertex]] = []
    image: dict[Vertex, Vertex] = {}
    used: set[Vertex] = set()

    def extend(k: int) -> None:
        if k == len(order):
            results.append(dict(image))
            return
        v = order[k]
        for c in g.vertices:
            if c in used or sig[c] != sig[v]:
                continue
            if all(g.has_edge(v, u) == g.has_edge(c, image[u]) for u in order[:k]):
                image[v] = c
                used.add(c)
                extend(k + 1)
                used.discard(c)
                del image[v]

    extend(0)
    results.sort(key=lambda f: [f[v] for v in g.vertices])
    return results


def to_dot(n: int) -> str:
    g = defining_graph(n)
    name = lambda v: f"l_{v[0]}_{v[1]}"
    lines = [f"graph PVT{n} {{"]
    lines += [f"  {name(v)};" for v in g.vertices]
    lines += [f"  {name(u)} -- {name(v)};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
