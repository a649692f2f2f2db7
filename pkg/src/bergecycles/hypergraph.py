"""Uniform hypergraphs, simple graphs, shadows and standard constructions.

Vertices are the integers ``1..n``. Isolated vertices are allowed, so ``n``
may exceed the number of vertices actually covered by edges. Edges are kept
as sorted tuples in lexicographic order; bitmask views (bit ``v`` set for
vertex ``v``) are derived lazily and used by the search routines.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .errors import BudgetExceeded, InvalidInputError, ParameterError

MAX_VERTICES = 64

Edge = tuple[int, ...]
Pair = tuple[int, int]


def _normalize(edge: Iterable[int], n: int, size: int | None) -> Edge:
    e = tuple(sorted(int(v) for v in edge))
    if size is not None and len(e) != size:
        raise InvalidInputError(f"edge {list(e)} does not have {size} vertices")
    if len(set(e)) != len(e):
        raise InvalidInputError(f"edge {list(e)} repeats a vertex")
    if e and (e[0] < 1 or e[-1] > n):
        raise InvalidInputError(f"edge {list(e)} leaves the vertex range 1..{n}")
    return e


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform hypergraph on the vertex set ``1..n``."""

    n: int
    r: int
    edges: tuple[Edge, ...] = field(default=())

    def __init__(self, n: int, r: int, edges: Iterable[Iterable[int]] = ()):
        if n < 1:
            raise InvalidInputError("a hypergraph needs at least one vertex")
        if r < 2:
            raise InvalidInputError("uniformity r must be at least 2")
        if n > MAX_VERTICES:
            raise BudgetExceeded(f"n = {n} exceeds the {MAX_VERTICES}-vertex width")
        normalized = sorted({_normalize(e, n, r) for e in edges})
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "edges", tuple(normalized))

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __contains__(self, edge) -> bool:
        return tuple(sorted(edge)) in self.edge_set

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(mask_of(e) for e in self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def with_edges(self, extra: Iterable[Iterable[int]]) -> "Hypergraph":
        return Hypergraph(self.n, self.r, list(self.edges) + [tuple(e) for e in extra])

    def without_edges(self, removed: Iterable[Iterable[int]]) -> "Hypergraph":
        drop = {tuple(sorted(e)) for e in removed}
        return Hypergraph(self.n, self.r, [e for e in self.edges if e not in drop])

    def induced(self, vertex_set: Iterable[int]) -> "Hypergraph":
        """Edges lying inside ``vertex_set``, on the same ambient vertex range."""
        keep = set(vertex_set)
        return Hypergraph(self.n, self.r, [e for e in self.edges if keep.issuperset(e)])

    def relabel(self, perm: dict[int, int]) -> "Hypergraph":
        return Hypergraph(self.n, self.r, [[perm[v] for v in e] for e in self.edges])

    def __repr__(self) -> str:
        body = ",".join("".join(map(str, e)) if self.n < 10 else "-".join(map(str, e))
                        for e in self.edges)
        return f"Hypergraph(n={self.n}, r={self.r}, {{{body}}})"


@dataclass(frozen=True)
class SimpleGraph:
    """A simple graph on ``1..n``; edges are pairs ``(u, v)`` with ``u < v``."""

    n: int
    edges: tuple[Pair, ...] = field(default=())

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise InvalidInputError("vertex count must be non-negative")
        if n > MAX_VERTICES:
            raise BudgetExceeded(f"n = {n} exceeds the {MAX_VERTICES}-vertex width")
        normalized = sorted({_normalize(e, n, 2) for e in edges})
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(normalized))

    def __len__(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """``adjacency[v]`` is the neighbour bitmask of ``v`` (index 0 unused)."""
        adj = [0] * (self.n + 1)
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def edge_set(self) -> frozenset[Pair]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return vertices_of(self.adjacency[v])

    def with_edges(self, extra: Iterable[Iterable[int]]) -> "SimpleGraph":
        return SimpleGraph(self.n, list(self.edges) + [tuple(e) for e in extra])

    def induced(self, vertex_set: Iterable[int]) -> "SimpleGraph":
        keep = set(vertex_set)
        return SimpleGraph(self.n, [e for e in self.edges if keep.issuperset(e)])

    def nonedges(self) -> list[Pair]:
        return [p for p in combinations(range(1, self.n + 1), 2) if p not in self.edge_set]

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return component_masks(self.adjacency, mask_of(range(1, self.n + 1)))[0].bit_count() == self.n

    def to_hypergraph(self) -> Hypergraph:
        return Hypergraph(max(self.n, 1), 2, self.edges)


def component_masks(adjacency, allowed: int) -> list[int]:
    """Connected components (as bitmasks) of the subgraph induced on ``allowed``."""
    comps = []
    rest = allowed
    while rest:
        low = rest & -rest
        comp = frontier = low
        while frontier:
            grow = 0
            for v in vertices_of(frontier):
                grow |= adjacency[v]
            frontier = grow & allowed & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def shadow(H: Hypergraph, p: int) -> set[Edge]:
    """All ``p``-subsets of vertices contained in at least one edge of ``H``."""
    if not 1 <= p <= H.r:
        raise ParameterError(f"shadow size p must lie in [1, {H.r}], got {p}")
    return {sub for e in H.edges for sub in combinations(e, p)}


def shadow_graph(H: Hypergraph) -> SimpleGraph:
    """The 2-shadow as a graph on the same vertex set."""
    return SimpleGraph(H.n, shadow(H, 2))


def shadow_complement(H: Hypergraph) -> set[Pair]:
    """Pairs of ``1..n`` not covered by any edge of ``H``."""
    covered = shadow(H, 2)
    return {p for p in combinations(range(1, H.n + 1), 2) if p not in covered}


def complete_r_graph(w: int, r: int) -> Hypergraph:
    if r < 2 or w < r:
        raise ParameterError(f"complete r-graph needs w >= r >= 2, got w={w}, r={r}")
    return Hypergraph(w, r, combinations(range(1, w + 1), r))


def complete_graph(w: int) -> SimpleGraph:
    return SimpleGraph(w, combinations(range(1, w + 1), 2))


def is_connected_hypergraph(H: Hypergraph) -> bool:
    """Connectivity of the 2-shadow on all ``n`` vertices (isolated vertices disconnect)."""
    return shadow_graph(H).is_connected()


def hypergraph_components(H: Hypergraph) -> list[list[int]]:
    g = shadow_graph(H)
    comps = component_masks(g.adjacency, mask_of(range(1, H.n + 1)))
    return sorted(vertices_of(c) for c in comps)
