"""Graph machinery: blocks, disintegration cores, exact long cycles and paths,
saturation, and the long-cycle structure witness for 2-connected graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import BudgetExceeded, ConsistencyError, InvalidInputError, ParameterError
from .hypergraph import SimpleGraph, mask_of, vertices_of

DEFAULT_GRAPH_BUDGET = 14


@dataclass(frozen=True)
class Block:
    vertices: frozenset[int]
    edges: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]
    # cut vertex -> indices of the blocks containing it
    block_tree_adjacency: dict[int, tuple[int, ...]] = field(hash=False)

    def block_of_edge(self, u: int, v: int) -> int:
        e = (min(u, v), max(u, v))
        for i, b in enumerate(self.blocks):
            if e in b.edges:
                return i
        raise KeyError(e)


def blocks(G: SimpleGraph) -> BlockDecomposition:
    """Block (2-connected component) decomposition, Hopcroft-Tarjan style."""
    adj = [G.neighbors(v) if v else [] for v in range(G.n + 1)]
    disc = [0] * (G.n + 1)
    low = [0] * (G.n + 1)
    timer = 1
    found: list[set[tuple[int, int]]] = []
    cuts: set[int] = set()
    for root in range(1, G.n + 1):
        if disc[root] or not adj[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, 0, iter(adj[root]))]
        root_children = 0
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if not disc[w]:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(adj[w])))
                    if v == root:
                        root_children += 1
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] >= disc[p]:
                    if p != root:
                        cuts.add(p)
                    comp = set()
                    while True:
                        a, b = edge_stack.pop()
                        comp.add((min(a, b), max(a, b)))
                        if (a, b) == (p, v):
                            break
                    found.append(comp)
        if root_children > 1:
            cuts.add(root)
    ordered = sorted(
        (Block(frozenset(v for e in comp for v in e), tuple(sorted(comp))) for comp in found),
        key=lambda b: (min(b.vertices), sorted(b.vertices)),
    )
    tree: dict[int, tuple[int, ...]] = {}
    for c in sorted(cuts):
        tree[c] = tuple(i for i, b in enumerate(ordered) if c in b.vertices)
    return BlockDecomposition(tuple(ordered), frozenset(cuts), tree)


def is_two_connected(G: SimpleGraph) -> bool:
    if G.n < 3:
        return False
    dec = blocks(G)
    return len(dec.blocks) == 1 and dec.blocks[0].size == G.n


@dataclass(frozen=True)
class DisintegrationTrace:
    alpha: int
    removal_order: tuple[tuple[int, int], ...]
    core_vertices: frozenset[int]


def disintegrate(G: SimpleGraph, alpha: int, order: Optional[list[int]] = None) -> DisintegrationTrace:
    """Repeatedly delete a vertex of degree at most ``alpha``.

    By default the lowest-numbered eligible vertex goes first; ``order`` gives
    an alternative priority list (the surviving core does not depend on it).
    """
    if alpha < 0:
        raise ParameterError("alpha must be non-negative")
    priority = list(order) if order is not None else list(range(1, G.n + 1))
    adj = list(G.adjacency)
    alive = mask_of(range(1, G.n + 1))
    removed = []
    while True:
        for v in priority:
            if alive >> v & 1 and (adj[v] & alive).bit_count() <= alpha:
                removed.append((v, (adj[v] & alive).bit_count()))
                alive &= ~(1 << v)
                break
        else:
            break
    return DisintegrationTrace(alpha, tuple(removed), frozenset(vertices_of(alive)))


def _check_budget(G: SimpleGraph, max_n: int) -> None:
    if G.n > max_n:
        raise BudgetExceeded(f"exact search limited to n <= {max_n}, got n = {G.n}")


def _reach(adj, start: int, allowed: int) -> int:
    """Vertices of ``allowed`` reachable from ``start`` through ``allowed`` (start excluded)."""
    seen = 0
    frontier = adj[start] & allowed
    while frontier:
        seen |= frontier
        grow = 0
        for w in vertices_of(frontier):
            grow |= adj[w]
        frontier = grow & allowed & ~seen
    return seen


def longest_cycle(G: SimpleGraph, max_n: int = DEFAULT_GRAPH_BUDGET) -> tuple[int, list[int]]:
    """Exact circumference with a witness vertex cycle; ``(0, [])`` for forests."""
    _check_budget(G, max_n)
    adj = G.adjacency
    best = [0, []]

    def dfs(s, v, path, free):
        if len(path) >= 3 and adj[v] >> s & 1 and len(path) > best[0]:
            best[0], best[1] = len(path), list(path)
        reach = _reach(adj, v, free)
        if len(path) + reach.bit_count() <= best[0]:
            return
        if not (adj[s] & (reach | (1 << v))):
            return
        for w in vertices_of(adj[v] & free):
            path.append(w)
            dfs(s, w, path, free & ~(1 << w))
            path.pop()

    for s in range(1, G.n + 1):
        free = mask_of(range(s + 1, G.n + 1))
        if free.bit_count() + 1 <= best[0]:
            break
        dfs(s, s, [s], free)
    return best[0], best[1]


def longest_path(G: SimpleGraph, max_n: int = DEFAULT_GRAPH_BUDGET) -> tuple[int, list[int]]:
    """Exact longest path, measured in edges, with a witness vertex sequence."""
    _check_budget(G, max_n)
    if G.n == 0:
        return 0, []
    adj = G.adjacency
    best = [0, [1]]
    everything = mask_of(range(1, G.n + 1))

    def dfs(v, path, free):
        if len(path) - 1 > best[0]:
            best[0], best[1] = len(path) - 1, list(path)
        if len(path) - 1 + _reach(adj, v, free).bit_count() <= best[0]:
            return
        for w in vertices_of(adj[v] & free):
            path.append(w)
            dfs(w, path, free & ~(1 << w))
            path.pop()

    for s in range(1, G.n + 1):
        if best[0] == G.n - 1:
            break
        dfs(s, [s], everything & ~(1 << s))
    return best[0], best[1]


def has_long_path_between(G: SimpleGraph, u: int, v: int, min_edges: int) -> bool:
    """Whether some ``u``-``v`` path has at least ``min_edges`` edges."""
    adj = G.adjacency

    def dfs(x, length, free):
        if x == v:
            return length >= min_edges
        target_reach = _reach(adj, x, free | (1 << v))
        if not target_reach >> v & 1:
            return False
        if length + (target_reach & ~(1 << v)).bit_count() + 1 < min_edges:
            return False
        for w in vertices_of(adj[x] & (free | (1 << v))):
            if dfs(w, length + 1, free & ~(1 << w)):
                return True
        return False

    free = mask_of(range(1, G.n + 1)) & ~(1 << u) & ~(1 << v)
    return dfs(u, 0, free)


def saturate_no_long_cycle(G: SimpleGraph, k: int, max_n: int = DEFAULT_GRAPH_BUDGET) -> SimpleGraph:
    """Add nonedges in lexicographic order whenever no cycle of length >= k appears.

    One pass suffices: a nonedge rejected early closes a long cycle in every
    later supergraph as well.
    """
    _check_budget(G, max_n)
    if longest_cycle(G, max_n)[0] >= k:
        raise InvalidInputError(f"graph already has a cycle of length >= {k}")
    current = G
    for u, v in G.nonedges():
        # u-v edge closes a cycle of length >= k iff a u-v path has >= k-1 edges
        if not has_long_path_between(current, u, v, k - 1):
            current = current.with_edges([(u, v)])
    return current


def is_saturated(G: SimpleGraph, k: int) -> bool:
    return all(has_long_path_between(G, u, v, k - 1) for u, v in G.nonedges())


@dataclass(frozen=True)
class KopylovWitness:
    """Which of the two structural alternatives a saturated 2-connected graph satisfies.

    ``case`` is ``"disintegrable"`` when the t-disintegration deletes every
    vertex, and ``"core"`` when the t-core is a clique on ``s`` vertices that
    also survives the (k - s)-disintegration.
    """

    case: str
    k: int
    t: int
    t_trace: DisintegrationTrace
    s: int = 0
    core_trace: Optional[DisintegrationTrace] = None

    def validate(self, G: SimpleGraph) -> None:
        t = (self.k - 1) // 2
        if self.t != t:
            raise ConsistencyError("threshold t does not match k")
        _check_trace(G, self.t_trace)
        if self.case == "disintegrable":
            if self.t_trace.core_vertices:
                raise ConsistencyError("t-core is not empty")
            return
        if self.case != "core":
            raise ConsistencyError(f"unknown case {self.case!r}")
        core = self.t_trace.core_vertices
        if len(core) != self.s or not (t + 2 <= self.s <= self.k - 2):
            raise ConsistencyError(f"core size {len(core)} outside [t+2, k-2]")
        if any(not G.has_edge(u, v) for u in core for v in core if u < v):
            raise ConsistencyError("t-core is not a complete graph")
        if self.core_trace is None or self.core_trace.alpha != self.k - self.s:
            raise ConsistencyError("missing (k-s)-disintegration trace")
        _check_trace(G, self.core_trace)
        if self.core_trace.core_vertices != core:
            raise ConsistencyError("(k-s)-core differs from the t-core")


def _check_trace(G: SimpleGraph, trace: DisintegrationTrace) -> None:
    adj = G.adjacency
    alive = mask_of(range(1, G.n + 1))
    for v, d in trace.removal_order:
        if not alive >> v & 1 or (adj[v] & alive).bit_count() != d or d > trace.alpha:
            raise ConsistencyError(f"illegal removal of vertex {v}")
        alive &= ~(1 << v)
    if frozenset(vertices_of(alive)) != trace.core_vertices:
        raise ConsistencyError("trace does not end at its core")
    if any((adj[v] & alive).bit_count() <= trace.alpha for v in vertices_of(alive)):
        raise ConsistencyError("surviving subgraph has a vertex of degree <= alpha")


def kopylov_witness(
    G: SimpleGraph, k: int, saturate: bool = False, max_n: int = DEFAULT_GRAPH_BUDGET
) -> KopylovWitness:
    """Structure certificate for a 2-connected, saturated graph without cycles of length >= k.

    With ``saturate=True`` the graph is first completed by
    :func:`saturate_no_long_cycle`.
    """
    if k < 5 or G.n < k:
        raise InvalidInputError(f"need n >= k >= 5, got n={G.n}, k={k}")
    _check_budget(G, max_n)
    if not is_two_connected(G):
        raise InvalidInputError("graph is not 2-connected")
    if longest_cycle(G, max_n)[0] >= k:
        raise InvalidInputError(f"graph has a cycle of length >= {k}")
    if saturate:
        G = saturate_no_long_cycle(G, k, max_n)
    elif not is_saturated(G, k):
        raise InvalidInputError(f"graph is not saturated for cycles of length >= {k}")
    t = (k - 1) // 2
    t_trace = disintegrate(G, t)
    if not t_trace.core_vertices:
        w = KopylovWitness("disintegrable", k, t, t_trace)
    else:
        s = len(t_trace.core_vertices)
        core_trace = disintegrate(G, k - s) if k - s >= 0 else None
        w = KopylovWitness("core", k, t, t_trace, s, core_trace)
    w.validate(G)
    return w


def simple_cycles(G: SimpleGraph, max_n: int = DEFAULT_GRAPH_BUDGET):
    """Yield every cycle once, as a vertex list starting at its smallest vertex.

    Orientation is fixed by requiring the second vertex to be smaller than the last.
    """
    _check_budget(G, max_n)
    adj = G.adjacency

    def dfs(s, v, path, free):
        if len(path) >= 3 and adj[v] >> s & 1 and path[1] < v:
            yield list(path)
        for w in vertices_of(adj[v] & free):
            path.append(w)
            yield from dfs(s, w, path, free & ~(1 << w))
            path.pop()

    for s in range(1, G.n + 1):
        yield from dfs(s, s, [s], mask_of(range(s + 1, G.n + 1)))
