"""Exact Berge path and Berge cycle search.

The search walks over sequences of distinct base vertices along the 2-shadow
and keeps an incremental bipartite matching from consecutive base pairs to
distinct hyperedges. Extending the walk adds one pair; if that pair cannot be
matched by an augmenting path the whole branch dies, since any extension only
adds more pairs. A walk closes into a cycle when the pair (last, first) can be
matched as well.
"""

from __future__ import annotations

from itertools import combinations
from typing import Optional

from .embedding import BergeEmbedding
from .errors import BudgetExceeded, InvalidInputError
from .graphs import blocks
from .hypergraph import Hypergraph, is_connected_hypergraph, mask_of, shadow_graph, vertices_of
from .verdict import HOLDS, NOT_APPLICABLE, VIOLATION, Verdict

DEFAULT_MAX_N = 12
DEFAULT_MAX_EDGES = 24


class _Found(Exception):
    pass


class _Search:
    def __init__(self, H: Hypergraph):
        self.H = H
        self.edges = H.edges
        self.cand: dict[tuple[int, int], tuple[int, ...]] = {}
        for i, e in enumerate(H.edges):
            for p in combinations(e, 2):
                self.cand.setdefault(p, ())
                self.cand[p] += (i,)
        adj = [0] * (H.n + 1)
        for u, v in self.cand:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.adj = adj
        self.slot_pair: list[tuple[int, int]] = []
        self.slot_edge: list[int] = []
        self.edge_slot = [-1] * len(H.edges)
        self.best = 0
        self.witness: Optional[BergeEmbedding] = None

    # incremental matching: slots are consecutive base pairs
    def _try(self, slot, seen):
        for e in self.cand[self.slot_pair[slot]]:
            if e in seen:
                continue
            seen.add(e)
            other = self.edge_slot[e]
            if other == -1 or self._try(other, seen):
                self.edge_slot[e] = slot
                self.slot_edge[slot] = e
                return True
        return False

    def push(self, u, v) -> bool:
        """Add pair ``uv`` as a new slot; on failure the state is unchanged."""
        self._saved = (list(self.slot_edge), list(self.edge_slot))
        self.slot_pair.append((min(u, v), max(u, v)))
        self.slot_edge.append(-1)
        if self._try(len(self.slot_pair) - 1, set()):
            return True
        self.slot_pair.pop()
        self.slot_edge, self.edge_slot = self._saved
        self.slot_edge.pop()
        return False

    def snapshot(self):
        return list(self.slot_pair), list(self.slot_edge), list(self.edge_slot)

    def restore(self, snap):
        self.slot_pair, self.slot_edge, self.edge_slot = (list(x) for x in snap)

    def reach(self, v, free) -> int:
        adj = self.adj
        seen = 0
        frontier = adj[v] & free
        while frontier:
            seen |= frontier
            grow = 0
            for w in vertices_of(frontier):
                grow |= adj[w]
            frontier = grow & free & ~seen
        return seen

    # cycles
    def cycles(self, allowed: int, lo: int, hi: int, first: bool) -> None:
        """Record cycles of length in ``[lo, hi]`` longer than ``self.best``."""
        self.best = max(self.best, lo - 1)
        m = sum(1 for e in self.edges if mask_of(e) & ~allowed == 0)
        hi = min(hi, m, allowed.bit_count())
        for s in vertices_of(allowed):
            free = allowed & ~((1 << (s + 1)) - 1)
            if free.bit_count() + 1 <= self.best or self.best >= hi:
                break
            self.slot_pair, self.slot_edge = [], []
            self.edge_slot = [-1] * len(self.edges)
            self._cycle_dfs(s, s, [s], free, hi, first)

    def _cycle_dfs(self, s, v, path, free, hi, first):
        ell = len(path)
        if ell >= 2 and self.adj[v] >> s & 1 and ell > self.best and (ell == 2 or path[1] < v):
            snap = self.snapshot()
            if self.push(v, s):
                self.best = ell
                self.witness = BergeEmbedding.cycle(path, [self.edges[i] for i in self.slot_edge])
                if first:
                    raise _Found
            self.restore(snap)
        if ell >= hi:
            return
        reach = self.reach(v, free)
        if ell + reach.bit_count() <= self.best:
            return
        if not self.adj[s] & (reach | (1 << v)):
            return
        for w in vertices_of(self.adj[v] & free):
            snap = self.snapshot()
            if self.push(v, w):
                path.append(w)
                self._cycle_dfs(s, w, path, free & ~(1 << w), hi, first)
                path.pop()
            self.restore(snap)

    # paths
    def paths(self, lo: int, first: bool) -> None:
        self.best = max(self.best, lo - 1)
        everything = mask_of(range(1, self.H.n + 1))
        cap = min(self.H.n - 1, len(self.edges))
        for s in range(1, self.H.n + 1):
            if self.best >= cap:
                break
            self.slot_pair, self.slot_edge = [], []
            self.edge_slot = [-1] * len(self.edges)
            self._path_dfs(s, [s], everything & ~(1 << s), cap, first)

    def _path_dfs(self, v, path, free, cap, first):
        length = len(path) - 1
        if length > self.best:
            self.best = length
            self.witness = BergeEmbedding.path(path, [self.edges[i] for i in self.slot_edge])
            if first:
                raise _Found
        if length >= cap or length + self.reach(v, free).bit_count() <= self.best:
            return
        for w in vertices_of(self.adj[v] & free):
            snap = self.snapshot()
            if self.push(v, w):
                path.append(w)
                self._path_dfs(w, path, free & ~(1 << w), cap, first)
                path.pop()
            self.restore(snap)


def _check_budget(H: Hypergraph, max_n: int, max_edges: int) -> None:
    if H.n > max_n:
        raise BudgetExceeded(f"Berge search limited to n <= {max_n}, got n = {H.n}")
    if len(H) > max_edges:
        raise BudgetExceeded(f"Berge search limited to {max_edges} edges, got {len(H)}")


def _cycle_regions(H: Hypergraph, use_blocks: bool) -> list[int]:
    if not use_blocks:
        return [mask_of(range(1, H.n + 1))]
    dec = blocks(shadow_graph(H))
    regions = [mask_of(b.vertices) for b in dec.blocks]
    return sorted(regions, key=lambda m: (-m.bit_count(), m))


def _run_cycles(H, lo, hi, first, use_blocks) -> tuple[int, Optional[BergeEmbedding]]:
    search = _Search(H)
    try:
        for region in _cycle_regions(H, use_blocks):
            if region.bit_count() < max(lo, search.best + 1):
                continue
            search.cycles(region, lo, hi, first)
    except _Found:
        pass
    if search.witness is None:
        return 0, None
    search.witness.validate(H)
    return search.witness.length, search.witness


def longest_berge_cycle(
    H: Hypergraph,
    max_n: int = DEFAULT_MAX_N,
    max_edges: int = DEFAULT_MAX_EDGES,
    use_blocks: bool = True,
) -> tuple[int, Optional[BergeEmbedding]]:
    """Length of a longest Berge cycle (0 if none, 2 is the shortest) and a witness.

    With ``use_blocks`` each block of the 2-shadow is searched separately; a
    Berge cycle's base vertices form a cycle of the 2-shadow and so sit in a
    single block.
    """
    _check_budget(H, max_n, max_edges)
    return _run_cycles(H, 2, H.n, False, use_blocks)


def has_berge_cycle_geq(
    H: Hypergraph,
    k: int,
    max_n: int = DEFAULT_MAX_N,
    max_edges: int = DEFAULT_MAX_EDGES,
    use_blocks: bool = True,
) -> tuple[bool, Optional[BergeEmbedding]]:
    """Whether ``H`` has a Berge cycle of length at least ``k``, stopping at the first one."""
    _check_budget(H, max_n, max_edges)
    length, w = _run_cycles(H, max(k, 2), H.n, True, use_blocks)
    return length >= max(k, 2), w


def find_berge_cycle_of_length(
    H: Hypergraph,
    ell: int,
    max_n: int = DEFAULT_MAX_N,
    max_edges: int = DEFAULT_MAX_EDGES,
) -> Optional[BergeEmbedding]:
    """Some Berge cycle of length exactly ``ell``, or ``None``."""
    _check_budget(H, max_n, max_edges)
    if ell < 2:
        return None
    _, w = _run_cycles(H, ell, ell, True, True)
    return w


def longest_berge_path(
    H: Hypergraph, max_n: int = DEFAULT_MAX_N, max_edges: int = DEFAULT_MAX_EDGES
) -> tuple[int, BergeEmbedding]:
    """Length (number of hyperedges) of a longest Berge path with a witness."""
    _check_budget(H, max_n, max_edges)
    search = _Search(H)
    search.witness = BergeEmbedding.path([1], [])
    search.paths(1, False)
    search.witness.validate(H)
    return search.best, search.witness


def has_berge_path_geq(
    H: Hypergraph, k: int, max_n: int = DEFAULT_MAX_N, max_edges: int = DEFAULT_MAX_EDGES
) -> tuple[bool, Optional[BergeEmbedding]]:
    _check_budget(H, max_n, max_edges)
    if k <= 0:
        return True, BergeEmbedding.path([1], [])
    search = _Search(H)
    try:
        search.paths(k, True)
    except _Found:
        search.witness.validate(H)
        return True, search.witness
    return False, None


def check_long_cycle_spans(
    H: Hypergraph, k: int, max_n: int = DEFAULT_MAX_N, max_edges: int = DEFAULT_MAX_EDGES
) -> Verdict:
    """A Berge k-cycle in a connected hypergraph without Berge k-paths spans every vertex."""
    claim = "cycle-spans-component"
    if not is_connected_hypergraph(H):
        raise InvalidInputError("hypergraph is not connected")
    long_path, pw = has_berge_path_geq(H, k, max_n, max_edges)
    if long_path:
        return Verdict(NOT_APPLICABLE, claim, details={"reason": "has Berge path of length k",
                                                       "path": pw.to_json()})
    cyc = find_berge_cycle_of_length(H, k, max_n, max_edges)
    if cyc is None:
        return Verdict(NOT_APPLICABLE, claim, details={"reason": "no Berge cycle of length k"})
    # every k-cycle spans H exactly when n == k, so one witness decides the claim
    if set(cyc.base) == set(H.vertices):
        return Verdict(HOLDS, claim, details={"cycle": cyc.to_json()})
    return Verdict(VIOLATION, claim, details={"cycle": cyc.to_json()})
