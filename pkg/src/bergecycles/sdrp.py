"""Systems of distinct representative pairs (SDRPs) and lifting graph copies to Berge copies.

An SDRP of ``H`` is a list of distinct vertex pairs ``A`` with distinct
assigned hyperedges, each assigned hyperedge containing its pair, such that
no pair of ``A`` lies in any unassigned hyperedge. The unassigned hyperedges
form the residual family, whose 2-shadow is the residual shadow ``B``.

The residual has *positive surplus* when every nonempty set ``S`` of residual
shadow pairs is contained, jointly, in more than ``|S|`` residual hyperedges.
:func:`saturated_sdrp` grows an SDRP until this holds; then every graph made
of ``A`` and ``B`` edges lifts to a Berge copy on the same base vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from .embedding import BergeEmbedding
from .errors import ConsistencyError, InvalidInputError
from .hypergraph import Edge, Hypergraph, Pair, SimpleGraph
from .matching import alternating_reach, max_matching

ENUMERATION_LIMIT = 20


@dataclass(frozen=True)
class Sdrp:
    host: Hypergraph
    pairs: tuple[Pair, ...] = ()
    assigned: tuple[Edge, ...] = ()

    @property
    def size(self) -> int:
        return len(self.pairs)

    def problems(self) -> list[str]:
        out = []
        if len(self.pairs) != len(self.assigned):
            out.append("pairs and assigned hyperedges differ in number")
        if len(set(self.pairs)) != len(self.pairs):
            out.append("pairs repeat")
        if len(set(self.assigned)) != len(self.assigned):
            out.append("assigned hyperedges repeat")
        for (x, y), f in zip(self.pairs, self.assigned):
            if f not in self.host.edge_set:
                out.append(f"{list(f)} is not a host edge")
            if x not in f or y not in f:
                out.append(f"pair {x}{y} not inside {list(f)}")
        used = set(self.assigned)
        for f in self.host.edges:
            if f in used:
                continue
            for x, y in self.pairs:
                if x in f and y in f:
                    out.append(f"pair {x}{y} also lies in unassigned {list(f)}")
        return out

    def validate(self) -> None:
        bad = self.problems()
        if bad:
            raise ConsistencyError("invalid SDRP: " + "; ".join(bad))

    def as_dict(self) -> dict[Pair, Edge]:
        return dict(zip(self.pairs, self.assigned))


@dataclass(frozen=True)
class ResidualPartition:
    """Residual hyperedges, their 2-shadow, and pair-to-hyperedge incidence."""

    host: Hypergraph
    residual_edges: tuple[Edge, ...]
    residual_shadow: tuple[Pair, ...]
    incidence: dict[Pair, tuple[Edge, ...]]

    def __hash__(self):
        return hash((self.host, self.residual_edges))

    @classmethod
    def of(cls, H: Hypergraph, assigned: Sequence[Edge] = ()) -> "ResidualPartition":
        taken = set(assigned)
        residual = tuple(e for e in H.edges if e not in taken)
        inc: dict[Pair, list[Edge]] = {}
        for e in residual:
            for p in combinations(e, 2):
                inc.setdefault(p, []).append(e)
        shadow = tuple(sorted(inc))
        return cls(H, residual, shadow, {p: tuple(inc[p]) for p in shadow})

    def covering(self, pairs) -> set[Edge]:
        """Residual hyperedges containing at least one of ``pairs``."""
        return {e for p in pairs for e in self.incidence.get(p, ())}

    @cached_property
    def has_surplus(self) -> bool:
        return find_surplus_violator(self) is None


@dataclass(frozen=True)
class SurplusVerdict:
    ok: bool
    violator: Optional[tuple[Pair, ...]] = None
    method: str = "matching"

    def __bool__(self) -> bool:
        return self.ok


def find_surplus_violator(part: ResidualPartition) -> Optional[tuple[Pair, ...]]:
    """A set ``S`` with ``|S| >= |covering(S)|`` found by pair cloning, or ``None``.

    Positive surplus holds iff for every residual pair ``p`` the bipartite
    graph with ``p`` duplicated still matches every pair. When that fails for
    some ``p``, the alternating-reachable pairs from an unmatched copy form a
    violator.
    """
    B = part.residual_shadow
    base_adj = [part.incidence[p] for p in B]
    for i, p in enumerate(B):
        adj = base_adj + [base_adj[i]]
        match_left, match_right = max_matching(adj)
        unmatched = [u for u, m in enumerate(match_left) if m is None]
        if unmatched:
            left, _ = alternating_reach(adj, match_left, match_right, unmatched[0])
            return tuple(sorted({B[u] if u < len(B) else p for u in left}))
    return None


def _enumerate_violator(part: ResidualPartition) -> Optional[tuple[Pair, ...]]:
    B = part.residual_shadow
    index = {e: j for j, e in enumerate(part.residual_edges)}
    words = max(1, (len(index) + 63) // 64)
    masks = np.zeros((len(B), words), dtype=np.uint64)
    for i, p in enumerate(B):
        for e in part.incidence[p]:
            j = index[e]
            masks[i, j // 64] |= np.uint64(1) << np.uint64(j % 64)
    cover = np.zeros((1, words), dtype=np.uint64)
    sizes = np.zeros(1, dtype=np.int64)
    for i in range(len(B)):
        cover = np.concatenate([cover, cover | masks[i]])
        sizes = np.concatenate([sizes, sizes + 1])
    counts = np.bitwise_count(cover).sum(axis=1).astype(np.int64)
    bad = np.nonzero(sizes[1:] >= counts[1:])[0] + 1
    if bad.size == 0:
        return None
    # smallest violator, ties broken by lowest subset index
    pick = bad[np.argmin(sizes[bad])]
    return tuple(B[i] for i in range(len(B)) if int(pick) >> i & 1)


def verify_surplus(part: ResidualPartition, method: str = "auto") -> SurplusVerdict:
    """Check ``|S| < |covering(S)|`` for every nonempty ``S`` of residual shadow pairs.

    ``method`` is ``"enumeration"`` (all subsets, vectorised), ``"matching"``
    (pair cloning) or ``"auto"`` (enumeration when ``|B| <= 20``).
    """
    if method == "auto":
        method = "enumeration" if len(part.residual_shadow) <= ENUMERATION_LIMIT else "matching"
    if method == "enumeration":
        if len(part.residual_shadow) > ENUMERATION_LIMIT + 4:
            raise InvalidInputError("too many residual pairs for subset enumeration")
        v = _enumerate_violator(part)
    elif method == "matching":
        v = find_surplus_violator(part)
    else:
        raise InvalidInputError(f"unknown method {method!r}")
    return SurplusVerdict(v is None, v, method)


def _tight_subset(part: ResidualPartition, S: Sequence[Pair]) -> list[tuple[Pair, Edge]]:
    """Pairs ``S'`` inside violator ``S`` matched bijectively onto ``covering(S')``.

    With a maximum matching of ``S`` into its covering hyperedges, drop every
    hyperedge reachable by alternating paths from an unmatched hyperedge; the
    remaining hyperedges are exactly covered by their matched pairs.
    """
    adj = [part.incidence[p] for p in S]
    match_left, match_right = max_matching(adj)
    right_all = {e for row in adj for e in row}
    frontier = [e for e in sorted(right_all) if e not in match_right]
    reached = set(frontier)
    users: dict[Edge, list[int]] = {}
    for x, row in enumerate(adj):
        for e in row:
            users.setdefault(e, []).append(x)
    while frontier:
        e = frontier.pop()
        for x in users[e]:
            if match_left[x] != e and match_left[x] is not None and match_left[x] not in reached:
                reached.add(match_left[x])
                frontier.append(match_left[x])
    tight = [(S[x], match_left[x]) for x in range(len(S))
             if match_left[x] is not None and match_left[x] not in reached]
    if not tight:
        raise ConsistencyError("violator has no tight sub-system")
    return tight


def saturated_sdrp(H: Hypergraph) -> tuple[Sdrp, ResidualPartition]:
    """Grow an SDRP from empty until the residual has positive surplus.

    Each round finds a violator, extracts a tight subset that is matched onto
    exactly the hyperedges covering it, and moves those couples into the
    SDRP; the residual shrinks every round, so the loop terminates.
    """
    pairs: list[Pair] = []
    assigned: list[Edge] = []
    while True:
        part = ResidualPartition.of(H, assigned)
        S = find_surplus_violator(part)
        if S is None:
            break
        for p, e in sorted(_tight_subset(part, S)):
            pairs.append(p)
            assigned.append(e)
    sdrp = Sdrp(H, tuple(pairs), tuple(assigned))
    return sdrp, part


def auxiliary_graph(sdrp: Sdrp, part: ResidualPartition) -> SimpleGraph:
    """The graph on ``1..n`` whose edges are the SDRP pairs together with the residual shadow."""
    if sdrp.host != part.host:
        raise InvalidInputError("SDRP and residual partition come from different hosts")
    return SimpleGraph(sdrp.host.n, list(sdrp.pairs) + list(part.residual_shadow))


def lift_to_berge(
    edges: Sequence[Sequence[int]],
    sdrp: Sdrp,
    part: ResidualPartition,
    base: Optional[Sequence[int]] = None,
    kind: str = "general",
) -> BergeEmbedding:
    """Turn a subgraph of the auxiliary graph into a Berge copy on the same base vertices.

    SDRP pairs keep their assigned hyperedge; residual-shadow pairs are
    matched into distinct residual hyperedges, which positive surplus
    guarantees. ``base`` fixes the order of base vertices (needed for
    ``kind="cycle"``, where ``edges`` must be the consecutive pairs).
    """
    if sdrp.host != part.host:
        raise InvalidInputError("SDRP and residual partition come from different hosts")
    if not part.has_surplus:
        raise InvalidInputError("residual partition lacks positive surplus")
    norm = [(min(u, v), max(u, v)) for u, v in edges]
    if len(set(norm)) != len(norm) and kind != "cycle":
        raise InvalidInputError("graph copy repeats an edge")
    a_map = sdrp.as_dict()
    chosen: list[Optional[Edge]] = [None] * len(norm)
    b_slots = []
    for i, p in enumerate(norm):
        if p in a_map:
            chosen[i] = a_map[p]
        elif p in part.incidence:
            b_slots.append(i)
        else:
            raise InvalidInputError(f"pair {p} is not an edge of the auxiliary graph")
    adj = [part.incidence[norm[i]] for i in b_slots]
    match_left, _ = max_matching(adj)
    if any(m is None for m in match_left):
        raise ConsistencyError("residual pairs of the copy cannot be matched to distinct hyperedges")
    for i, m in zip(b_slots, match_left):
        chosen[i] = m
    if base is None:
        base = sorted({v for p in norm for v in p})
    base = tuple(base)
    pos = {v: i for i, v in enumerate(base)}
    if kind == "cycle":
        emb = BergeEmbedding.cycle(base, chosen)
        if [tuple(sorted(p)) for p in emb.base_pairs()] != norm:
            raise InvalidInputError("cycle edges must follow the base order")
    elif kind == "path":
        emb = BergeEmbedding.path(base, chosen)
        if [tuple(sorted(p)) for p in emb.base_pairs()] != norm:
            raise InvalidInputError("path edges must follow the base order")
    else:
        pattern = tuple((pos[u], pos[v]) for u, v in edges)
        emb = BergeEmbedding("general", base, tuple(chosen), pattern)
    emb.validate(sdrp.host)
    return emb


def sdrp_to_json(sdrp: Sdrp, part: ResidualPartition) -> dict:
    return {
        "sdrp": [{"pair": list(p), "edge": list(e)} for p, e in zip(sdrp.pairs, sdrp.assigned)],
        "residual": [list(e) for e in part.residual_edges],
        "residual_shadow": [list(p) for p in part.residual_shadow],
    }
