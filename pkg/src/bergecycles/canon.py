"""Canonical labelling and isomorph-free enumeration of small uniform hypergraphs.

The canonical form is computed by colour refinement with individualisation:
vertices are coloured by an isomorphism-invariant signature, the colouring is
refined until stable, and ties are broken by individualising each vertex of
the first non-singleton cell in turn. Every discrete leaf induces a relabelling
and the lexicographically smallest relabelled edge list is the label.
Interchangeable vertices (pairs whose transposition is an automorphism) are
individualised only once per cell.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Iterator

from .errors import BudgetExceeded
from .hypergraph import Hypergraph, SimpleGraph

DEFAULT_CANON_BUDGET = 12


def _as_edges(G) -> tuple[int, int, list[tuple[int, ...]]]:
    if isinstance(G, SimpleGraph):
        return G.n, 2, [tuple(v - 1 for v in e) for e in G.edges]
    return G.n, G.r, [tuple(v - 1 for v in e) for e in G.edges]


def _refine(colors: list[int], incidence, edges) -> list[int]:
    ncolors = len(set(colors))
    while True:
        sigs = []
        for v, inc in enumerate(incidence):
            around = sorted(tuple(sorted(colors[u] for u in edges[i] if u != v)) for i in inc)
            sigs.append((colors[v], tuple(around)))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [ranks[s] for s in sigs]
        if len(ranks) == ncolors:
            return colors
        ncolors = len(ranks)


def _twin_classes(n: int, edges, edge_set) -> list[int]:
    """Class id per vertex; same id iff the transposition of the two is an automorphism."""
    cls = list(range(n))
    for u in range(n):
        if cls[u] != u:
            continue
        for w in range(u + 1, n):
            if cls[w] != w:
                continue
            swap = {u: w, w: u}
            if all(tuple(sorted(swap.get(x, x) for x in e)) in edge_set for e in edges):
                cls[w] = u
    return cls


def canonical_form(G, max_n: int = DEFAULT_CANON_BUDGET) -> str:
    """Isomorphism-invariant label of a hypergraph or simple graph.

    Two inputs with the same ``n`` and ``r`` get the same label exactly when
    some permutation of ``1..n`` maps one edge set onto the other.
    """
    n, r, edges = _as_edges(G)
    if n > max_n:
        raise BudgetExceeded(f"canonical form limited to n <= {max_n}, got n = {n}")
    edges = [tuple(sorted(e)) for e in edges]
    edge_set = set(edges)
    incidence = [[] for _ in range(n)]
    for i, e in enumerate(edges):
        for v in e:
            incidence[v].append(i)
    twins = _twin_classes(n, edges, edge_set)
    best: list[tuple[int, ...]] | None = None

    def leaf(colors):
        nonlocal best
        cert = sorted(sum(1 << colors[v] for v in e) for e in edges)
        if best is None or cert < best:
            best = cert

    def search(colors):
        colors = _refine(colors, incidence, edges)
        if len(set(colors)) == n:
            leaf(colors)
            return
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        tried = set()
        for v in range(n):
            if colors[v] != target or twins[v] in tried:
                continue
            tried.add(twins[v])
            search([2 * c + (0 if u == v or c != target else 1) for u, c in enumerate(colors)])

    if n:
        search([0] * n)
    body = ";".join(
        "-".join(str(i + 1) for i in range(n) if m >> i & 1) for m in (best or [])
    )
    return f"{n}:{r}:{body}"


def augmentation_levels(
    n: int,
    r: int,
    keep: Callable[[Hypergraph], bool] | None = None,
    max_n: int = DEFAULT_CANON_BUDGET,
    mapper=map,
    stats: dict | None = None,
) -> Iterator[list[tuple[str, Hypergraph]]]:
    """Yield, level by level, one representative per isomorphism class.

    Level ``m`` holds every class of ``r``-graphs on ``n`` vertices with ``m``
    edges that satisfies ``keep``. ``keep`` must be closed under taking
    subhypergraphs (a monotone decreasing property); then every surviving
    class with ``m + 1`` edges arises by adding one edge to a surviving class
    with ``m`` edges, so extending each representative by every absent edge
    and deduplicating by canonical form is exhaustive. Levels are sorted by
    label so the output is independent of ``mapper`` (e.g. a process pool map).
    ``stats["candidates"]`` accumulates the number of distinct classes tested.
    """
    all_edges = list(combinations(range(1, n + 1), r))
    empty = Hypergraph(n, r)
    if keep is not None and not keep(empty):
        return
    level = [(canonical_form(empty, max_n), empty)]
    while level:
        yield level
        candidates: dict[str, Hypergraph] = {}
        for _, H in level:
            present = H.edge_set
            for e in all_edges:
                if e not in present:
                    H2 = Hypergraph(n, r, H.edges + (e,))
                    candidates.setdefault(canonical_form(H2, max_n), H2)
        labels = sorted(candidates)
        if stats is not None:
            stats["candidates"] = stats.get("candidates", 0) + len(labels)
        if keep is None:
            level = [(lab, candidates[lab]) for lab in labels]
        else:
            flags = list(mapper(keep, [candidates[lab] for lab in labels]))
            level = [(lab, candidates[lab]) for lab, ok in zip(labels, flags) if ok]


def isomorphism_classes(n: int, r: int = 2, keep=None) -> list[Hypergraph]:
    """All isomorphism classes of ``r``-graphs on ``n`` vertices satisfying ``keep``."""
    return [H for level in augmentation_levels(n, r, keep) for _, H in level]


def graph_classes(n: int) -> list[SimpleGraph]:
    """One simple graph per isomorphism class on ``n`` vertices."""
    if n == 0:
        return [SimpleGraph(0)]
    if n == 1:
        return [SimpleGraph(1)]
    return [SimpleGraph(n, H.edges) for H in isomorphism_classes(n, 2)]
