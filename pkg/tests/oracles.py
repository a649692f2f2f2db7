"""Brute-force reference implementations used only by the tests.

Nothing here shares code with the package's search routines: each function
enumerates the raw definition directly (permutations, products, subsets).
"""

from __future__ import annotations

import random
from itertools import combinations, permutations, product

from bergecycles.hypergraph import Hypergraph, SimpleGraph


def _distinct_cover(pairs, edges):
    """Is there a choice of pairwise distinct edges, one containing each pair?"""
    options = [[e for e in edges if a in e and b in e] for a, b in pairs]
    for choice in product(*options):
        if len(set(choice)) == len(choice):
            return True
    return False


def berge_cycle_lengths(H: Hypergraph) -> set[int]:
    found = set()
    for ell in range(2, H.n + 1):
        for seq in permutations(H.vertices, ell):
            if seq[0] != min(seq):
                continue
            pairs = [(seq[i], seq[(i + 1) % ell]) for i in range(ell)]
            if _distinct_cover(pairs, H.edges):
                found.add(ell)
                break
    return found


def longest_berge_cycle(H: Hypergraph) -> int:
    return max(berge_cycle_lengths(H), default=0)


def longest_berge_path(H: Hypergraph) -> int:
    best = 0
    for ell in range(1, H.n):
        for seq in permutations(H.vertices, ell + 1):
            if _distinct_cover(list(zip(seq, seq[1:])), H.edges):
                best = ell
                break
        else:
            break
    return best


def graph_longest_cycle(G: SimpleGraph) -> int:
    best = 0
    for ell in range(3, G.n + 1):
        for seq in permutations(range(1, G.n + 1), ell):
            if all(G.has_edge(seq[i], seq[(i + 1) % ell]) for i in range(ell)):
                best = ell
                break
    return best


def graph_longest_path(G: SimpleGraph) -> int:
    best = 0
    for ell in range(1, G.n):
        for seq in permutations(range(1, G.n + 1), ell + 1):
            if all(G.has_edge(a, b) for a, b in zip(seq, seq[1:])):
                best = ell
                break
    return best


def isomorphic(H1: Hypergraph, H2: Hypergraph) -> bool:
    if (H1.n, H1.r, len(H1)) != (H2.n, H2.r, len(H2)):
        return False
    target = H2.edge_set
    for perm in permutations(range(1, H1.n + 1)):
        m = dict(zip(range(1, H1.n + 1), perm))
        if all(tuple(sorted(m[v] for v in e)) in target for e in H1.edges):
            return True
    return False


def surplus_violators(residual_edges, shadow_pairs):
    """All nonempty S of shadow pairs covered by at most |S| residual hyperedges."""
    out = []
    for size in range(1, len(shadow_pairs) + 1):
        for S in combinations(shadow_pairs, size):
            cover = {e for e in residual_edges for a, b in S if a in e and b in e}
            if len(cover) <= size:
                out.append(S)
    return out


def all_sdrps(H: Hypergraph):
    """Every SDRP of H (pairs with an injective assignment), by enumeration."""
    pairs = sorted({p for e in H.edges for p in combinations(e, 2)})
    result = []
    for size in range(0, len(H) + 1):
        for chosen in combinations(H.edges, size):
            options = [[p for p in pairs if p[0] in f and p[1] in f] for f in chosen]
            for pick in product(*options):
                if len(set(pick)) != len(pick):
                    continue
                rest = [f for f in H.edges if f not in chosen]
                if any(a in f and b in f for a, b in pick for f in rest):
                    continue
                result.append((pick, chosen))
    return result


def random_hypergraph(rng: random.Random, n: int, r: int, m: int) -> Hypergraph:
    universe = list(combinations(range(1, n + 1), r))
    return Hypergraph(n, r, rng.sample(universe, min(m, len(universe))))


def random_connected_hypergraph(rng: random.Random, n: int, r: int, m_max: int) -> Hypergraph:
    from bergecycles.hypergraph import is_connected_hypergraph

    universe = list(combinations(range(1, n + 1), r))
    lo = max(1, -(-(n - 1) // (r - 1)))
    hi = max(lo, min(m_max, len(universe)))
    while True:
        m = rng.randint(lo, hi)
        H = Hypergraph(n, r, rng.sample(universe, m))
        if is_connected_hypergraph(H):
            return H
