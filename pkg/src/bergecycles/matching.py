"""Bipartite matching by augmenting paths, with Hall-violator extraction.

Left vertices are ``0..len(adj)-1``; ``adj[i]`` lists the right vertices
(hashable ids) adjacent to left vertex ``i`` in the order they should be
tried. Everything is deterministic for a fixed ``adj``.
"""

from __future__ import annotations

from typing import Hashable, Sequence


def augment(adj: Sequence[Sequence[Hashable]], match_left: list, match_right: dict, u: int) -> bool:
    """Try to match left vertex ``u`` along an augmenting path; mutates the matching."""
    seen = set()

    def visit(x):
        for y in adj[x]:
            if y in seen:
                continue
            seen.add(y)
            if y not in match_right or visit(match_right[y]):
                match_left[x] = y
                match_right[y] = x
                return True
        return False

    return visit(u)


def max_matching(adj: Sequence[Sequence[Hashable]]) -> tuple[list, dict]:
    """Maximum matching; returns ``(match_left, match_right)`` with ``None`` for unmatched left."""
    match_left: list = [None] * len(adj)
    match_right: dict = {}
    for u in range(len(adj)):
        augment(adj, match_left, match_right, u)
    return match_left, match_right


def alternating_reach(adj, match_left, match_right, start: int) -> tuple[set[int], set]:
    """Left and right vertices reachable from unmatched left ``start`` by alternating paths.

    When the matching is maximum, every reached right vertex is matched to a
    reached left vertex, so ``|right| = |left| - 1``: the reached left set is a
    Hall violator.
    """
    left = {start}
    right = set()
    queue = [start]
    while queue:
        x = queue.pop()
        for y in adj[x]:
            if y in right:
                continue
            right.add(y)
            z = match_right.get(y)
            if z is not None and z not in left:
                left.add(z)
                queue.append(z)
    return left, right
