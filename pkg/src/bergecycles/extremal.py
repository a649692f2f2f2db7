"""Exact bound formulas, inequality verifiers and extremal constructions.

All bound arithmetic uses :class:`fractions.Fraction`; integer edge counts are
compared with exact rationals, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb
from typing import Iterator, Optional

from .berge import (
    DEFAULT_MAX_EDGES,
    DEFAULT_MAX_N,
    has_berge_cycle_geq,
    has_berge_path_geq,
)
from .errors import InvalidInputError, ParameterError
from .graphs import blocks
from .hypergraph import (
    Hypergraph,
    hypergraph_components,
    is_connected_hypergraph,
    shadow_complement,
    shadow_graph,
)
from .verdict import HOLDS, NOT_APPLICABLE, VIOLATION, Verdict


def c_r_k(k: int, r: int) -> Fraction:
    """Per-vertex coefficient ``C(k-1, r) / (k-2)`` of the long-Berge-cycle bound."""
    if k < 3 or r < 2 or k - 1 < r:
        raise ParameterError(f"need k >= 3, r >= 2, k - 1 >= r; got k={k}, r={r}")
    return Fraction(comb(k - 1, r), k - 2)


def cycle_bound(n: int, k: int, r: int) -> Fraction:
    return c_r_k(k, r) * (n - 1)


def a_r_w(w: int, r: int) -> int:
    """Cap on ``|H|`` plus uncovered pairs for a ``w``-vertex ``r``-graph."""
    if w < 2 or r < 2:
        raise ParameterError(f"need w >= 2 and r >= 2; got w={w}, r={r}")
    return comb(w, 2) if w <= r + 2 else comb(w, r)


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def bounds_table(rs, ks) -> list[tuple[int, int, Fraction]]:
    rows = []
    for r in rs:
        for k in ks:
            if k >= 3 and k - 1 >= r:
                rows.append((k, r, c_r_k(k, r)))
    return rows


def bounds_table_csv(rows) -> str:
    lines = ["k,r,C_r(k)"] + [f"{k},{r},{_frac(c)}" for k, r, c in rows]
    return "\n".join(lines) + "\n"


def verify_degree_inequality(k: int, r: int) -> Verdict:
    """Check ``a + C(s - a, r - 1) <= C_r(k)`` for all ``0 <= a <= s <= floor((k-1)/2)``.

    ``k = r + 2`` is accepted as a probe of the boundary case, where the
    inequality is expected to break.
    """
    if r < 3 or k < r + 2:
        raise ParameterError(f"need r >= 3 and k >= r + 2; got k={k}, r={r}")
    t = (k - 1) // 2
    bound = c_r_k(k, r)
    worst = None
    for s in range(t + 1):
        for a in range(s + 1):
            lhs = a + comb(s - a, r - 1)
            if worst is None or lhs > worst[0]:
                worst = (lhs, a, s)
    lhs, a, s = worst
    details = {"k": k, "r": r, "t": t, "bound": _frac(bound), "max_lhs": lhs,
               "argmax": {"a": a, "s": s}, "mode": "boundary" if k == r + 2 else "theorem"}
    if lhs <= bound:
        return Verdict(HOLDS, "degree-inequality", equality=lhs == bound, details=details)
    details["counterexample"] = {"a": a, "s": s, "lhs": lhs}
    return Verdict(VIOLATION, "degree-inequality", details=details)


def _is_complete(H: Hypergraph) -> bool:
    return len(H) == comb(H.n, H.r)


def verify_shadow_inequality(H: Hypergraph, k: Optional[int] = None) -> Verdict:
    """``|H| + #uncovered pairs <= a_r(w) <= (w - 1) C_r(k)`` with the equality characterisation.

    The second inequality is checked only when ``k`` is given, ``k >= r + 3``
    and ``w <= k - 1``.
    """
    w, r = H.n, H.r
    if w < 2:
        raise ParameterError("need at least two vertices")
    missing = len(shadow_complement(H))
    lhs = len(H) + missing
    cap = a_r_w(w, r)
    complete, empty = _is_complete(H), len(H) == 0
    if complete:
        branch = "H-complete"
    elif empty:
        branch = "complement-complete"
    else:
        branch = "mixed"
    details = {"w": w, "r": r, "edges": len(H), "uncovered_pairs": missing, "lhs": lhs,
               "a_r_w": cap, "first_equality": lhs == cap, "branch": branch}
    if lhs > cap:
        return Verdict(VIOLATION, "shadow-inequality", details=details)
    if k is None or not (2 <= w <= k - 1):
        details["second"] = "not-applicable"
        return Verdict(HOLDS, "shadow-inequality", equality=lhs == cap, details=details)
    if k < r + 3:
        raise ParameterError(f"second inequality needs k >= r + 3; got k={k}, r={r}")
    rhs = c_r_k(k, r) * (w - 1)
    details.update({"k": k, "rhs": _frac(rhs), "cap_equals_rhs": cap == rhs})
    if cap > rhs or (cap == rhs) != (w == k - 1):
        return Verdict(VIOLATION, "shadow-inequality", details=details)
    chain_equal = lhs == rhs
    if chain_equal:
        expected = w == k - 1 and ((w > r + 2 and complete) or (w == r + 2 and (complete or empty)))
        details["characterization"] = expected
        if not expected:
            return Verdict(VIOLATION, "shadow-inequality", equality=True, details=details)
    return Verdict(HOLDS, "shadow-inequality", equality=chain_equal, details=details)


@dataclass(frozen=True)
class BlockTreeSpec:
    """Blocks ``K_{k-1}`` glued along a tree.

    ``attachments[i-1] = (j, local)`` glues block ``i`` to block ``j < i`` at
    the ``local``-th vertex (0-based) of block ``j``.
    """

    k: int
    r: int
    attachments: tuple[tuple[int, int], ...] = ()

    @property
    def p(self) -> int:
        return len(self.attachments) + 1

    @property
    def n(self) -> int:
        return 1 + self.p * (self.k - 2)

    def validate(self) -> None:
        if self.k - 1 < self.r or self.r < 2:
            raise InvalidInputError(f"blocks K_{self.k - 1} cannot hold {self.r}-edges")
        for i, (j, local) in enumerate(self.attachments, start=1):
            if not (0 <= j < i) or not (0 <= local < self.k - 1):
                raise InvalidInputError(f"attachment {i} -> ({j}, {local}) is not a tree edge")

    @classmethod
    def chain(cls, k: int, r: int, p: int) -> "BlockTreeSpec":
        # attach to the last local vertex, which is never the previous cut vertex
        return cls(k, r, tuple((i - 1, k - 2) for i in range(1, p)))

    @classmethod
    def star(cls, k: int, r: int, p: int) -> "BlockTreeSpec":
        return cls(k, r, tuple((0, 0) for _ in range(1, p)))


def block_vertex_lists(spec: BlockTreeSpec) -> list[list[int]]:
    spec.validate()
    out = [list(range(1, spec.k))]
    nxt = spec.k
    for j, local in spec.attachments:
        cut = out[j][local]
        fresh = list(range(nxt, nxt + spec.k - 2))
        nxt += spec.k - 2
        out.append([cut] + fresh)
    return out


def build_block_tree(spec: BlockTreeSpec) -> Hypergraph:
    """Complete ``r``-graphs on ``k - 1`` vertices glued at cut vertices along a tree."""
    edges = []
    for verts in block_vertex_lists(spec):
        edges.extend(combinations(verts, spec.r))
    return Hypergraph(spec.n, spec.r, edges)


def all_attachment_patterns(k: int, r: int, p: int) -> Iterator[BlockTreeSpec]:
    """Every attachment list for ``p`` blocks (labelled, so isomorphic trees repeat)."""
    choices = [[(j, local) for j in range(i) for local in range(k - 1)] for i in range(1, p)]
    for att in product(*choices):
        yield BlockTreeSpec(k, r, tuple(att))


def block_characterization(H: Hypergraph, k: int) -> dict:
    """Is the 2-shadow connected with every block a ``K_{k-1}`` spanning a complete ``r``-graph?"""
    g = shadow_graph(H)
    dec = blocks(g)
    per_block = []
    for b in dec.blocks:
        w = b.size
        clique = len(b.edges) == comb(w, 2)
        inner = H.induced(b.vertices)
        full = len(inner) == comb(w, H.r)
        branch = "H-complete" if w > H.r + 2 else "w=r+2"
        per_block.append({"size": w, "clique": clique, "complete_r_graph": full,
                          "shadow_branch": branch})
    ok = (g.is_connected() and bool(dec.blocks)
          and all(pb["size"] == k - 1 and pb["clique"] and pb["complete_r_graph"] for pb in per_block))
    return {"holds": ok, "connected": g.is_connected(), "blocks": per_block}


def verify_cycle_bound(
    H: Hypergraph, k: int, max_n: int = DEFAULT_MAX_N, max_edges: int = DEFAULT_MAX_EDGES,
    use_blocks: bool = True,
) -> Verdict:
    """No Berge cycle of length >= k implies ``e(H) <= C_r(k)(n - 1)``, with the equality structure."""
    n, r = H.n, H.r
    if not (r >= 3 and k >= r + 3 and n >= k):
        raise ParameterError(f"need n >= k >= r + 3 >= 6; got n={n}, k={k}, r={r}")
    bound = cycle_bound(n, k, r)
    details = {"n": n, "k": k, "r": r, "edges": len(H), "bound": _frac(bound)}
    found, w = has_berge_cycle_geq(H, k, max_n, max_edges, use_blocks)
    if found:
        details["cycle"] = w.to_json()
        return Verdict(NOT_APPLICABLE, "cycle-bound", details=details)
    if len(H) > bound:
        return Verdict(VIOLATION, "cycle-bound", details=details)
    equal = len(H) == bound
    char = block_characterization(H, k)
    details["characterization"] = char
    if equal != char["holds"]:
        return Verdict(VIOLATION, "cycle-bound", equality=equal, details=details)
    return Verdict(HOLDS, "cycle-bound", equality=equal, details=details)


def check_path_bounds(
    H: Hypergraph, k: int, mode: str = "auto",
    max_n: int = DEFAULT_MAX_N, max_edges: int = DEFAULT_MAX_EDGES,
) -> Verdict:
    """Edge bounds for hypergraphs without Berge paths of length ``k``.

    ``mode="connected"`` applies ``e <= C_r(k)(n - 1)`` (connected, ``n >= k + 1``);
    ``mode="general"`` applies ``e <= (n / k) C(k, r)`` with equality only for
    disjoint copies of ``K_k^(r)``; ``"auto"`` applies whichever fit.
    """
    n, r = H.n, H.r
    if r < 3 or k < r + 3:
        raise ParameterError(f"need k >= r + 3 >= 6; got k={k}, r={r}")
    connected = is_connected_hypergraph(H)
    if mode == "connected":
        if not connected:
            raise InvalidInputError("connected-mode path bound needs a connected hypergraph")
        if n < k + 1:
            raise InvalidInputError(f"connected-mode path bound needs n >= k + 1 = {k + 1}")
    elif mode == "general":
        if n < k:
            raise InvalidInputError(f"general path bound needs n >= k = {k}")
    elif mode != "auto":
        raise ParameterError(f"unknown mode {mode!r}")
    details: dict = {"n": n, "k": k, "r": r, "edges": len(H), "connected": connected}
    long_path, w = has_berge_path_geq(H, k, max_n, max_edges)
    if long_path:
        details["path"] = w.to_json()
        return Verdict(NOT_APPLICABLE, "path-bounds", details=details)
    checks = {}
    status, equality = HOLDS, False
    if mode in ("auto", "general") and n >= k:
        bound = Fraction(n * comb(k, r), k)
        eq = len(H) == bound
        comps = hypergraph_components(H)
        all_complete = all(
            len(c) == k and len(H.induced(c)) == comb(k, r) for c in comps
        )
        ok = len(H) <= bound and (not eq or all_complete)
        checks["general"] = {"bound": _frac(bound), "holds": ok, "equality": eq,
                             "components_complete": all_complete}
        equality |= eq
        if not ok:
            status = VIOLATION
    if mode in ("auto", "connected") and connected and n >= k + 1:
        bound = cycle_bound(n, k, r)
        ok = len(H) <= bound
        checks["connected"] = {"bound": _frac(bound), "holds": ok, "equality": len(H) == bound}
        equality |= len(H) == bound
        if not ok:
            status = VIOLATION
    details["checks"] = checks
    if not checks:
        return Verdict(NOT_APPLICABLE, "path-bounds", details=details)
    return Verdict(status, "path-bounds", equality=equality, details=details)


def verify_gkl_path_bound(
    H: Hypergraph, k: int, max_n: int = DEFAULT_MAX_N, max_edges: int = DEFAULT_MAX_EDGES,
) -> Verdict:
    """Path bounds in the two regimes ``k >= r + 2 >= 5`` and ``r >= k >= 3``."""
    n, r = H.n, H.r
    details: dict = {"n": n, "k": k, "r": r, "edges": len(H)}
    if k >= r + 2 and r >= 3:
        bound = Fraction(n * comb(k, r), k)
        details["regime"] = "long"
    elif r >= k >= 3:
        bound = Fraction(n * (k - 1), r + 1)
        details["regime"] = "short"
    else:
        details["reason"] = "k = r + 1" if k == r + 1 else "outside both regimes"
        return Verdict(NOT_APPLICABLE, "gkl-path-bound", details=details)
    details["bound"] = _frac(bound)
    long_path, w = has_berge_path_geq(H, k, max_n, max_edges)
    if long_path:
        details["path"] = w.to_json()
        return Verdict(NOT_APPLICABLE, "gkl-path-bound", details=details)
    if len(H) > bound:
        return Verdict(VIOLATION, "gkl-path-bound", details=details)
    return Verdict(HOLDS, "gkl-path-bound", equality=len(H) == bound, details=details)


def erdos_gallai_cycle_bound(n: int, k: int) -> Fraction:
    """Maximum edges of an ``n``-vertex graph with no cycle of length ``>= k``: ``(k-1)(n-1)/2``."""
    return Fraction((k - 1) * (n - 1), 2)


def erdos_gallai_path_bound(n: int, k: int) -> Fraction:
    """Maximum edges of an ``n``-vertex graph with no path on ``k`` vertices: ``(k-2)n/2``."""
    return Fraction((k - 2) * n, 2)
