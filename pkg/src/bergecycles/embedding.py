"""Witnesses for Berge copies of a graph inside a hypergraph."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError
from .hypergraph import Edge, Hypergraph


@dataclass(frozen=True)
class BergeEmbedding:
    """Base vertices ``w_1..w_p`` and distinct hyperedges ``f_1..f_q``.

    ``pattern[i] = (a, b)`` holds indices into ``base`` and says that
    ``hyperedges[i]`` must contain ``base[a]`` and ``base[b]``. For ``kind``
    ``"path"`` the pattern is ``(i, i+1)``; for ``"cycle"`` it wraps around.
    """

    kind: str
    base: tuple[int, ...]
    hyperedges: tuple[Edge, ...]
    pattern: tuple[tuple[int, int], ...]

    @classmethod
    def path(cls, base, hyperedges) -> "BergeEmbedding":
        base = tuple(base)
        return cls("path", base, tuple(map(tuple, hyperedges)),
                   tuple((i, i + 1) for i in range(len(base) - 1)))

    @classmethod
    def cycle(cls, base, hyperedges) -> "BergeEmbedding":
        base = tuple(base)
        ell = len(base)
        return cls("cycle", base, tuple(map(tuple, hyperedges)),
                   tuple((i, (i + 1) % ell) for i in range(ell)))

    @property
    def length(self) -> int:
        return len(self.hyperedges)

    def base_pairs(self) -> list[tuple[int, int]]:
        return [(self.base[a], self.base[b]) for a, b in self.pattern]

    def problems(self, host: Hypergraph | None = None) -> list[str]:
        out = []
        if len(set(self.base)) != len(self.base):
            out.append("base vertices repeat")
        if len(set(self.hyperedges)) != len(self.hyperedges):
            out.append("hyperedges repeat")
        if len(self.pattern) != len(self.hyperedges):
            out.append("pattern and hyperedge lists differ in length")
        if self.kind == "cycle":
            ell = len(self.base)
            if ell < 2 or list(self.pattern) != [(i, (i + 1) % ell) for i in range(ell)]:
                out.append("not a cyclic pattern of length >= 2")
        elif self.kind == "path":
            if list(self.pattern) != [(i, i + 1) for i in range(len(self.base) - 1)]:
                out.append("not a path pattern")
        for (a, b), f in zip(self.pattern, self.hyperedges):
            u, v = self.base[a], self.base[b]
            if u not in f or v not in f:
                out.append(f"hyperedge {list(f)} misses pair {u}{v}")
        if host is not None:
            for f in self.hyperedges:
                if tuple(sorted(f)) not in host.edge_set:
                    out.append(f"{list(f)} is not an edge of the host")
        return out

    def is_valid(self, host: Hypergraph | None = None) -> bool:
        return not self.problems(host)

    def validate(self, host: Hypergraph | None = None) -> None:
        bad = self.problems(host)
        if bad:
            raise ConsistencyError("invalid Berge embedding: " + "; ".join(bad))

    def to_json(self) -> dict:
        return {
            "length": self.length,
            "base": list(self.base),
            "edges": [list(f) for f in self.hyperedges],
        }
