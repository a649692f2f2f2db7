"""Exhaustive search for the most edges in an r-graph without long Berge cycles."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from math import comb, floor
from typing import Optional

from .berge import has_berge_cycle_geq
from .canon import DEFAULT_CANON_BUDGET, augmentation_levels
from .errors import BudgetExceeded, ParameterError
from .extremal import cycle_bound
from .fileio import format_hyg
from .hypergraph import Hypergraph

THEOREM = "theorem"
CONJECTURE = "conjecture"


@dataclass(frozen=True)
class BoundParams:
    n: int
    r: int
    k: int
    mode: str = THEOREM

    @property
    def t(self) -> int:
        return (self.k - 1) // 2

    def validate(self) -> None:
        if self.mode == THEOREM:
            if not (self.r >= 3 and self.k >= self.r + 3):
                raise ParameterError(f"theorem mode needs k >= r + 3 >= 6; got k={self.k}, r={self.r}")
        elif self.mode == CONJECTURE:
            if not (self.r >= 3 and self.k == self.r + 2):
                raise ParameterError(f"conjecture mode needs k = r + 2 with r >= 3; got k={self.k}, r={self.r}")
        else:
            raise ParameterError(f"unknown mode {self.mode!r}")
        if self.n < 2 or self.n < self.r:
            raise ParameterError(f"need n >= max(2, r); got n={self.n}")

    @property
    def bound(self) -> Fraction:
        return cycle_bound(self.n, self.k, self.r)


@dataclass
class SearchReport:
    params: BoundParams
    max_edges_found: int
    witness: Hypergraph
    exhaustive: bool
    isomorphism_classes_visited: int
    elapsed: float
    level_sizes: list[int] = field(default_factory=list)

    @property
    def bound(self) -> Fraction:
        return self.params.bound

    @property
    def within_bound(self) -> bool:
        return self.max_edges_found <= floor(self.bound)

    def to_json(self, include_time: bool = True) -> dict:
        p = self.params
        out = {
            "params": {"n": p.n, "r": p.r, "k": p.k, "mode": p.mode},
            "max_edges": self.max_edges_found,
            "bound_numerator": self.bound.numerator,
            "bound_denominator": self.bound.denominator,
            "within_bound": self.within_bound,
            "witness_hyg": format_hyg(self.witness),
            "exhaustive": self.exhaustive,
            "classes_visited": self.isomorphism_classes_visited,
            "elapsed_ms": int(round(self.elapsed * 1000)) if include_time else 0,
        }
        return out


def _free_of_long_cycles(k: int, H: Hypergraph) -> bool:
    found, _ = has_berge_cycle_geq(H, k, max_n=64, max_edges=comb(H.n, H.r))
    return not found


def search_max_edges(
    params: BoundParams,
    max_classes: Optional[int] = None,
    time_limit: Optional[float] = None,
    jobs: int = 1,
    max_n: int = DEFAULT_CANON_BUDGET,
) -> SearchReport:
    """Largest edge count of an ``r``-graph on ``n`` vertices with no Berge cycle of length ``>= k``.

    Isomorph-free generation by single-edge augmentation: level ``m`` holds one
    representative per class of cycle-free ``r``-graphs with ``m`` edges.
    Having no long Berge cycle is inherited by subhypergraphs, so pruning a
    class that has one loses nothing. When a budget runs out the report is a
    lower bound with ``exhaustive=False``.
    """
    params.validate()
    if params.n > max_n:
        raise BudgetExceeded(f"enumeration limited to n <= {max_n}")
    start = time.perf_counter()
    keep = partial(_free_of_long_cycles, params.k)
    stats: dict = {"candidates": 0}
    best = Hypergraph(params.n, params.r)
    sizes = []
    exhaustive = True
    pool = ProcessPoolExecutor(jobs) if jobs > 1 else None
    mapper = (lambda f, xs: pool.map(f, xs, chunksize=16)) if pool else map
    try:
        for level in augmentation_levels(params.n, params.r, keep, max_n, mapper, stats):
            sizes.append(len(level))
            best = level[0][1]
            over_classes = max_classes is not None and stats["candidates"] > max_classes
            over_time = time_limit is not None and time.perf_counter() - start > time_limit
            if over_classes or over_time:
                exhaustive = False
                break
    finally:
        if pool:
            pool.shutdown()
    return SearchReport(
        params=params,
        max_edges_found=len(best),
        witness=best,
        exhaustive=exhaustive,
        isomorphism_classes_visited=stats["candidates"] + 1,
        elapsed=time.perf_counter() - start,
        level_sizes=sizes,
    )
