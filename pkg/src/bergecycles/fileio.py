"""Readers and writers for the ``.hyg`` (hypergraph) and ``.elg`` (edge list) formats.

``.hyg``: first non-comment line ``n r``, then one edge per line as ``r``
space-separated 1-based vertex ids. ``.elg``: first line ``n``, then one
``u v`` pair per line. In both, lines starting with ``#`` are comments and
blank lines are skipped. Duplicate edges are rejected.
"""

from __future__ import annotations

from pathlib import Path

from .errors import InvalidInputError
from .hypergraph import Hypergraph, SimpleGraph


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _ints(line: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise InvalidInputError(f"line {lineno}: expected integers, got {line!r}") from None


def parse_hyg(text: str) -> Hypergraph:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise InvalidInputError("empty .hyg input: missing 'n r' header") from None
    head = _ints(header, lineno)
    if len(head) != 2:
        raise InvalidInputError(f"line {lineno}: header must be 'n r'")
    n, r = head
    edges = []
    seen = set()
    for lineno, line in lines:
        e = _ints(line, lineno)
        if len(e) != r:
            raise InvalidInputError(f"line {lineno}: edge must list {r} vertices")
        key = tuple(sorted(e))
        if key in seen:
            raise InvalidInputError(f"line {lineno}: duplicate edge {list(key)}")
        seen.add(key)
        edges.append(key)
    return Hypergraph(n, r, edges)


def format_hyg(H: Hypergraph, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {c}" for c in comment.splitlines())
    out.append(f"{H.n} {H.r}")
    out.extend(" ".join(map(str, e)) for e in H.edges)
    return "\n".join(out) + "\n"


def parse_elg(text: str) -> SimpleGraph:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise InvalidInputError("empty .elg input: missing vertex count") from None
    head = _ints(header, lineno)
    if len(head) != 1:
        raise InvalidInputError(f"line {lineno}: header must be the vertex count")
    n = head[0]
    edges = []
    seen = set()
    for lineno, line in lines:
        e = _ints(line, lineno)
        if len(e) != 2:
            raise InvalidInputError(f"line {lineno}: expected a 'u v' pair")
        key = tuple(sorted(e))
        if key in seen:
            raise InvalidInputError(f"line {lineno}: duplicate edge {list(key)}")
        seen.add(key)
        edges.append(key)
    return SimpleGraph(n, edges)


def format_elg(G: SimpleGraph) -> str:
    return "\n".join([str(G.n)] + [f"{u} {v}" for u, v in G.edges]) + "\n"


def read_hyg(path: str | Path) -> Hypergraph:
    return parse_hyg(Path(path).read_text())


def write_hyg(H: Hypergraph, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_hyg(H, comment))


def read_elg(path: str | Path) -> SimpleGraph:
    return parse_elg(Path(path).read_text())


def write_elg(G: SimpleGraph, path: str | Path) -> None:
    Path(path).write_text(format_elg(G))
