"""Plain edge-list format.

    # comment
    n m
    u v      (m lines, 0-based labels)

``#`` starts a comment anywhere on a line; blank lines are ignored.
"""

from __future__ import annotations

from .errors import GraphError, ParseError
from .graph import Graph, new_graph


def _ints(parts: list[str], lineno: int) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(parts)!r}", line=lineno) from None


def parse_edge_list(text: str) -> Graph:
    header = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split("#", 1)[0].split()
        if not parts:
            continue
        if len(parts) != 2:
            what = "header 'n m'" if header is None else "edge 'u v'"
            raise ParseError(f"expected {what}, got {raw.strip()!r}", line=lineno)
        a, b = _ints(parts, lineno)
        if header is None:
            if a < 1 or b < 0:
                raise ParseError(f"invalid header: n={a}, m={b}", line=lineno)
            header = (a, b)
            continue
        n, m = header
        if len(edges) == m:
            raise ParseError(f"more edge lines than the declared m={m}", line=lineno)
        if a == b:
            raise ParseError(f"self-loop ({a}, {b})", line=lineno)
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"label out of range [0, {n}) in ({a}, {b})", line=lineno)
        edges.append((a, b))
    if header is None:
        raise ParseError("missing header 'n m'", line=1)
    n, m = header
    if len(edges) != m:
        raise ParseError(f"declared m={m} edges but found {len(edges)}", line=len(text.splitlines()) or 1)
    try:
        return new_graph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def render_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"
