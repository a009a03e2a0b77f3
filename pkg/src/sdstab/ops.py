"""Binary graph operations with fixed label layouts.

* join / union: ``g``'s vertices keep their labels, ``h``'s are shifted by ``|V(g)|``.
* corona: ``g``'s vertices first, then one copy of ``h`` per vertex of ``g`` in order.
* cartesian: vertex ``(a, b)`` gets label ``a * |V(h)| + b``.
"""

from __future__ import annotations

from .graph import Graph, new_graph


def _shifted(h: Graph, offset: int) -> list[tuple[int, int]]:
    return [(u + offset, v + offset) for u, v in h.edges()]


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return new_graph(g.n + h.n, g.edges() + _shifted(h, g.n))


def join(g: Graph, h: Graph) -> Graph:
    cross = [(u, g.n + v) for u in range(g.n) for v in range(h.n)]
    return new_graph(g.n + h.n, g.edges() + _shifted(h, g.n) + cross)


def corona(g: Graph, h: Graph) -> Graph:
    edges = g.edges()
    for i in range(g.n):
        base = g.n + i * h.n
        edges += _shifted(h, base)
        edges += [(i, base + v) for v in range(h.n)]
    return new_graph(g.n * (1 + h.n), edges)


def cartesian(g: Graph, h: Graph) -> Graph:
    m = h.n
    edges = []
    for a in range(g.n):
        edges += [(a * m + u, a * m + v) for u, v in h.edges()]
    for u, v in g.edges():
        edges += [(u * m + b, v * m + b) for b in range(m)]
    return new_graph(g.n * m, edges)
