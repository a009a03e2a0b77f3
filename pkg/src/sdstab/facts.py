"""Lazily computed graph invariants behind one interface.

Claim predicates read attributes such as ``gamma``, ``st`` or ``kappa`` from a
facts object without caring where the numbers come from.  ``GraphFacts``
computes them on a concrete graph (optionally with the brute-force inner
solver); ``TableFacts`` reads precomputed sweep tables.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations

from .enumeration import describe_code, graph_from_code, masks_from_code
from .graph import (Graph, bits, complement, delete_vertices, is_connected,
                    vertex_connectivity)
from .stability import STABILITY_CAP, Unbounded, stability
from .strongdom import gamma_st, gamma_st_bruteforce, is_strong_dominating
from .sweep import TableRows, _child_pair_sources


def _star_leaves(g: Graph) -> int:
    best = 0
    for v in range(g.n):
        nb = bits(g.masks[v])
        for t in range(len(nb), max(best, 2), -1):
            if any(all(not g.masks[a] >> b & 1 for a, b in combinations(L, 2)) for L in combinations(nb, t)):
                best = t
                break
    return best


class Facts:
    n: int
    label: str

    # shared derived predicates
    @cached_property
    def min_degree(self) -> int:
        return min(self.degrees)

    @cached_property
    def max_degree_count(self) -> int:
        top = max(self.degrees)
        return sum(d == top for d in self.degrees)

    @cached_property
    def universal_count(self) -> int:
        return sum(d == self.n - 1 for d in self.degrees)

    @cached_property
    def lonely_min_vertex(self) -> bool:
        """Some minimum-degree vertex has only strictly higher-degree neighbours."""
        degs = self.degrees
        d = min(degs)
        return any(degs[v] == d and all(degs[u] > d for u in bits(self.masks[v])) for v in range(self.n))

    @cached_property
    def minimum_pairs(self) -> list[tuple[int, int]]:
        """All strong dominating sets of size 2 (meaningful when gamma == 2)."""
        g = self.graph
        return [p for p in combinations(range(self.n), 2) if is_strong_dominating(g, p)]


class GraphFacts(Facts):
    def __init__(self, g: Graph, oracle: bool = False, label: str | None = None, cap: int = STABILITY_CAP):
        self.graph = g
        self.n = g.n
        self.oracle = oracle
        self.cap = cap
        self.label = label or f"n={g.n} edges={g.edges()}"

    @property
    def masks(self):
        return self.graph.masks

    @cached_property
    def degrees(self) -> list[int]:
        return self.graph.degrees()

    @cached_property
    def gamma(self) -> int:
        if self.oracle:
            return gamma_st_bruteforce(self.graph).value
        return gamma_st(self.graph).value

    @cached_property
    def stab(self):
        return stability(self.graph, oracle=self.oracle, cap=self.cap)

    @property
    def st(self) -> int:
        return self.stab.value

    @property
    def unbounded(self) -> bool:
        return isinstance(self.stab, Unbounded)

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.graph)

    @cached_property
    def kappa(self) -> int:
        return vertex_connectivity(self.graph)

    @cached_property
    def star_t(self) -> int:
        return _star_leaves(self.graph)

    def complement(self) -> GraphFacts:
        return GraphFacts(complement(self.graph), self.oracle, f"complement of {self.label}", self.cap)

    def deleted(self, v: int) -> GraphFacts:
        return GraphFacts(delete_vertices(self.graph, [v]), self.oracle, f"{self.label} minus {v}", self.cap)


class TableFacts(Facts):
    def __init__(self, rows: TableRows, code: int):
        self.rows = rows
        self.n = rows.n
        self.code = code

    @property
    def label(self) -> str:
        return describe_code(self.n, self.code)

    @cached_property
    def graph(self) -> Graph:
        return graph_from_code(self.n, self.code)

    @cached_property
    def masks(self):
        return masks_from_code(self.n, self.code)

    @property
    def degrees(self):
        return self.rows.degrees[self.code]

    @property
    def gamma(self) -> int:
        return self.rows.gamma[self.code]

    @property
    def st(self) -> int:
        return self.rows.st[self.code]

    @property
    def unbounded(self) -> bool:
        return self.st == self.n

    @property
    def connected(self) -> bool:
        return self.rows.connected[self.code]

    @property
    def kappa(self) -> int:
        return self.rows.kappa[self.code]

    @property
    def star_t(self) -> int:
        return self.rows.star[self.code]

    def complement(self) -> TableFacts:
        return TableFacts(self.rows, self.code ^ self.rows.last)

    def deleted(self, v: int) -> TableFacts:
        m, sources = _child_pair_sources(self.n, 1 << v)
        child = 0
        for c, src in enumerate(sources):
            child |= (self.code >> src & 1) << c
        return TableFacts(self.rows.tables.rows(m), child)
