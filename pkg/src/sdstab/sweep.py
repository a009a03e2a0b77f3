"""Per-order lookup tables over every labeled graph, for exhaustive bound checks.

gamma_st is solved once per code with the exact solver; stability,
connectivity and vertex-deletion lookups are then derived with vectorised
code arithmetic: deleting a vertex set maps every parent code to the code of
the induced (relabeled) child graph of smaller order.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from functools import cached_property, lru_cache
from itertools import combinations

import numpy as np

from .enumeration import GraphStream, graph_from_code, masks_from_code, num_codes, pair_index, pairs
from .graph import component_masks
from .strongdom import gamma_st_bruteforce, gamma_st_value


def _gamma_chunk(args: tuple[int, int, int, bool]) -> list[int]:
    n, lo, hi, oracle = args
    if oracle:
        return [gamma_st_bruteforce(graph_from_code(n, c)).value for c in range(lo, hi)]
    return [gamma_st_value(masks_from_code(n, c)) for c in range(lo, hi)]


@lru_cache(maxsize=None)
def _child_pair_sources(n: int, removed: int) -> tuple[int, tuple[int, ...]]:
    """Order of ``G - removed`` and, per child pair, the parent pair index."""
    kept = [v for v in range(n) if not removed >> v & 1]
    idx = pair_index(n)
    return len(kept), tuple(idx[(kept[i], kept[j])] for i, j in pairs(len(kept)))


class SweepTables:
    """Lazily built per-order arrays indexed by graph code."""

    def __init__(self, jobs: int = 1, oracle: bool = False):
        self.jobs = max(1, jobs)
        self.oracle = oracle
        self._codes: dict[int, np.ndarray] = {}
        self._gamma: dict[int, np.ndarray] = {}
        self._connected: dict[int, np.ndarray] = {}
        self._stability: dict[int, np.ndarray] = {}
        self._kappa: dict[int, np.ndarray] = {}
        self._degrees: dict[int, np.ndarray] = {}
        self._star: dict[int, np.ndarray] = {}
        self._rows: dict[int, TableRows] = {}

    def rows(self, n: int) -> TableRows:
        if n not in self._rows:
            self._rows[n] = TableRows(self, n)
        return self._rows[n]

    def codes(self, n: int) -> np.ndarray:
        if n not in self._codes:
            GraphStream(n)  # cap check
            self._codes[n] = np.arange(num_codes(n), dtype=np.int64)
        return self._codes[n]

    def child_codes(self, n: int, removed: int, codes: np.ndarray | None = None) -> tuple[int, np.ndarray]:
        m, sources = _child_pair_sources(n, removed)
        codes = self.codes(n) if codes is None else codes
        child = np.zeros_like(codes)
        for c, src in enumerate(sources):
            child |= ((codes >> src) & 1) << c
        return m, child

    def complement_codes(self, n: int) -> np.ndarray:
        return self.codes(n) ^ (num_codes(n) - 1)

    def gamma(self, n: int) -> np.ndarray:
        if n not in self._gamma:
            stream = GraphStream(n)
            if self.jobs > 1 and len(stream) >= 4096:
                chunks = [(n, s.start, s.stop, self.oracle) for s in stream.split(self.jobs * 4)]
                with ProcessPoolExecutor(self.jobs) as pool:
                    values = [v for part in pool.map(_gamma_chunk, chunks) for v in part]
            else:
                values = _gamma_chunk((n, 0, len(stream), self.oracle))
            self._gamma[n] = np.array(values, dtype=np.int16)
        return self._gamma[n]

    def connected(self, n: int) -> np.ndarray:
        if n not in self._connected:
            self._connected[n] = np.array(
                [len(component_masks(masks_from_code(n, c))) == 1 for c in range(num_codes(n))], dtype=bool)
        return self._connected[n]

    def _removal_sets(self, n: int, k: int):
        for S in combinations(range(n), k):
            yield sum(1 << v for v in S)

    def stability(self, n: int) -> np.ndarray:
        """st for every code of order ``n >= 2``; complete graphs get ``n``."""
        if n not in self._stability:
            before = self.gamma(n)
            st = np.zeros(num_codes(n), dtype=np.int16)
            for k in range(1, n):
                open_ = st == 0
                if not open_.any():
                    break
                for removed in self._removal_sets(n, k):
                    m, child = self.child_codes(n, removed)
                    changed = self.gamma(m)[child] != before
                    st[open_ & changed] = k
                    open_ &= ~changed
            st[st == 0] = n
            self._stability[n] = st
        return self._stability[n]

    def unbounded(self, n: int) -> np.ndarray:
        return self.codes(n) == num_codes(n) - 1

    def kappa(self, n: int) -> np.ndarray:
        if n not in self._kappa:
            kap = np.full(num_codes(n), -1, dtype=np.int16)
            kap[~self.connected(n)] = 0
            for k in range(1, n - 1):
                open_ = kap < 0
                if not open_.any():
                    break
                for removed in self._removal_sets(n, k):
                    m, child = self.child_codes(n, removed)
                    cut = ~self.connected(m)[child]
                    kap[open_ & cut] = k
                    open_ &= ~cut
            kap[kap < 0] = n - 1
            self._kappa[n] = kap
        return self._kappa[n]

    def degrees(self, n: int) -> np.ndarray:
        """Array of shape (codes, n)."""
        if n not in self._degrees:
            codes = self.codes(n)
            deg = np.zeros((len(codes), n), dtype=np.int16)
            for i, (u, v) in enumerate(pairs(n)):
                bit = ((codes >> i) & 1).astype(np.int16)
                deg[:, u] += bit
                deg[:, v] += bit
            self._degrees[n] = deg
        return self._degrees[n]

    def star_leaves(self, n: int) -> np.ndarray:
        """Largest t with an induced K_{1,t} (t >= 3), else 0."""
        if n not in self._star:
            codes = self.codes(n)
            idx = pair_index(n)
            best = np.zeros(len(codes), dtype=np.int16)
            for v in range(n):
                others = [u for u in range(n) if u != v]
                for t in range(3, n):
                    for leaves in combinations(others, t):
                        spokes = np.ones(len(codes), dtype=bool)
                        for u in leaves:
                            spokes &= ((codes >> idx[(min(u, v), max(u, v))]) & 1).astype(bool)
                        removed = self.full(n) & ~sum(1 << u for u in leaves)
                        _, child = self.child_codes(n, removed)
                        hit = spokes & (child == 0)
                        best[hit] = np.maximum(best[hit], t)
            self._star[n] = best
        return self._star[n]

    @staticmethod
    def full(n: int) -> int:
        return (1 << n) - 1


class TableRows:
    """Python-list views of one order's tables, for fast scalar access."""

    def __init__(self, tables: SweepTables, n: int):
        self.tables = tables
        self.n = n
        self.last = num_codes(n) - 1

    @cached_property
    def gamma(self) -> list[int]:
        return self.tables.gamma(self.n).tolist()

    @cached_property
    def degrees(self) -> list[list[int]]:
        return self.tables.degrees(self.n).tolist()

    @cached_property
    def connected(self) -> list[bool]:
        return self.tables.connected(self.n).tolist()

    @cached_property
    def st(self) -> list[int]:
        return self.tables.stability(self.n).tolist()

    @cached_property
    def kappa(self) -> list[int]:
        return self.tables.kappa(self.n).tolist()

    @cached_property
    def star(self) -> list[int]:
        return self.tables.star_leaves(self.n).tolist()
