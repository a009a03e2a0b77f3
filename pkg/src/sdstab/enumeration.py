"""Labeled graph enumeration by edge-subset code.

Pairs ``(u, v)`` with ``u < v`` are numbered in lexicographic order; bit ``i``
of a code says whether pair ``i`` is an edge.  Code 0 is ``E_n`` and the
all-ones code is ``K_n``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

from .errors import CapExceeded
from .graph import Graph

ENUMERATION_CAP = 7
DEDUP_CAP = 8


@lru_cache(maxsize=None)
def pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))


@lru_cache(maxsize=None)
def pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: i for i, p in enumerate(pairs(n))}


def num_codes(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def masks_from_code(n: int, code: int) -> tuple[int, ...]:
    masks = [0] * n
    for i, (u, v) in enumerate(pairs(n)):
        if code >> i & 1:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
    return tuple(masks)


def graph_from_code(n: int, code: int) -> Graph:
    return Graph(n, masks_from_code(n, code))


def code_of(g: Graph) -> int:
    code = 0
    for i, (u, v) in enumerate(pairs(g.n)):
        if g.masks[u] >> v & 1:
            code |= 1 << i
    return code


def describe_code(n: int, code: int) -> str:
    edges = " ".join(f"{u}-{v}" for i, (u, v) in enumerate(pairs(n)) if code >> i & 1)
    return f"n={n} code={code} edges=[{edges}]"


class GraphStream:
    """All ``2^C(n,2)`` labeled graphs of order ``n`` in code order."""

    def __init__(self, n: int, start: int = 0, stop: int | None = None):
        if not 1 <= n <= ENUMERATION_CAP:
            raise CapExceeded(f"enumeration order must be in [1, {ENUMERATION_CAP}], got {n}")
        total = num_codes(n)
        self.n = n
        self.start = start
        self.stop = total if stop is None else min(stop, total)

    def __len__(self):
        return max(0, self.stop - self.start)

    def __iter__(self):
        for code in range(self.start, self.stop):
            yield graph_from_code(self.n, code)

    def codes(self) -> range:
        return range(self.start, self.stop)

    def split(self, parts: int) -> list[GraphStream]:
        """Contiguous code ranges, for handing to separate workers."""
        size = -(-len(self) // max(1, parts))
        return [GraphStream(self.n, lo, min(lo + size, self.stop))
                for lo in range(self.start, self.stop, max(1, size))]


def all_labeled_graphs(n: int) -> GraphStream:
    return GraphStream(n)


@lru_cache(maxsize=None)
def _permuted_pair_indices(n: int) -> tuple[tuple[int, ...], ...]:
    idx = pair_index(n)
    out = []
    for perm in permutations(range(n)):
        row = []
        for u, v in pairs(n):
            a, b = perm[u], perm[v]
            row.append(idx[(a, b) if a < b else (b, a)])
        out.append(tuple(row))
    return tuple(out)


def dedup_key(g: Graph) -> tuple[int, int]:
    """Isomorphism-invariant key: the least code over all relabelings."""
    if g.n > DEDUP_CAP:
        raise CapExceeded(f"dedup_key refuses n={g.n} > cap {DEDUP_CAP}")
    present = [i for i, (u, v) in enumerate(pairs(g.n)) if g.masks[u] >> v & 1]
    best = None
    for row in _permuted_pair_indices(g.n):
        code = 0
        for i in present:
            code |= 1 << row[i]
        if best is None or code < best:
            best = code
    return (g.n, best or 0)
