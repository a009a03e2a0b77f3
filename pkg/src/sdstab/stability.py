"""Vertex-removal stability of the strong domination number.

``stability(g)`` is the least ``k`` such that deleting some ``k`` vertices
changes gamma_st.  When no proper deletion changes it (this happens exactly
for complete graphs) the result is :class:`Unbounded`, carrying the
conventional value ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional, Union

from .errors import CapExceeded, GraphError, StabilityUndefined
from .graph import Graph, VertexSet, induced_masks, new_graph
from .strongdom import gamma_st_bruteforce, gamma_st_value

STABILITY_CAP = 14


@dataclass(frozen=True)
class Finite:
    k: int
    removal: VertexSet
    gamma_before: int
    gamma_after: int

    @property
    def critical(self) -> bool:
        return self.gamma_after > self.gamma_before

    @property
    def value(self) -> int:
        return self.k


@dataclass(frozen=True)
class Unbounded:
    conventional_value: int
    gamma_before: int

    @property
    def value(self) -> int:
        return self.conventional_value

    critical = False


StabilityResult = Union[Finite, Unbounded]


def _oracle_value(masks: tuple[int, ...]) -> int:
    g = new_graph(len(masks), [(u, v) for u in range(len(masks)) for v in range(u + 1, len(masks)) if masks[u] >> v & 1])
    return gamma_st_bruteforce(g).value


def _solver(oracle: bool) -> Callable[[tuple[int, ...]], int]:
    return _oracle_value if oracle else gamma_st_value


def _check_size(g: Graph, cap: int) -> None:
    if g.n == 1:
        raise StabilityUndefined("stability undefined for K_1")
    if g.n > cap:
        raise CapExceeded(f"stability refuses n={g.n} > cap {cap}")


def _after(g: Graph, S, value) -> int:
    keep = g.full_mask
    for v in S:
        keep &= ~(1 << v)
    return value(induced_masks(g.masks, keep))


def stability(g: Graph, *, oracle: bool = False, cap: int = STABILITY_CAP) -> StabilityResult:
    """Least removal set changing gamma_st; the witness is lexicographically least."""
    _check_size(g, cap)
    value = _solver(oracle)
    before = value(g.masks)
    for k in range(1, g.n):
        for S in combinations(range(g.n), k):
            after = _after(g, S, value)
            if after != before:
                return Finite(k, frozenset(S), before, after)
    return Unbounded(g.n, before)


def stability_profile(g: Graph, *, oracle: bool = False,
                      cap: int = STABILITY_CAP) -> tuple[Optional[int], Optional[int]]:
    """(least k that can increase gamma_st, least k that can decrease it)."""
    _check_size(g, cap)
    value = _solver(oracle)
    before = value(g.masks)
    up = down = None
    for k in range(1, g.n):
        for S in combinations(range(g.n), k):
            after = _after(g, S, value)
            if after > before and up is None:
                up = k
            elif after < before and down is None:
                down = k
            if up is not None and down is not None:
                return up, down
    return up, down


def verify_stability_witness(g: Graph, S, *, oracle: bool = False) -> bool:
    S = frozenset(S)
    if not 1 <= len(S) <= g.n - 1:
        raise GraphError(f"removal set size {len(S)} outside [1, {g.n - 1}]")
    for v in S:
        g._check(v)
    value = _solver(oracle)
    return _after(g, S, value) != value(g.masks)
