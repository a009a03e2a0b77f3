"""Exact strong domination number with witnesses.

A vertex ``u`` *strongly covers* itself and every neighbour ``v`` with
``deg(v) <= deg(u)``; a strong dominating set is a set whose strong covers
union to ``V``.  The exact solver works per connected component: it puts the
forced vertices in first, then searches candidate sets in lexicographic
order for increasing sizes, so the first set found is the lexicographically
least minimum witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import CapExceeded, GraphError
from .graph import Graph, VertexSet, bits, component_masks, degree

BRUTEFORCE_CAP = 16


@dataclass(frozen=True)
class GammaResult:
    value: int
    witness: VertexSet

    def sorted_witness(self) -> list[int]:
        return sorted(self.witness)


def _check_subset(g: Graph, D) -> frozenset[int]:
    D = frozenset(D)
    for v in D:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range [0, {g.n})")
    return D


def is_strong_dominating(g: Graph, D) -> bool:
    D = _check_subset(g, D)
    for v in range(g.n):
        if v in D:
            continue
        dv = degree(g, v)
        if not any(u in D and degree(g, u) >= dv for u in g.neighbors(v)):
            return False
    return True


def is_dominating(g: Graph, D) -> bool:
    D = _check_subset(g, D)
    return all(v in D or g.neighbors(v) & D for v in range(g.n))


def _covers(masks: tuple[int, ...], strong: bool) -> list[int]:
    degs = [m.bit_count() for m in masks]
    out = []
    for u, m in enumerate(masks):
        c = 1 << u
        if strong:
            for v in bits(m):
                if degs[v] <= degs[u]:
                    c |= 1 << v
        else:
            c |= m
        out.append(c)
    return out


def _forced_mask(masks: tuple[int, ...], covers: list[int]) -> int:
    # v is forced iff only v itself covers v
    forced = 0
    for v, m in enumerate(masks):
        if not any(covers[u] >> v & 1 for u in bits(m)):
            forced |= 1 << v
    return forced


def _solve_component(comp: int, covers: list[int], forced: int) -> int:
    target = comp
    covered0 = 0
    for f in bits(forced & comp):
        covered0 |= covers[f]
    if covered0 & target == target:
        return forced & comp
    cands = bits(comp & ~forced)
    # holders[v]: candidates that cover v
    holders = {v: 0 for v in bits(comp)}
    for u in cands:
        for v in bits(covers[u] & comp):
            holders[v] |= 1 << u
    index_of = {u: i for i, u in enumerate(cands)}

    def search(idx: int, covered: int, rem: int, chosen: int) -> int | None:
        uncovered = target & ~covered
        if not uncovered:
            return chosen
        if rem == 0:
            return None
        low = uncovered & -uncovered
        v = low.bit_length() - 1
        later = holders[v] >> cands[idx] << cands[idx] if idx < len(cands) else 0
        if not later:
            return None
        need = uncovered.bit_count()
        best = 0
        for j in range(idx, len(cands)):
            c = (covers[cands[j]] & uncovered).bit_count()
            if c > best:
                best = c
        if need > rem * best:
            return None
        last = later.bit_length() - 1
        for j in range(idx, index_of[last] + 1):
            u = cands[j]
            found = search(j + 1, covered | covers[u], rem - 1, chosen | 1 << u)
            if found is not None:
                return found
        return None

    uncovered = target & ~covered0
    best = max((covers[u] & uncovered).bit_count() for u in cands)
    k = -(-uncovered.bit_count() // best)
    while True:
        found = search(0, covered0, k, forced & comp)
        if found is not None:
            return found
        k += 1


@lru_cache(maxsize=1 << 18)
def solve_masks(masks: tuple[int, ...], strong: bool = True) -> int:
    """Lexicographically least minimum (strong) dominating set, as a bitmask."""
    covers = _covers(masks, strong)
    forced = _forced_mask(masks, covers)
    witness = 0
    for comp in component_masks(masks):
        witness |= _solve_component(comp, covers, forced)
    return witness


def gamma_st_value(masks: tuple[int, ...]) -> int:
    return solve_masks(masks, True).bit_count()


def gamma_st(g: Graph) -> GammaResult:
    w = solve_masks(g.masks, True)
    return GammaResult(w.bit_count(), frozenset(bits(w)))


def gamma(g: Graph) -> GammaResult:
    w = solve_masks(g.masks, False)
    return GammaResult(w.bit_count(), frozenset(bits(w)))


def forced_vertices(g: Graph) -> VertexSet:
    """Vertices lying in every strong dominating set."""
    return frozenset(bits(_forced_mask(g.masks, _covers(g.masks, True))))


def gamma_st_bruteforce(g: Graph, cap: int = BRUTEFORCE_CAP) -> GammaResult:
    """Plain enumeration of subsets by size, then lexicographically."""
    if g.n > cap:
        raise CapExceeded(f"brute-force solver refuses n={g.n} > cap {cap}")
    for k in range(1, g.n + 1):
        for D in combinations(range(g.n), k):
            if is_strong_dominating(g, D):
                return GammaResult(k, frozenset(D))
    raise AssertionError("V(G) is always strong dominating")


def gamma_bruteforce(g: Graph, cap: int = BRUTEFORCE_CAP) -> GammaResult:
    if g.n > cap:
        raise CapExceeded(f"brute-force solver refuses n={g.n} > cap {cap}")
    for k in range(1, g.n + 1):
        for D in combinations(range(g.n), k):
            if is_dominating(g, D):
                return GammaResult(k, frozenset(D))
    raise AssertionError("V(G) is always dominating")
