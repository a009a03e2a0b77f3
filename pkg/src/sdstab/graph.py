"""Immutable simple undirected graphs on contiguous labels ``0..n-1``.

Adjacency is stored as one integer bitmask per vertex; bit ``u`` of
``masks[v]`` is set iff ``uv`` is an edge.  Every mutating operation returns
a new :class:`Graph`.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass, field

from .errors import GraphError

VertexSet = frozenset


def bits(mask: int) -> list[int]:
    """Labels of the set bits of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True, eq=False)
class Graph:
    """A simple undirected graph.

    ``origin_labels[i]`` is the label vertex ``i`` had in the graph this one
    was derived from (identity for freshly built graphs).
    """

    n: int
    masks: tuple[int, ...]
    origin_labels: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.origin_labels:
            object.__setattr__(self, "origin_labels", tuple(range(self.n)))

    # -- basic queries -------------------------------------------------
    @property
    def order(self) -> int:
        return self.n

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return frozenset(bits(self.masks[v]))

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(bits(m)) for m in self.masks)

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.masks[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.masks[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self.masks) // 2

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.masks]

    def max_degree(self) -> int:
        return max(self.degrees())

    def min_degree(self) -> int:
        return min(self.degrees())

    def is_complete(self) -> bool:
        return self.num_edges == self.n * (self.n - 1) // 2

    def is_regular(self) -> bool:
        return len(set(self.degrees())) == 1

    def original(self, vertices: Iterable[int]) -> VertexSet:
        """Translate labels of this graph to labels of its parent graph."""
        return frozenset(self.origin_labels[v] for v in vertices)

    def same_edges(self, other: Graph) -> bool:
        return self.n == other.n and self.masks == other.masks

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range [0, {self.n})")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.same_edges(other)

    def __hash__(self):
        return hash((self.n, self.masks))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def new_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Build a graph on ``n`` vertices; duplicate and reversed pairs are merged."""
    if n < 1:
        raise GraphError(f"graph order must be >= 1, got {n}")
    masks = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a label out of range [0, {n})")
        if u == v:
            raise GraphError(f"edge ({u}, {v}) is a self-loop")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(n, tuple(masks))


def from_masks(masks: Iterable[int]) -> Graph:
    masks = tuple(masks)
    n = len(masks)
    for v, m in enumerate(masks):
        if m >> v & 1 or m >> n:
            raise GraphError(f"invalid adjacency mask for vertex {v}")
        for u in bits(m):
            if not masks[u] >> v & 1:
                raise GraphError(f"asymmetric adjacency between {u} and {v}")
    return Graph(n, masks)


def degree(g: Graph, v: int) -> int:
    g._check(v)
    return g.masks[v].bit_count()


def induced_masks(masks: tuple[int, ...], keep: int) -> tuple[int, ...]:
    """Adjacency masks of the subgraph induced by bitmask ``keep``, relabeled
    contiguously in ascending original-label order."""
    verts = bits(keep)
    out = []
    for v in verts:
        m = masks[v] & keep
        nm = 0
        for i, u in enumerate(verts):
            if m >> u & 1:
                nm |= 1 << i
        out.append(nm)
    return tuple(out)


def delete_vertices(g: Graph, removed: Iterable[int]) -> Graph:
    """Return ``g - removed``.  Survivors are relabeled ``0..n-|removed|-1``."""
    rm = 0
    for v in removed:
        g._check(v)
        rm |= 1 << v
    keep = g.full_mask & ~rm
    if keep == 0:
        raise GraphError("deleting every vertex leaves an empty graph")
    origin = tuple(g.origin_labels[v] for v in bits(keep))
    return Graph(keep.bit_count(), induced_masks(g.masks, keep), origin)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    keep = set(vertices)
    return delete_vertices(g, [v for v in range(g.n) if v not in keep])


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~m & ~(1 << v) for v, m in enumerate(g.masks)), g.origin_labels)


def component_masks(masks: tuple[int, ...], within: int | None = None) -> list[int]:
    """Connected components of the subgraph induced by ``within``, as bitmasks
    ordered by smallest member."""
    n = len(masks)
    left = (1 << n) - 1 if within is None else within
    comps = []
    while left:
        seed = left & -left
        comp = seed
        frontier = seed
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = masks[low.bit_length() - 1] & left & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        left &= ~comp
    return comps


def components(g: Graph) -> list[VertexSet]:
    return [frozenset(bits(c)) for c in component_masks(g.masks)]


def is_connected(g: Graph) -> bool:
    return len(component_masks(g.masks)) == 1


def universal_vertices(g: Graph) -> VertexSet:
    return frozenset(v for v, m in enumerate(g.masks) if m.bit_count() == g.n - 1)


def max_degree_vertices(g: Graph) -> VertexSet:
    degs = g.degrees()
    top = max(degs)
    return frozenset(v for v, d in enumerate(degs) if d == top)


def _local_connectivity(masks: tuple[int, ...], s: int, t: int, bound: int) -> int:
    """Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent),
    stopping early once ``bound`` paths are found.

    Unit-capacity flow on the split graph: vertex v becomes v_in=2v, v_out=2v+1.
    """
    n = len(masks)
    cap: dict[tuple[int, int], int] = {}
    adj: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a, b, c):
        if (a, b) not in cap:
            adj[a].append(b)
            adj[b].append(a)
            cap.setdefault((b, a), 0)
        cap[(a, b)] = cap.get((a, b), 0) + c

    for v in range(n):
        arc(2 * v, 2 * v + 1, n if v in (s, t) else 1)
        for u in bits(masks[v]):
            arc(2 * v + 1, 2 * u, n)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < bound:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in adj[a]:
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while parent[b] is not None:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """kappa(g); ``n - 1`` for complete graphs, 0 for disconnected graphs."""
    if g.is_complete():
        return g.n - 1
    if not is_connected(g):
        return 0
    best = g.min_degree()
    for s in range(g.n):
        for t in range(s + 1, g.n):
            if not g.masks[s] >> t & 1:
                best = min(best, _local_connectivity(g.masks, s, t, best))
    return best
