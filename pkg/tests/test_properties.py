"""Property-based checks of structural and solver invariants."""

from itertools import combinations

from hypothesis import given, settings
from hypothesis import strategies as st

from sdstab.edgelist import parse_edge_list, render_edge_list
from sdstab.graph import (complement, components, delete_vertices, is_connected, new_graph,
                          vertex_connectivity)
from sdstab.ops import cartesian, corona, disjoint_union, join
from sdstab.stability import Finite, stability, verify_stability_witness
from sdstab.strongdom import (forced_vertices, gamma, gamma_st, gamma_st_bruteforce,
                              is_strong_dominating)


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    all_pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(all_pairs), max_size=len(all_pairs)))
    return new_graph(n, [p for p, keep in zip(all_pairs, chosen) if keep])


def brute_kappa(g):
    """Smallest vertex set whose removal disconnects g (n-1 for complete graphs)."""
    if not is_connected(g):
        return 0
    for k in range(1, g.n - 1):
        for S in combinations(range(g.n), k):
            if not is_connected(delete_vertices(g, S)):
                return k
    return g.n - 1


@given(graphs())
def test_handshake(g):
    assert sum(g.degrees()) == 2 * g.num_edges


@given(graphs())
def test_complement_involution(g):
    c = complement(g)
    assert complement(c) == g
    assert g.num_edges + c.num_edges == g.n * (g.n - 1) // 2


@given(graphs(min_n=2), st.data())
def test_deletion_degrees(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    h = delete_vertices(g, [v])
    nb = g.neighbors(v)
    for i, orig in enumerate(h.origin_labels):
        assert h.degrees()[i] == g.degrees()[orig] - (orig in nb)


@given(graphs())
def test_components_partition(g):
    parts = components(g)
    assert sorted(v for p in parts for v in p) == list(range(g.n))
    assert is_connected(g) == (len(parts) == 1)


@settings(max_examples=60)
@given(graphs(max_n=7))
def test_kappa_against_cuts(g):
    k = vertex_connectivity(g)
    assert k == brute_kappa(g)
    assert k <= g.min_degree()


@given(graphs(max_n=5), graphs(max_n=5))
def test_gamma_st_additive_over_union(g, h):
    assert gamma_st(disjoint_union(g, h)).value == gamma_st(g).value + gamma_st(h).value


@given(graphs())
def test_gamma_below_gamma_st(g):
    res = gamma_st(g)
    assert gamma(g).value <= res.value
    assert is_strong_dominating(g, res.witness)
    assert forced_vertices(g) <= res.witness


@settings(max_examples=60)
@given(graphs(max_n=8))
def test_solver_matches_bruteforce(g):
    assert gamma_st(g) == gamma_st_bruteforce(g)


@st.composite
def circulants(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    jumps = draw(st.sets(st.integers(1, max(1, n // 2))))
    return new_graph(n, [(v, (v + j) % n) for v in range(n) for j in jumps if (v + j) % n != v])


@given(circulants())
def test_regular_graphs_have_equal_numbers(g):
    assert g.is_regular()
    assert gamma_st(g).value == gamma(g).value


@settings(max_examples=40)
@given(graphs(min_n=2, max_n=7))
def test_stability_witness_is_minimal(g):
    res = stability(g)
    if isinstance(res, Finite):
        assert verify_stability_witness(g, res.removal)
        assert not any(verify_stability_witness(g, S) for k in range(1, res.k)
                       for S in combinations(range(g.n), k))
    else:
        assert g.is_complete()


@given(graphs(max_n=5), graphs(max_n=4))
def test_operation_sizes(g, h):
    assert join(g, h).num_edges == g.num_edges + h.num_edges + g.n * h.n
    assert corona(g, h).n == g.n * (1 + h.n)
    assert cartesian(g, h).num_edges == g.num_edges * h.n + h.num_edges * g.n


@given(graphs())
def test_edge_list_round_trip(g):
    assert parse_edge_list(render_edge_list(g)) == g
