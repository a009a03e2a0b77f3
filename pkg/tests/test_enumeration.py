import random

import numpy as np
import pytest

from sdstab.enumeration import (GraphStream, all_labeled_graphs, code_of, dedup_key, describe_code,
                                graph_from_code, num_codes)
from sdstab.errors import CapExceeded
from sdstab.families import Complete, Cycle, Path, build
from sdstab.graph import Graph, complement, delete_vertices, is_connected, new_graph, vertex_connectivity
from sdstab.stability import stability
from sdstab.sweep import SweepTables


def test_counts():
    assert len(all_labeled_graphs(3)) == 8 == len(list(all_labeled_graphs(3)))
    assert len(all_labeled_graphs(4)) == 64


@pytest.mark.parametrize("n", [1, 2, 4, 6])
def test_first_and_last(n):
    graphs = all_labeled_graphs(n)
    assert next(iter(graphs)).num_edges == 0
    assert graph_from_code(n, num_codes(n) - 1) == build(Complete(n))


def test_code_round_trip():
    for code in range(num_codes(4)):
        assert code_of(graph_from_code(4, code)) == code


def test_describe_code():
    assert describe_code(3, 0b101) == "n=3 code=5 edges=[0-1 1-2]"


def test_split_covers_range():
    parts = GraphStream(5).split(7)
    assert [c for p in parts for c in p.codes()] == list(range(num_codes(5)))


def test_cap():
    with pytest.raises(CapExceeded):
        GraphStream(8)


def test_dedup_key_isomorphic_paths():
    a = new_graph(3, [(0, 1), (1, 2)])
    b = new_graph(3, [(0, 2), (2, 1)])
    assert dedup_key(a) == dedup_key(b)
    assert dedup_key(a) != dedup_key(new_graph(3, [(0, 1)]))


def test_isomorphism_classes_small_orders():
    # unlabeled graph counts for n = 1..5
    expected = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34}
    for n, count in expected.items():
        assert len({dedup_key(g) for g in all_labeled_graphs(n)}) == count


def test_dedup_key_invariant_under_relabeling():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(2, 7)
        g = graph_from_code(n, rng.randrange(num_codes(n)))
        perm = list(range(n))
        rng.shuffle(perm)
        h = new_graph(n, [(perm[u], perm[v]) for u, v in g.edges()])
        assert dedup_key(g) == dedup_key(h)


@pytest.fixture(scope="module")
def tables():
    return SweepTables()


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_tables_agree_with_direct_computation(tables, n):
    st, kappa, conn = tables.stability(n), tables.kappa(n), tables.connected(n)
    for code, g in enumerate(all_labeled_graphs(n)):
        assert st[code] == stability(g).value
        assert kappa[code] == vertex_connectivity(g)
        assert conn[code] == is_connected(g)


def test_child_codes_match_deletion(tables):
    n = 5
    for removed in [0b1, 0b100, 0b10010, 0b11100]:
        m, child = tables.child_codes(n, removed)
        drop = [v for v in range(n) if removed >> v & 1]
        for code in range(0, num_codes(n), 37):
            assert graph_from_code(m, int(child[code])) == delete_vertices(graph_from_code(n, code), drop)


def test_complement_codes(tables):
    comp = tables.complement_codes(4)
    for code in range(num_codes(4)):
        assert graph_from_code(4, int(comp[code])) == complement(graph_from_code(4, code))


def test_degree_table(tables):
    deg = tables.degrees(5)
    for code in range(0, num_codes(5), 11):
        assert deg[code].tolist() == graph_from_code(5, code).degrees()


def test_star_table(tables):
    star = tables.star_leaves(5)
    assert star[code_of(build(Path(5)))] == 0
    k14 = new_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    assert star[code_of(k14)] == 4
    assert star[code_of(build(Cycle(5)))] == 0


def test_parallel_gamma_matches_serial():
    # order 6 is large enough for the pool to be used
    serial = SweepTables(jobs=1).gamma(6)
    parallel = SweepTables(jobs=2)
    assert np.array_equal(parallel.gamma(6), serial)
