import pytest

from sdstab.errors import CapExceeded, GraphError, StabilityUndefined
from sdstab.families import (Book, CompleteBipartite, CompleteMultipartite, Complete, Cycle, Path,
                             Wheel, build)
from sdstab.graph import delete_vertices, new_graph
from sdstab.stability import Finite, Unbounded, stability, stability_profile, verify_stability_witness
from sdstab.strongdom import gamma_st


def test_cycle_residue_one_decreases():
    res = stability(build(Cycle(7)))
    assert isinstance(res, Finite)
    assert (res.k, res.gamma_before, res.gamma_after, res.critical) == (1, 3, 2, False)


def test_path_residue_two():
    assert stability(build(Path(5))).k == 2


def test_cycle_residue_zero():
    assert stability(build(Cycle(9))).k == 3


def test_complete_graph_is_unbounded():
    res = stability(build(Complete(4)))
    assert res == Unbounded(conventional_value=4, gamma_before=1)
    assert res.value == 4 and not res.critical


def test_k33_needs_two():
    assert stability(build(CompleteBipartite(3, 3))).k == 2


def test_octahedron_drops_after_one_deletion():
    res = stability(build(CompleteMultipartite(2, 2, 2)))
    assert (res.k, res.gamma_before, res.gamma_after) == (1, 2, 1)


def test_witness_reproduces_change():
    for spec in [Cycle(8), Path(6), Wheel(7), CompleteBipartite(2, 4)]:
        g = build(spec)
        res = stability(g)
        h = delete_vertices(g, res.removal)
        assert gamma_st(h).value == res.gamma_after != res.gamma_before
        assert verify_stability_witness(g, res.removal)


def test_verify_witness():
    w6 = build(Wheel(6))
    assert verify_stability_witness(w6, {0})
    assert verify_stability_witness(build(Path(4)), {0})
    assert not verify_stability_witness(build(Path(4)), {1})
    assert not any(verify_stability_witness(build(Cycle(8)), {v}) for v in range(8))
    with pytest.raises(GraphError):
        verify_stability_witness(w6, set())


def test_profile():
    assert stability_profile(build(Cycle(7)))[1] == 1
    assert stability_profile(build(Complete(4))) == (None, None)
    # deleting a spine vertex leaves a graph with gamma_st 2, not an increase
    assert stability_profile(build(Book(2))) == (3, 2)


def test_k1_undefined_and_cap():
    with pytest.raises(StabilityUndefined):
        stability(new_graph(1))
    with pytest.raises(CapExceeded):
        stability(build(Path(15)))
    assert stability(build(Path(15)), cap=15).k == 1


def test_oracle_agrees():
    for spec in [Cycle(7), Book(2), CompleteMultipartite(2, 2, 2), Complete(3)]:
        g = build(spec)
        assert stability(g) == stability(g, oracle=True)
