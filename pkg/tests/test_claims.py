import pytest

from sdstab.claims import (EXPECTED_MISMATCHES, MISMATCH, PASS, SKIPPED, Context, SuiteConfig,
                           check_claim, find_counterexamples, list_claims, run_suite)
from sdstab.errors import CapExceeded, UnknownClaim
from sdstab.graph import is_connected


@pytest.fixture(scope="module")
def report():
    return run_suite(SuiteConfig(max_n=5))


def test_registry_ids_unique():
    ids = [cid for cid, _ in list_claims()]
    assert len(ids) == len(set(ids)) == 34
    assert EXPECTED_MISMATCHES <= set(ids)


def test_expected_mismatches_flagged(report):
    flagged = {v.claim_id for v in report.verdicts if v.status == MISMATCH}
    assert flagged == EXPECTED_MISMATCHES


def test_every_counterexample_is_verified(report):
    for v in report.verdicts:
        assert all(c.verified for c in v.counterexamples), v.claim_id
        assert (v.status == MISMATCH) == bool(v.counterexamples), v.claim_id


def test_unexpected_claims_pass(report):
    for v in report.verdicts:
        if v.claim_id not in EXPECTED_MISMATCHES:
            assert v.status == PASS, (v.claim_id, v.notes)


def test_cycle_claim_small_range():
    v = check_claim("prop:cycle-st", SuiteConfig().with_ranges(cycle_st=(4, 12)))
    assert v.status == PASS
    assert "(4, 12)" in v.scope


def test_octahedron_counterexample(report):
    v = report.verdict("rem:octahedron")
    (c,) = v.counterexamples
    assert c.computed == "st = 1"
    assert "prop:cocktail" in v.related
    assert any("both cannot pass" in n for n in v.notes)


def test_attain_counterexamples(report):
    computed = {c.graph: c.computed for c in report.verdict("thm:attain-p+1").counterexamples}
    assert computed["Km(2,2,2)"] == "st = 1"
    assert computed["Km(3,3,3)"] == "st = 2"


def test_join_st_empty_universal_case(report):
    graphs = {c.graph: c.computed for c in report.verdict("thm:join-st").counterexamples}
    assert graphs["join(E(3),E(3))"] == "st = 2"


def test_char_counterexample_includes_c9(report):
    assert "C(9)" in {c.graph for c in report.verdict("thm:char-p+1").counterexamples}


def test_path_discrepancy_noted(report):
    notes = report.verdict("prop:path-st").notes
    assert any("statement-vs-proof" in n and "P(6)" in n for n in notes)


def test_induced_star_forms_reported_separately(report):
    assert report.verdict("cor:induced-star").status == PASS
    assert report.verdict("cor:induced-star:proof").status == PASS


def test_unbounded_substitution_flagged(report):
    assert any("conventional" in n for n in report.verdict("thm:bound1").notes)


def test_unknown_claim():
    with pytest.raises(UnknownClaim):
        check_claim("thm:nope")


def test_sweep_beyond_cap_is_skipped():
    v = check_claim("thm:bound1", SuiteConfig(max_n=8))
    assert v.status == SKIPPED and "cap" in v.notes[0]


def test_family_beyond_cap_is_skipped():
    v = check_claim("prop:cycle-st", SuiteConfig().with_ranges(cycle_st=(16, 17)))
    assert v.status == SKIPPED
    assert any("C(17)" in n for n in v.notes)


def test_timing_excluded_from_dict(report):
    d = report.as_dict(timing=False)
    assert all(v["elapsed_ms"] is None for v in d["verdicts"])
    assert d["summary"][MISMATCH] == len(EXPECTED_MISMATCHES)


def test_shared_context_reuses_tables():
    ctx = Context(SuiteConfig(max_n=4))
    check_claim("thm:NG-sum", context=ctx)
    gamma4 = ctx.tables.gamma(4)
    check_claim("thm:NG-prod", context=ctx)
    assert ctx.tables.gamma(4) is gamma4


def test_find_counterexamples_connectivity():
    # "every graph is connected" fails once per disconnected isomorphism class
    found = find_counterexamples(lambda g, f: is_connected(g), max_n=4)
    assert [key for key, _ in found] == sorted(key for key, _ in found)
    assert len(found) == 0 + 1 + 2 + 5  # disconnected classes for n = 1..4


def test_find_counterexamples_cap():
    with pytest.raises(CapExceeded):
        find_counterexamples(lambda g, f: True, max_n=8)
