"""Acceptance criteria 1-9, one test each; a PASS/FAIL line per criterion is
printed in the terminal summary."""

import json
import os
import subprocess
import sys
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from sdstab.claims import MISMATCH, PASS, SuiteConfig, check_claim, run_suite
from sdstab.families import build, parse_family
from sdstab.graph import Graph
from sdstab.stability import Finite, stability
from sdstab.strongdom import gamma_st
from sdstab.sweep import SweepTables


def verdict(number: int, ok: bool, detail: str) -> None:
    ACCEPTANCE_LINES.append(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


def graph(text: str) -> Graph:
    return build(parse_family(text))


def brute_st(text: str) -> int:
    return stability(graph(text), oracle=True, cap=16).value


def test_criterion_1_oracle_equivalence():
    start = time.perf_counter()
    fast = SweepTables(jobs=8).gamma(6)
    slow = SweepTables(jobs=8, oracle=True).gamma(6)
    elapsed = time.perf_counter() - start
    diff = int(np.count_nonzero(fast != slow))
    verdict(1, len(fast) == 32768 and diff == 0 and elapsed < 300,
            f"{len(fast)} graphs of order 6, {diff} disagreements, {elapsed:.1f}s")


def test_criterion_2_path_cycle_wheel_gamma():
    bad = [f"{t}({n})" for n in range(3, 31) for t in "PC" if gamma_st(graph(f"{t}({n})")).value != -(-n // 3)]
    bad += [f"W({n})" for n in range(4, 31) if gamma_st(graph(f"W({n})")).value != 1]
    verdict(2, not bad, f"P_n, C_n for 3..30 and W_n for 4..30; wrong: {bad or 'none'}")


def test_criterion_3_cycle_stability():
    start = time.perf_counter()
    expected = {0: 3, 1: 1, 2: 2}
    bad = [n for n in range(4, 16) if stability(graph(f"C({n})"), cap=16).value != expected[n % 3]]
    elapsed = time.perf_counter() - start
    verdict(3, not bad and elapsed < 60, f"C_n for 4..15, wrong: {bad or 'none'}, {elapsed:.1f}s")


def test_criterion_4_path_stability_statement():
    v = check_claim("prop:path-st", SuiteConfig().with_ranges(path_st=(3, 15)))
    expected = {0: 1, 1: 1, 2: 2}
    bad = [n for n in range(3, 16) if stability(graph(f"P({n})"), cap=16).value != expected[n % 3]]
    flagged = [n for n in range(3, 16, 3) if any(f"P({n}) " in note and "statement-vs-proof" in note
                                                 for note in v.notes)]
    ok = not bad and v.status == PASS and flagged == [3, 6, 9, 12, 15]
    verdict(4, ok, f"P_n for 3..15 wrong: {bad or 'none'}; discrepancy noted for n = {flagged}")


def test_criterion_5_families():
    cases = [f"W({n})" for n in range(5, 13)] + [f"F({n})" for n in range(2, 7)]
    cases += [f"B({n})" for n in range(2, 6)]
    cases += [f"Kb({m},{n})" for n in range(2, 8) for m in range(1, n)]
    cases += ["Kb(4,4)", "Kb(5,5)", "CP(3)", "CP(4)", "CP(5)"]
    wrong = {}
    for text in cases:
        fast = stability(graph(text), cap=16).value
        slow = brute_st(text)
        if fast != slow:
            wrong[text] = f"solvers disagree ({fast} vs {slow})"
        elif slow != 1:
            wrong[text] = f"st = {slow}"
    verdict(5, not wrong, f"{len(cases)} instances with claimed st = 1; differing: {wrong or 'none'}")


@pytest.fixture(scope="module")
def default_report():
    return run_suite(SuiteConfig())


def test_criterion_6_known_inconsistencies(default_report):
    def computed(cid):
        v = default_report.verdict(cid)
        return v.status, {c.graph: c.computed for c in v.counterexamples if c.verified}

    checks = {
        "rem:octahedron": ("Km(2,2,2)", "st = 1"),
        "thm:attain-p+1": ("Km(2,2,2)", "st = 1"),
        "thm:attain-p+1 p=3": ("Km(3,3,3)", "st = 2"),
        "cor:every-p-attained": ("Km(2,2,2)", "st = 1"),
        "prop:balanced-st-bounds": ("Km(2,2,2)", "st = 1 (lower bound fails)"),
        "thm:join-st": ("join(E(3),E(3))", "st = 2"),
    }
    missing = []
    for key, (g, value) in checks.items():
        status, found = computed(key.split()[0])
        if status != MISMATCH or found.get(g) != value:
            missing.append(key)
    status, found = computed("thm:char-p+1")
    if status != MISMATCH or "C(9)" not in found:
        missing.append("thm:char-p+1")
    # cor:every-p-attained at p = 3 uses K_(2,2,2); claimed st = 3
    oracle_values = {t: brute_st(t) for t in ["Km(2,2,2)", "Km(3,3,3)", "Kb(3,3)", "C(9)"]}
    proc = subprocess.run([sys.executable, "-m", "sdstab", "check", "all"], capture_output=True, text=True)
    ok = not missing and oracle_values == {"Km(2,2,2)": 1, "Km(3,3,3)": 2, "Kb(3,3)": 2, "C(9)": 3} \
        and proc.returncode == 2
    verdict(6, ok, f"missing: {missing or 'none'}; oracle values {oracle_values}; exit code {proc.returncode}")


def test_criterion_7_bound_sweeps():
    config = SuiteConfig(max_n=6, jobs=8)
    start = time.perf_counter()
    report = run_suite(config, ["thm:bound1", "thm:NG-sum", "thm:NG-prod", "lem:NG-gamma-prereq",
                                "thm:recursive"])
    again = run_suite(config, ["thm:bound1", "thm:NG-sum", "thm:NG-prod", "lem:NG-gamma-prereq",
                               "thm:recursive"])
    elapsed = time.perf_counter() - start
    unverified = sum(not c.verified for v in report.verdicts for c in v.counterexamples)
    statuses = {v.claim_id: v.status for v in report.verdicts}
    deterministic = report.as_dict(timing=False) == again.as_dict(timing=False)
    ok = deterministic and unverified == 0 and all(s in (PASS, MISMATCH) for s in statuses.values())
    verdict(7, ok and elapsed < 1800, f"{statuses}; {unverified} unverified; {elapsed:.1f}s for two runs")


def test_criterion_8_operation_theorems(default_report):
    join_gamma = default_report.verdict("thm:join-gamma")
    corona_gamma = default_report.verdict("thm:corona-gamma")
    product_st = default_report.verdict("prop:product-st")
    named = {t: (stability(graph(t)), brute_st(t)) for t in ["corona(P(2),E(2))", "corona(C(3),E(2))"]}
    corona_ok = all(isinstance(r, Finite) and r.k == 1 and slow == 1 for r, slow in named.values())
    ok = (join_gamma.status == PASS and "200 random join pairs" in join_gamma.scope
          and corona_gamma.status == PASS and product_st.status == PASS and corona_ok)
    verdict(8, ok, f"join-gamma {join_gamma.status}, corona-gamma {corona_gamma.status}, "
                   f"corona st {[slow for _, slow in named.values()]}, product-st {product_st.status}")


def test_criterion_9_determinism():
    cmd = [sys.executable, "-m", "sdstab", "check", "all", "--max-n", "5", "--jobs", "8", "--format", "json"]
    env = dict(os.environ, PYTHONHASHSEED="random")
    first = subprocess.run(cmd, capture_output=True, env=env).stdout
    second = subprocess.run(cmd, capture_output=True, env=env).stdout
    ok = first == second and json.loads(first)["command"] == "check"
    verdict(9, ok, f"two JSON reports of {len(first)} bytes, identical: {first == second}")
