"""Claim tables: row contents, exit codes, and the budget-exhausted path."""

from __future__ import annotations

import os

import pytest

from orientdiam.claims import BadFamily, ClaimRecord, verify_claims
from orientdiam.search import SearchConfig


class TestFamilies:
    def test_33q_default_range(self):
        report = verify_claims("33q")
        by_q = {r.q: r for r in report.records}
        assert sorted(by_q) == [3, 4, 5, 6, 7]
        assert all(by_q[q].method == "construct" and by_q[q].observed == 2
                   for q in (3, 4, 5, 6))
        assert by_q[7].method == "search" and by_q[7].observed == 3
        assert report.exit_code == 0

    def test_34q_default_range_closes_threshold(self):
        report = verify_claims("34q")
        by_q = {r.q: r for r in report.records}
        assert sorted(by_q) == list(range(4, 13))
        assert by_q[12].method == "search"
        assert by_q[12].observed == 3 and by_q[12].passed
        assert report.exit_code == 0

    def test_baselines(self):
        report = verify_claims("baselines")
        observed = {r.claim_id: r.observed for r in report.records}
        assert observed == {
            "baseline-K4": 3,
            "baseline-K5": 2,
            "baseline-K(2,2)": 3,
            "baseline-K(2,3)": 4,
        }
        assert all(r.method == "brute-force" for r in report.records)

    def test_bad_family(self):
        with pytest.raises(BadFamily):
            verify_claims("77q")

    def test_q_range_clamps_below_constructive_range(self):
        report = verify_claims("33q", q_range=(1, 4))
        assert [r.q for r in report.records] == [3, 4]


class TestExitCodes:
    def test_unknown_budget_gives_exit_3_and_emits_cnf(self, tmp_path):
        starved = SearchConfig(node_budget=1)
        report = verify_claims("33q", q_range=(7, 7), cfg=starved,
                               cnf_dir=str(tmp_path))
        (record,) = report.records
        assert record.unknown and not record.passed
        assert record.observed is None
        assert report.exit_code == 3
        assert len(report.cnf_emitted) == 1
        assert os.path.exists(report.cnf_emitted[0])

    def test_all_pass_gives_exit_0(self):
        assert verify_claims("baselines").exit_code == 0


class TestRecordInvariants:
    def test_formula_unverified_never_passes(self):
        with pytest.raises(ValueError):
            ClaimRecord(
                claim_id="x", family="33q", q=99, expected=3,
                method="formula-unverified", observed=3, passed=True,
                unknown=False, wall_time=0.0,
            )

    def test_pass_iff_observed_equals_expected(self):
        for report in (verify_claims("33q"), verify_claims("34q"),
                       verify_claims("baselines")):
            for r in report.records:
                assert r.passed == (r.observed == r.expected)
