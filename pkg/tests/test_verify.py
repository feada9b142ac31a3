"""Tests for the oracle layer and the identity-check harness."""

from __future__ import annotations

import json
import sys
import types

import pytest

from mexcrank import verify
from mexcrank.partitions import crank, mex, to_frobenius
from mexcrank.verify import (
    BudgetExceededError,
    IdentityCheck,
    checks_by_id,
    crank_geq_oracle,
    crank_value_oracle,
    frobenius_no0_oracle,
    frobenius_top_avoids_oracle,
    mex_above_odd_oracle,
    mex_residue_oracle,
    mex_value_oracle,
    oracle_count,
    perturbed,
    registry,
    run_check,
)

ALL_CHECK_IDS = (
    "THM_JCRANK",
    "COR_CRANKRECUR",
    "PROP_MEXFORM",
    "COR_0CRANK",
    "PROP_NOF0",
    "THM_FROB_J",
    "PROP_O13",
    "EWELL_EVEN",
    "EWELL_ODD",
    "THM_AN_PARITY",
    "INEQ_OE",
    "SERIES_HEINE",
    "DURFEE_RECT",
    "CRANK_GF_CONSISTENCY",
)


class TestOracles:
    def test_oracle_count_examples(self):
        assert oracle_count(4, lambda lam: mex(lam) % 2 == 1) == 3
        assert oracle_count(4, lambda lam: crank(lam) == 0) == 1

        def no_zero_anywhere(lam):
            symbol = to_frobenius(lam)
            return 0 not in symbol.top and 0 not in symbol.bottom

        assert oracle_count(3, no_zero_anywhere) == 1

    def test_budget_enforced(self):
        with pytest.raises(BudgetExceededError):
            oracle_count(36, lambda lam: True, budget=35)
        with pytest.raises(BudgetExceededError):
            mex_above_odd_oracle(10, 0, budget=9)
        assert oracle_count(10, lambda lam: True, budget=10) == 42

    def test_negative_n_rejected(self):
        with pytest.raises(ValueError):
            oracle_count(-1, lambda lam: True)

    def test_crank_oracles(self):
        assert crank_value_oracle(4, 0) == 1
        assert crank_value_oracle(4, 3) == 0
        assert crank_geq_oracle(4, 1) == 2
        assert crank_geq_oracle(1, 1) == 0  # the lone partition of 1 has crank -1

    def test_mex_oracles(self):
        assert mex_value_oracle(4, 2) == 2
        assert mex_above_odd_oracle(4, 1) == 2
        assert mex_above_odd_oracle(4, 0) == 3
        assert mex_residue_oracle(4, 1, 2) == 3
        assert mex_residue_oracle(4, 3, 4) == 1

    def test_frobenius_oracles(self):
        assert [frobenius_no0_oracle(n) for n in range(9)] == [1, 0, 0, 1, 2, 3, 4, 5, 7]
        assert [frobenius_top_avoids_oracle(n, 0) for n in range(9)] == [1, 0, 1, 2, 3, 4, 6, 8, 12]
        assert [frobenius_top_avoids_oracle(n, 1) for n in range(9)] == [1, 1, 1, 2, 3, 5, 7, 10, 14]
        assert [frobenius_top_avoids_oracle(n, 2) for n in range(9)] == [1, 1, 2, 2, 4, 5, 8, 11, 16]


class TestRegistry:
    def test_check_ids(self):
        checks = registry(12, budget=12)
        assert tuple(check.check_id for check in checks) == ALL_CHECK_IDS

    def test_checks_fully_described(self):
        for check in registry(12, budget=12):
            assert check.statement
            assert check.lhs_desc
            assert check.rhs_desc
            assert check.grid

    def test_checks_by_id_mapping(self):
        mapping = checks_by_id(12, budget=12)
        assert set(mapping) == set(ALL_CHECK_IDS)
        assert mapping["EWELL_ODD"].check_id == "EWELL_ODD"

    def test_small_ranges_all_pass(self):
        for check in registry(18, budget=18):
            report = run_check(check)
            assert report.passed, (check.check_id, report.first_counterexample)
            assert report.first_counterexample is None
            assert report.failures == ()

    def test_ewell_odd_values_all_zero(self):
        report = run_check(checks_by_id(100, budget=20)["EWELL_ODD"])
        assert report.passed
        assert len(report.records) == 101
        assert all(record.rhs == 0 and record.lhs == 0 for record in report.records)

    def test_budget_caps_enumeration_grids(self):
        check = checks_by_id(30, budget=9)["PROP_MEXFORM"]
        assert max(point["n"] for point in check.grid) == 9


class TestRunCheck:
    def test_empty_grid_rejected(self):
        check = IdentityCheck(
            check_id="EMPTY",
            statement="no points",
            lhs_desc="l",
            rhs_desc="r",
            grid=(),
            lhs_fn=lambda p: 0,
            rhs_fn=lambda p: 0,
        )
        with pytest.raises(ValueError):
            run_check(check)

    def test_bad_worker_count_rejected(self):
        check = checks_by_id(8, budget=8)["EWELL_ODD"]
        with pytest.raises(ValueError):
            run_check(check, workers=0)

    def test_budget_error_propagates(self):
        check = IdentityCheck(
            check_id="OVER_BUDGET",
            statement="asks the oracle past its cap",
            lhs_desc="enumeration",
            rhs_desc="constant",
            grid=({"n": 40},),
            lhs_fn=lambda p: oracle_count(p["n"], lambda lam: True, budget=35),
            rhs_fn=lambda p: 0,
        )
        with pytest.raises(BudgetExceededError):
            run_check(check)

    def test_record_order_is_grid_order(self):
        check = checks_by_id(10, budget=10)["EWELL_EVEN"]
        report = run_check(check)
        assert [record.params for record in report.records] == list(check.grid)


class TestPerturbation:
    def test_perturbed_check_fails_with_counterexample(self):
        base = checks_by_id(30, budget=20)["COR_0CRANK"]
        bad = perturbed(base, {"n": 10}, 1)
        report = run_check(bad)
        assert not report.passed
        counterexample = report.first_counterexample
        assert counterexample is not None
        assert counterexample.params["n"] == 10
        assert counterexample.lhs != counterexample.rhs

    def test_unperturbed_points_still_pass(self):
        base = checks_by_id(30, budget=20)["COR_0CRANK"]
        bad = perturbed(base, {"n": 10}, 1)
        report = run_check(bad)
        for record in report.records:
            assert record.passed == (record.params.get("n") != 10)

    def test_perturbed_id_is_marked(self):
        base = checks_by_id(10, budget=10)["EWELL_ODD"]
        assert perturbed(base, {"k": 3}).check_id == "EWELL_ODD:perturbed"


class TestReports:
    def test_record_json_schema(self):
        report = run_check(checks_by_id(10, budget=10)["EWELL_EVEN"])
        payload = report.to_jsonable()
        assert payload["check_id"] == "EWELL_EVEN"
        assert payload["pass"] is True
        assert payload["total"] == len(payload["records"])
        assert payload["failed"] == 0
        assert payload["first_counterexample"] is None
        for record in payload["records"]:
            assert set(record) == {"check_id", "params", "lhs", "rhs", "pass"}
            assert isinstance(record["lhs"], str)
            assert isinstance(record["rhs"], str)
        json.dumps(payload)  # must be serializable as-is

    def test_reports_deterministic_across_runs_and_workers(self):
        check = checks_by_id(15, budget=15)["THM_JCRANK"]
        baseline = json.dumps(run_check(check).to_jsonable(), sort_keys=True)
        again = json.dumps(run_check(check).to_jsonable(), sort_keys=True)
        threaded = json.dumps(run_check(check, workers=4).to_jsonable(), sort_keys=True)
        assert baseline == again == threaded

    def test_failure_counts(self):
        base = checks_by_id(20, budget=15)["EWELL_ODD"]
        bad = perturbed(base, {"k": 5}, 2)
        payload = run_check(bad).to_jsonable()
        assert payload["pass"] is False
        assert payload["failed"] == 1
        assert payload["first_counterexample"]["params"] == {"k": 5}
        assert payload["first_counterexample"]["rhs"] == "2"


class TestModuleBoundaries:
    def test_oracles_never_touch_formula_modules(self, monkeypatch):
        # The enumeration side must stay usable when the formula modules are
        # unavailable; only registry-built formula sides may reach them.
        import mexcrank

        def poison_module(name):
            module = types.ModuleType(name)

            def refuse(attr, _name=name):
                raise RuntimeError(f"formula module touched: {_name}.{attr}")

            module.__getattr__ = refuse
            return module

        for name in ("counting", "qseries"):
            module = poison_module(f"mexcrank.{name}")
            monkeypatch.setitem(sys.modules, f"mexcrank.{name}", module)
            monkeypatch.setattr(mexcrank, name, module)

        assert oracle_count(4, lambda lam: mex(lam) % 2 == 1) == 3
        assert crank_geq_oracle(4, 1) == 2
        assert frobenius_no0_oracle(3) == 1
        assert mex_above_odd_oracle(6, 2) == 4

        # ... and the formula side genuinely routes through those modules.
        with pytest.raises(RuntimeError, match="formula module touched"):
            run_check(checks_by_id(6, budget=6)["EWELL_ODD"])
