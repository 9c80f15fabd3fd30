"""Tests related to the verification suites."""

import pytest
from covering_polynomials import ALL_VERIFICATION_SUITES, verification
from covering_polynomials.polynomial import Polynomial
from covering_polynomials.poset import chain, direct_product, is_isomorphic
from covering_polynomials.root_system import build
from covering_polynomials.verification import (
    SuiteResult,
    _check_poset_identities,
    max_orthogonal_simple_roots,
    removal_deviation,
    verify_conjectures,
    verify_table1,
)


class TestSuiteResult:
    @pytest.fixture
    def result(self):
        result = SuiteResult(suite="example")
        result.check("first", passed=True)
        result.equal("second", actual=1, expected=2)
        result.check("third", passed=False, detail="Unknown.", report_only=True)
        yield result

    def test_failures(self, result) -> None:
        assert [check.name for check in result.failures] == ["second"]
        assert not result.passed

    def test_failure_detail(self, result) -> None:
        assert result.failures[0].detail == "Expected 2, got 1."

    def test_passed_checks_have_no_detail(self) -> None:
        result = SuiteResult(suite="example")
        result.check("only", passed=True, detail="Not shown.")
        assert result.checks[0].detail == ""
        assert result.passed

    def test_guard(self) -> None:
        result = SuiteResult(suite="example")
        with result.guard(name="division"):
            raise ZeroDivisionError("division by zero")
        assert result.failures[0].name == "division"
        assert result.failures[0].detail == "ZeroDivisionError: division by zero"

    def test_guard_lets_other_errors_through(self) -> None:
        result = SuiteResult(suite="example")
        with pytest.raises(KeyError):
            with result.guard(name="lookup"):
                raise KeyError("missing")

    def test_dataframe(self, result) -> None:
        frame = result.to_dataframe()
        assert list(frame.columns) == [
            "suite",
            "check",
            "passed",
            "report_only",
            "detail",
        ]
        assert len(frame) == 3
        assert frame.passed.tolist() == [True, False, False]

    def test_summary(self, result) -> None:
        assert result.summary() == (
            "Suite example: 1 passed, 1 failed, 1 report-only."
        )


@pytest.mark.parametrize(
    "count, expected", [(1, ()), (2, (1,)), (3, (2, 1)), (4, (3, 2, 1))]
)
def test_removal_deviation(count, expected) -> None:
    assert removal_deviation(count) == Polynomial(expected)


@pytest.mark.parametrize(
    "text, expected",
    [("A1", 1), ("A4", 2), ("A5", 3), ("D4", 3), ("E6", 3), ("E8", 4), ("G2", 1)],
)
def test_max_orthogonal_simple_roots(text, expected) -> None:
    assert max_orthogonal_simple_roots(build(text)) == expected


@pytest.mark.parametrize("suite", ["table1", "table2", "table3", "identities"])
def test_suite_passes(suite, small_cfg) -> None:
    result = ALL_VERIFICATION_SUITES[suite](cfg=small_cfg)
    assert result.checks
    assert result.passed, [check.name for check in result.failures]


def test_conjectures_are_report_only(small_cfg) -> None:
    result = verify_conjectures(cfg=small_cfg)
    assert result.checks
    assert all(check.report_only for check in result.checks)
    assert result.passed


def test_table1_covers_derived_root_posets(small_cfg) -> None:
    result = verify_table1(cfg=small_cfg)
    names = {check.name for check in result.checks}
    assert {
        "deviation with zero A4",
        "deviation with zero BC2",
        "deviation without simples D4",
        "deviation without simples B3",
        "branching D4",
        "branching A4",
        "linear and cubic D4",
    } <= names
    assert result.passed


def test_self_dual_check_reaches_eight_elements(monkeypatch) -> None:
    sizes: list[int] = list()

    def recording_is_isomorphic(a, b) -> bool:
        sizes.append(a.size)
        return is_isomorphic(a, b)

    monkeypatch.setattr(verification, "is_isomorphic", recording_is_isomorphic)
    result = SuiteResult(suite="identities")
    grid = direct_product(chain(2), chain(4))
    _check_poset_identities(result=result, poset=grid, other=chain(2), label="grid")
    assert sizes == [8]
    assert not result.failures
