"""The verification suite must agree with itself at small rank."""

import pytest

from howecorr.verify import CheckResult, check_pinned_table, run_verification


def test_suite_passes_at_small_rank():
    results = run_verification(max_rank=2)
    assert len(results) == 11
    failures = [r.line() for r in results if not r.passed]
    assert not failures, "\n".join(failures)


def test_rank_validation():
    with pytest.raises(ValueError):
        run_verification(max_rank=0)
    with pytest.raises(ValueError):
        run_verification(max_rank=7)


def test_result_lines():
    assert CheckResult("x", True, "ok").line() == "PASS x: ok"
    assert CheckResult("x", False, "bad").line() == "FAIL x: bad"


def test_pinned_table_is_a_check():
    result = check_pinned_table()
    assert result.passed
    assert "pinned" in result.name or result.name
