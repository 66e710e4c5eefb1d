"""Acceptance criteria 1-11; each test prints one PASS/FAIL line."""

import pytest

from charvar.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA], ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(number, capsys):
    result = run_criterion(number)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail
    if result.limit is not None:
        assert result.seconds < result.limit, f"took {result.seconds:.2f}s, limit {result.limit}s"
