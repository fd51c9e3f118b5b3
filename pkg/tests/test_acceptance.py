"""Reproduction gate: one test and one printed PASS/FAIL line per criterion."""

import pytest

from chromaface.acceptance import CRITERIA, run_criterion

LINES: list[str] = []


@pytest.mark.parametrize("number", [n for n, _, _ in CRITERIA], ids=[f"criterion_{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(number):
    result = run_criterion(number)
    LINES.append(result.line())
    print(result.line())
    assert result.passed, "; ".join(result.failures)
