"""Acceptance gate: every verification criterion at full range and tolerance.

Run ``pytest tests/test_acceptance.py -v -s`` to see one PASS/FAIL line per criterion.
"""

import pytest

from genpaley import verify


@pytest.mark.parametrize("number", [c[0] for c in verify.CRITERIA], ids=[c[1].replace(" ", "_") for c in verify.CRITERIA])
def test_criterion(number):
    result = verify.run_criterion(number, verify.FULL)
    print(result.line())
    assert result.passed, result.detail
