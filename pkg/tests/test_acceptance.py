"""The twelve acceptance criteria, one test each.

Every result line is also collected in ``RESULTS`` and printed in the terminal
summary (see conftest), so the table shows up even with output capture on.
"""

import pytest

from subdepth.acceptance import CHECKS, run_check

RESULTS = []


@pytest.mark.parametrize("number", range(1, len(CHECKS) + 1), ids=[t for t, _ in CHECKS])
def test_criterion(number):
    result = run_check(number)
    print(result.line())
    RESULTS.append(result)
    assert result.passed, result.detail
