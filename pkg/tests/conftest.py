import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from subdepth.intmatrix import IrredundantMatrix

settings.register_profile("default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def irredundant(draw, max_rows=5, max_cols=5, max_entry=3):
    r = draw(st.integers(1, max_rows))
    s = draw(st.integers(1, max_cols))
    rows = draw(
        st.lists(
            st.lists(st.integers(0, max_entry), min_size=s, max_size=s), min_size=r, max_size=r
        )
    )
    # repair zero rows/columns instead of filtering, so shrinking stays useful
    for i, row in enumerate(rows):
        if not any(row):
            row[i % s] = 1
    for j in range(s):
        if not any(row[j] for row in rows):
            rows[j % r][j] = 1
    return IrredundantMatrix.from_rows(rows)


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for r in sorted(results, key=lambda r: r.number):
        terminalreporter.write_line(r.line())
