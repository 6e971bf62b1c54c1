import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from upsilon_torsion.alexander import GapSequence

# Palindromic, even length <= 20, entries in 1..6: every such list is the
# gap sequence of an alternating symmetric polynomial.
gap_sequences = (
    st.lists(st.integers(1, 6), min_size=0, max_size=10)
    .map(lambda half: GapSequence(half + half[::-1]))
)


def random_gaps(rng: random.Random, max_half: int = 10, max_entry: int = 6) -> GapSequence:
    half = [rng.randint(1, max_entry) for _ in range(rng.randint(0, max_half))]
    return GapSequence(half + half[::-1])


def random_t(rng: random.Random, max_den: int = 60) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(0, 2 * den), den)


@pytest.fixture
def rng():
    return random.Random(1234)


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))
    elif report.when == "setup" and report.outcome != "passed" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{mark}] {name}")
