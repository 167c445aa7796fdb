import csv
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"

_acceptance_lines: list[str] = []


def _parse_sparse(text):
    return {int(t): int(c) for t, c in (item.split(":") for item in text.split())}


def load_golden():
    """Golden exceptional rows: list of (k, n, r, a, a_star) with sparse dicts."""
    rows = []
    with open(DATA / "golden.csv") as fh:
        for row in csv.DictReader(fh):
            rows.append(
                (
                    int(row["k"]),
                    int(row["n"]),
                    int(row["r"]),
                    _parse_sparse(row["a"]),
                    _parse_sparse(row["a_star"]),
                )
            )
    return rows


@pytest.fixture(scope="session")
def golden():
    return load_golden()


@pytest.fixture
def acceptance():
    """Record a criterion result; printed in the terminal summary."""

    def record(name, passed, detail=""):
        status = "PASS" if passed else "FAIL"
        _acceptance_lines.append(f"[{status}] {name}" + (f"  ({detail})" if detail else ""))

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
