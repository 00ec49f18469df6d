from itertools import permutations

import pytest

from mpenergy.poly import Poly

ACCEPTANCE_LINES: list[str] = []


def leibniz_char_poly(m) -> Poly:
    """det(xI - M) by the permutation expansion; independent of the library's recurrence."""
    n = len(m)
    total = Poly()
    for perm in permutations(range(n)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = Poly((-1,) if inversions % 2 else (1,))
        for row, col in enumerate(perm):
            entry = Poly((1, -m[row][col])) if row == col else Poly((-m[row][col],))
            term = term * entry
        total = total + term
    return total


@pytest.fixture
def record_criterion():
    def record(number: int, ok: bool, detail: str) -> None:
        ACCEPTANCE_LINES.append(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
