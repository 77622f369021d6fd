import pytest
from hypothesis import strategies as st

from wmat.words import pack

ACCEPTANCE_LINES: list[str] = []


def packed_words(min_size=0, max_size=6):
    return st.lists(st.integers(0, 8), min_size=min_size, max_size=max_size).map(lambda w: pack(tuple(w)))


def raw_words(min_size=0, max_size=6):
    return st.lists(st.integers(0, 9), min_size=min_size, max_size=max_size).map(tuple)


@pytest.fixture
def record_criterion():
    def record(number, name, ok, detail=""):
        line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {name}"
        if detail:
            line += f" -- {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
