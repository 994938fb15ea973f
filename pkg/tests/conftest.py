import pytest

from braided_casimir import pbw

CRITERIA: dict = {}


def record(number: int, title: str, passed: bool, detail: str = "") -> None:
    CRITERIA[number] = (title, passed, detail)


@pytest.fixture(autouse=True)
def _reset_term_bound():
    previous = pbw.get_term_bound()
    yield
    pbw.set_term_bound(previous)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        title, passed, detail = CRITERIA[number]
        line = f"criterion {number:2d} {'PASS' if passed else 'FAIL'}  {title}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
