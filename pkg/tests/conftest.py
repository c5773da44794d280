import pytest

from tridipow.verify import PARAM_GRID

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record_criterion():
    def _record(label: str, passed: bool, detail: str = ""):
        line = f"[{'PASS' if passed else 'FAIL'}] {label}"
        if detail:
            line += f" ({detail})"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return passed

    return _record


@pytest.fixture(params=PARAM_GRID, ids=lambda ab: f"a={ab[0]},b={ab[1]}")
def ab(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
