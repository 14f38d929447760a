import pytest

from cgcluster.exact import X

ACCEPTANCE: dict[int, tuple[str, str]] = {}


def record(number: int, passed: bool, text: str) -> None:
    ACCEPTANCE[number] = ("PASS" if passed else "FAIL", text)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        status, text = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {status}  {text}")


@pytest.fixture
def x():
    return X
