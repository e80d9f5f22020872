import pytest

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion."""
    def report(number: int, ok: bool, detail: str) -> None:
        ACCEPTANCE[number] = (ok, detail)
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")
    return report


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")
