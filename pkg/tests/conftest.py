import pytest
from hypothesis import settings

settings.register_profile("twyang", max_examples=40, deadline=None)
settings.load_profile("twyang")


def pytest_configure(config):
    config.twyang_acceptance = {}


@pytest.fixture
def record(request):
    """record(criterion, ok, detail) -> one PASS/FAIL line in the summary."""
    def put(n: int, ok: bool, detail: str = ""):
        request.config.twyang_acceptance[n] = (ok, detail)
    return put


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    table = getattr(config, "twyang_acceptance", {})
    if not table:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(table):
        ok, detail = table[n]
        tail = f"  ({detail})" if detail else ""
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}{tail}")
