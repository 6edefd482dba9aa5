import pytest

ACCEPTANCE_KEY = pytest.StashKey()


@pytest.fixture(scope="session")
def criterion_log(request):
    """Shared list of one-line acceptance verdicts, echoed after the run."""
    return request.config.stash.setdefault(ACCEPTANCE_KEY, [])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE_KEY, None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
