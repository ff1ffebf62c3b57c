import contextlib

import pytest

ACCEPTANCE_LINES = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[ACCEPTANCE_LINES] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE_LINES, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
        terminalreporter.write_line(line)


@pytest.fixture
def criterion(request):
    """Context manager factory that records one PASS/FAIL line per criterion."""

    @contextlib.contextmanager
    def record(number: int, title: str):
        try:
            yield
        except BaseException as exc:
            line = f"CRITERION {number}: FAIL {title} ({type(exc).__name__}: {exc})"
            print(line)
            request.config.stash[ACCEPTANCE_LINES].append(line)
            raise
        line = f"CRITERION {number}: PASS {title}"
        print(line)
        request.config.stash[ACCEPTANCE_LINES].append(line)

    return record
