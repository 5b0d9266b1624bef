import pytest

from acceptance_log import LINES as ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def sieve_1e6():
    """Smallest-prime-factor table up to 10**6, built independently of the package."""
    n = 10**6
    spf = list(range(n + 1))
    for p in range(2, 1001):
        if spf[p] == p:
            for q in range(p * p, n + 1, p):
                if spf[q] == q:
                    spf[q] = p
    return spf
