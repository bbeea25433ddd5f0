import pytest

from pertower.ffield import build_field

SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


def fields_up_to(bound, primes=SMALL_PRIMES):
    """(p, n) for every p in ``primes`` and every n with p**n <= bound."""
    out = []
    for p in primes:
        n = 1
        while p**n <= bound:
            out.append((p, n))
            n += 1
    return out


def direct_valuation(q, m):
    """Valuation by repeated division; no shared code with the package."""
    nu = 0
    while m % q == 0:
        m //= q
        nu += 1
    return nu


def primes_below(k):
    return [m for m in range(2, k + 1) if all(m % d for d in range(2, int(m**0.5) + 1))]


@pytest.fixture(scope="session")
def f9():
    return build_field(3, 2)


# acceptance report lines, printed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
