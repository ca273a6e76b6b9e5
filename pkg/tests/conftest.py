import random
from pathlib import Path

import pytest

from hyperdet.fields import PrimeField
from hyperdet.hypermatrix import GroupElement, Hypermatrix
from hyperdet import matrices as mx

DATA = Path(__file__).parent / "data"

_ACCEPTANCE_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    failed = report.failed or (report.when == "call" and report.skipped)
    if report.when == "call" or failed:
        prev = _ACCEPTANCE_RESULTS.get(number)
        ok = not failed and (prev is None or prev[0])
        _ACCEPTANCE_RESULTS[number] = (ok, title)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE_RESULTS):
        ok, title = _ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"AC{number} {'PASS' if ok else 'FAIL'}: {title}")


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(scope="session")
def F7():
    return PrimeField(7)


@pytest.fixture(scope="session")
def F10007():
    return PrimeField(10007)


def random_matrix(F, n, rng):
    return [[F.random(rng) for _ in range(n)] for _ in range(n)]


def random_invertible(F, n, rng):
    while True:
        m = random_matrix(F, n, rng)
        if not F.is_zero(mx.det(F, m)):
            return m


def random_group_element(F, k, rng):
    return GroupElement._wrap(F, random_invertible(F, k, rng), random_invertible(F, k + 1, rng))


def random_hypermatrix(F, k, rng):
    return Hypermatrix._wrap(F, k, [[[F.random(rng) for _ in range(k)] for _ in range(k + 1)]
                                    for _ in range(2)])


def random_degenerate(F, k, rng):
    """A hypermatrix whose pencil drops rank at a random point ``(x0 : y0)``, y0 != 0."""
    x0 = F.random(rng)
    y0 = F.random(rng, nonzero=True)
    s0 = [[F.random(rng) for _ in range(k)] for _ in range(k + 1)]
    # S = x0*S0 + y0*S1 with dependent columns: last column a combination of the others
    S = [[F.random(rng) for _ in range(k)] for _ in range(k + 1)]
    coef = [F.random(rng) for _ in range(k - 1)]
    for row in S:
        acc = F.zero
        for c in range(k - 1):
            acc = F.add(acc, F.mul(coef[c], row[c]))
        row[k - 1] = acc
    yinv = F.inv(y0)
    s1 = [[F.mul(F.sub(S[r][c], F.mul(x0, s0[r][c])), yinv) for c in range(k)]
          for r in range(k + 1)]
    return Hypermatrix._wrap(F, k, [s0, s1])
