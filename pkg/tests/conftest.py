import pytest

from friezes import make_frieze

FIG7_ROWS = [[2, 26, 12], [4, 2], [2]]
FIG5_ROWS = [[3, 6, 3], [3, 3], [3]]

# explicit choices of the worked example: p -> (ip, residue of y[ip])
WORKED_STEPS = [
    {"edge": (3, 0), "primes": {2: (2, 1), 3: (2, 1)}},
    {"edge": (4, 0), "primes": {5: (3, 1)}},
    {"edge": (5, 0), "primes": {3: (4, 2)}},
]

# reference decagon: drawing corners 1..10 (corner k is vertex (k + 7) mod 10) and its triangulation
DECAGON_CORNER_DIAGONALS = [(2, 4), (2, 5), (5, 1), (5, 10), (6, 10), (6, 8), (6, 9)]


@pytest.fixture
def fig7():
    return make_frieze(4, FIG7_ROWS)


@pytest.fixture
def fig5():
    return make_frieze(4, FIG5_ROWS)


@pytest.fixture
def worked_steps():
    return [dict(s) for s in WORKED_STEPS]


# -- acceptance summary -------------------------------------------------------

_results = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        _results.append((mark.args[0], mark.args[1], rep.passed, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, duration in sorted(_results):
        terminalreporter.write_line("criterion %d  %s  %-60s %.2fs"
                                    % (number, "PASS" if passed else "FAIL",
                                       title, duration))
