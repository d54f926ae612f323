import pytest

from rectwalg.lie import Pyramid

# parameter sets used across the verification suites
WALG_CASES = [(2, 2, "-"), (2, 2, "+"), (2, 3, "-"), (4, 2, "-"), (3, 3, "+")]
CLASSIFY_CASES = [(2, 2, "-"), (2, 2, "+"), (2, 3, "-"), (2, 3, "+"), (4, 2, "-"), (3, 3, "+")]
POOL = ["-2", "-1", "0", "1", "2", "1/2", "-1/2", "3/2", "-3/2"]


@pytest.fixture(params=WALG_CASES, ids=lambda c: f"n{c[0]}l{c[1]}{c[2]}")
def walg_pyr(request):
    return Pyramid(*request.param)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
