import pytest

from agdecode import build_code, load_curve


@pytest.fixture(scope="session")
def klein():
    return load_curve("klein.json")


@pytest.fixture(scope="session")
def herm():
    return load_curve("hermitian4.json")


@pytest.fixture(scope="session")
def kcode(klein):
    return build_code(klein.curve, klein.places, 12, klein.f)


@pytest.fixture(scope="session")
def hcode(herm):
    return build_code(herm.curve, herm.places, 4, herm.f)


_CRITERIA = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if name.startswith("test_criterion_") and (report.when == "call" or report.failed):
        _CRITERIA[int(name.split("_")[2])] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    from test_acceptance import CRITERIA
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        terminalreporter.write_line(f"criterion {n}: {_CRITERIA[n]}  {CRITERIA[n]}")
