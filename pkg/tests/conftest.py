import re

import pytest

# Reference matrices quoted in the literature on 3-letter presentations.
BASES = {
    "cl30": ["IX", "IZ", "AA"],
    "cl30_3char": ["IIXX", "IIZX", "IZIZ"],
    "m2": ["XX", "ZX", "IZ"],
    "4a": ["XXX", "XXZ", "XZI", "ZII"],
    "4b": ["XXI", "XZI", "ZIX", "ZIZ"],
    "5": ["XXX", "XIZ", "IZX", "ZXI", "ZZZ"],
    "5a": ["XXXX", "XXIZ", "IZXI", "ZIZZ", "ZZZX"],
    "5b": ["XXXX", "XXXZ", "XXZI", "XZII", "ZIII"],
    "5g": ["XXXI", "XXZI", "XZIX", "XZIZ", "ZIII"],
    "5d": ["XXXI", "XXZI", "XZII", "ZIIX", "ZIIZ"],
    "6a": ["XXXX", "ZIXX", "XZIX", "IXZX", "ZZZX", "IIIZ"],
    "6b": ["XXXX", "ZXXX", "IZIX", "IXZI", "IIXZ", "IZZZ"],
    "6g": ["IXXX", "IZXX", "XIZX", "ZIZI", "ZIXZ", "XIIZ"],
    "7": ["XXXX", "ZIXX", "XZIX", "IXZI", "ZZZI", "IIXZ", "XZZZ"],
    "8": ["IXXX", "XZIX", "ZIZX", "ZZXI", "XXZI", "XIXZ", "ZXIZ", "IZZZ"],
}

M3_CLASSES = ("4a", "4b", "5")
M4_CLASSES = ("5a", "5b", "5g", "5d", "6a", "6b", "6g", "7", "8")


@pytest.fixture
def bases():
    return {k: list(v) for k, v in BASES.items()}


_acceptance: dict = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    m = re.search(r"test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2))
    if report.when == "call" or report.failed:
        if report.failed or key not in _acceptance:
            _acceptance[key] = "FAIL" if report.failed else ("SKIP" if report.skipped else "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for (n, name), outcome in sorted(_acceptance.items()):
        terminalreporter.write_line(f"criterion {n:2d} {name:<28} {outcome}")
