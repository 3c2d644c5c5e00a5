import re
from collections import defaultdict

CRITERIA = {
    1: "golden examples",
    2: "multi-route agreement for key and Young key",
    3: "duality between Young and reverse families",
    4: "positivity of the expansion arrows",
    5: "coincidence classifiers against brute force",
    6: "Schubert and Young Schubert suite on S4",
    7: "Young key module basis and trace",
    8: "property tests",
}

_outcomes = defaultdict(list)
_PATTERN = re.compile(r"test_acceptance\.py::test_c(\d+)_")


def pytest_runtest_logreport(report):
    m = _PATTERN.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or report.outcome != "passed":
        _outcomes[int(m.group(1))].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for k, label in CRITERIA.items():
        got = _outcomes.get(k)
        if not got:
            status = "NOT RUN"
        elif all(o == "passed" for o in got):
            status = "PASS"
        else:
            status = "FAIL"
        terminalreporter.write_line(f"Criterion {k} ({label}): {status}")
