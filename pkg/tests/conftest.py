import re
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = re.match(r"test_ac(\d+)_", item.name)
    if not m or rep.when == "teardown" and rep.passed:
        return
    if rep.when == "call" or rep.failed:
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        num = int(m.group(1))
        ok = rep.passed and _criteria.get(num, (True,))[0]
        _criteria[num] = (ok, doc)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        ok, doc = _criteria[num]
        terminalreporter.write_line(f"AC{num:02d} {'PASS' if ok else 'FAIL'}  {doc}")
