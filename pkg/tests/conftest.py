import sys

import pytest

from degdiam import BACKENDS


@pytest.fixture(params=sorted(BACKENDS))
def backend(request):
    """Run a test once per available BFS backend."""
    return request.param


def pytest_terminal_summary(terminalreporter):
    """Print one line per acceptance criterion that ran in this session."""
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(module.RESULTS):
        terminalreporter.write_line(module.format_line(n, module.RESULTS[n]))
