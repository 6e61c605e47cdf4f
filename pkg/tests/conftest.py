import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Reprint the one-line acceptance verdicts after the test summary."""
    mod = (sys.modules.get("tests.test_acceptance")
           or sys.modules.get("test_acceptance"))
    lines = getattr(mod, "CRITERION_LINES", None) if mod else None
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
