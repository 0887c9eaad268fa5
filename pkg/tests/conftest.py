"""Collects acceptance-criterion verdicts and prints them after the run."""

VERDICTS = []


def record_verdict(line):
    VERDICTS.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in VERDICTS:
            terminalreporter.write_line(line)
