from hypothesis import settings

# property suites run at least a thousand cases each
settings.register_profile("thorough", max_examples=1000, deadline=None)
settings.load_profile("thorough")

# one line per acceptance criterion, printed after the run
CRITERIA_LINES = []


def pytest_terminal_summary(terminalreporter):
    if CRITERIA_LINES:
        terminalreporter.section("acceptance criteria")
        for line in CRITERIA_LINES:
            terminalreporter.write_line(line)
