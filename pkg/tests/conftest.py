import checks


def pytest_terminal_summary(terminalreporter):
    if not checks.ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(checks.ACCEPTANCE):
        terminalreporter.write_line(checks.ACCEPTANCE[k])
