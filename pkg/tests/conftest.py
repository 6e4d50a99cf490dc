import pytest

ACCEPTANCE_LINES: dict[str, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    number = getattr(item.function, "criterion", None)
    if number is not None and rep.when == "call":
        status = "PASS" if rep.passed else "FAIL"
        if "FAIL" in ACCEPTANCE_LINES.get(number, ""):
            return
        ACCEPTANCE_LINES[number] = f"criterion {number:>2} {status}  {item.function.__doc__.strip().splitlines()[0]}"


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
