"""Shared pytest hooks.

The acceptance tests register a verdict per numbered criterion through
record_criterion; after the run a summary section prints exactly one
PASS/FAIL line per criterion, including ones whose test never reached a
verdict (fixture error, crash).
"""

CRITERION_COUNT = 9

_lines = {}
_acceptance_selected = False


def record_criterion(num: int, ok: bool, label: str) -> bool:
    word = "PASS" if ok else "FAIL"
    _lines[num] = "criterion %d: %s - %s" % (num, word, label)
    return ok


def pytest_collection_modifyitems(config, items):
    global _acceptance_selected
    for item in items:
        if item.module.__name__ == "test_acceptance":
            _acceptance_selected = True
            break


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_selected:
        return
    terminalreporter.section("acceptance criteria")
    for num in range(1, CRITERION_COUNT + 1):
        line = _lines.get(
            num, "criterion %d: FAIL - test did not reach a verdict" % num)
        terminalreporter.write_line(line)
