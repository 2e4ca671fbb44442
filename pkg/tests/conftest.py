"""Shared test helpers: acceptance-line reporting.

Acceptance tests call report() with one line per criterion; the lines
are echoed immediately (visible under -s) and again in the terminal
summary so a plain pytest run still shows the full pass/fail table.
"""

import sys

ACCEPTANCE_LINES: list[str] = []


def report(name: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {name}"
    if detail:
        line += f": {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line, file=sys.stderr, flush=True)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
