"""Pytest wiring: echo acceptance verdict lines after the run.

Capture (the fd-level default) swallows prints from inside tests, so the
acceptance module records its one-line verdicts here and a terminal-summary
hook replays them where they stay visible under any capture mode.
"""

from __future__ import annotations

VERDICT_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if VERDICT_LINES:
        terminalreporter.section("acceptance criteria")
        for line in VERDICT_LINES:
            terminalreporter.write_line(line)
