from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import _report


def pytest_addoption(parser):
    parser.addoption(
        "--big",
        action="store_true",
        default=False,
        help="run the seven-vertex benchmark computations (minutes each)",
    )
    parser.addoption(
        "--deep",
        action="store_true",
        default=False,
        help="run optional very expensive cross-checks",
    )


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _report.lines:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for line in _report.lines:
        terminalreporter.write_line(line)
