"""Shared collector for the acceptance pass/fail lines."""

lines: list[str] = []


def record(line: str):
    lines.append(line)
    print(line)
