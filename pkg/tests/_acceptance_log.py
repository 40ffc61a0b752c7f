"""Shared registry for the acceptance criterion results.

Each criterion test records exactly one line here; the conftest terminal
summary prints them after the run so they survive pytest's capture.
"""

LINES: list[str] = []


def record(num: int, ok: bool, detail: str) -> bool:
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'} - {detail}"
    LINES.append(line)
    print(line)
    return ok
