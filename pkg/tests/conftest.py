import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE: list[str] = []


class AcceptanceRecorder:
    """Collects one summary line per acceptance criterion."""

    def __init__(self, label: str):
        self.label = label
        self.start = None
        self.elapsed = None
        self.detail = ""

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        self.elapsed = time.perf_counter() - self.start
        return False

    def report(self, ok: bool, detail: str = ""):
        verdict = "PASS" if ok else "FAIL"
        line = f"[{verdict}] {self.label}: {detail} ({self.elapsed:.3f} s)"
        _ACCEPTANCE.append(line)
        print(line)
        return ok


@pytest.fixture
def acceptance():
    return AcceptanceRecorder


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
