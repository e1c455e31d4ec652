import json
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"

_criteria: dict[str, str] = {}


@pytest.fixture(scope="session")
def paper_arrays():
    return json.loads((DATA / "paper_arrays.json").read_text())


def record(criterion: str, passed: bool, detail: str = "") -> None:
    _criteria[criterion] = ("PASS" if passed else "FAIL") + (f"  {detail}" if detail else "")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=lambda s: int(s.split(".")[0])):
        terminalreporter.write_line(f"{name}: {_criteria[name]}")
