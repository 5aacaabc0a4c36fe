import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from permgraph.harness import build_corpus  # noqa: E402

_ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def corpus200():
    c = build_corpus(200)
    c.records  # compute once for the whole session
    return c


@pytest.fixture(scope="session")
def criterion():
    def record(number: int, ok: bool, detail: str = "") -> None:
        _ACCEPTANCE[number] = (ok, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        ok, detail = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
