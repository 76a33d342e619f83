from __future__ import annotations

import pytest

from nplusline.multigraph import Multigraph

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def graph(n: int, *pairs: tuple[int, int]) -> Multigraph:
    return Multigraph.from_pairs(n, pairs)


def cycle(n: int) -> Multigraph:
    return Multigraph.from_pairs(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Multigraph:
    return Multigraph.from_pairs(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path(n: int) -> Multigraph:
    return Multigraph.from_pairs(n, [(i, i + 1) for i in range(n - 1)])


@pytest.fixture
def record_criterion():
    def record(name: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_RESULTS[name] = (ok, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[0])):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
