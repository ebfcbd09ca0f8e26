"""Shared helpers for the test suite: exhaustive enumerations and strategies."""

from itertools import combinations

from hypothesis import strategies as st

from hookpair.diagrams import CellSet, Partition


ACCEPTANCE_LINES: list[str] = []


def check_criterion(name: str, ok: bool, note: str = "") -> None:
    """Record one pass/fail verdict line and fail the test if not ok."""
    line = f"{'PASS' if ok else 'FAIL'}  {name}"
    if note:
        line += f"  [{note}]"
    ACCEPTANCE_LINES.append(line)
    assert ok, f"acceptance criterion failed: {name}"


def strict_partitions(k):
    """Every strictly decreasing tuple with parts drawn from 1..k, incl. ()."""
    for r in range(k + 1):
        for combo in combinations(range(k, 0, -1), r):
            yield tuple(combo)


def all_partitions(k, n):
    """Every weakly decreasing k-tuple with entries in 0..n, lexicographically."""

    def gen(length, bound):
        if length == 0:
            yield ()
            return
        for first in range(bound + 1):
            for rest in gen(length - 1, first):
                yield (first,) + rest

    for parts in gen(k, n):
        yield Partition(parts, k, n)


def sweep_partitions(max_k, max_n):
    for n in range(1, max_n + 1):
        for k in range(1, max_k + 1):
            yield from all_partitions(k, n)


@st.composite
def partitions(draw, max_k=5, max_n=5):
    k = draw(st.integers(1, max_k))
    n = draw(st.integers(1, max_n))
    parts = draw(st.lists(st.integers(0, n), min_size=k, max_size=k))
    return Partition(tuple(sorted(parts, reverse=True)), k, n)


cell_sets = st.sets(
    st.tuples(st.integers(1, 6), st.integers(1, 6)), min_size=1, max_size=20
).map(CellSet)


def arm_by_scan(g, cell):
    r, c = cell
    return sum(1 for rr, cc in g.cells if rr == r and cc > c)


def leg_by_scan(g, cell):
    r, c = cell
    return sum(1 for rr, cc in g.cells if cc == c and rr < r)


def coleg_by_scan(g, cell):
    r, c = cell
    return sum(1 for rr, cc in g.cells if cc == c and rr > r)
