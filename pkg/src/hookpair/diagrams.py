"""Cells, regions, and exact arm/leg statistics for skew diagrams.

Rows are indexed from the bottom starting at 1 and columns from the left
starting at 1, so the cell (i, j) sits in row i, column j. All statistics
are exact integers. Multisets are ``collections.Counter`` maps, keyed by
(arm, leg) pairs or by hook lengths.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import (
    CellNotInSet,
    EmptySet,
    IndexOutOfRange,
    NotASubset,
    NotWeaklyDecreasing,
    PartExceedsN,
    WrongLength,
)

Cell = tuple[int, int]

REGION_KINDS = ("D", "R", "T", "V", "SQ", "Tstar", "R1", "R2", "T1star", "T2star")


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing integer parts, exactly ``k`` of them, each at most ``n``.

    Trailing zero parts are kept, so the length is always ``k``.
    """

    parts: tuple[int, ...]
    k: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if self.k < 1 or self.n < 1:
            raise ValueError("bounds k and n must be positive")
        if len(self.parts) != self.k:
            raise WrongLength(f"need exactly {self.k} parts, got {len(self.parts)}")
        for a, b in zip(self.parts, self.parts[1:]):
            if a < b:
                raise NotWeaklyDecreasing(f"parts must be weakly decreasing: {self.parts}")
        if self.parts[-1] < 0:
            raise NotWeaklyDecreasing(f"parts must be non-negative: {self.parts}")
        if self.parts[0] > self.n:
            raise PartExceedsN(f"part {self.parts[0]} exceeds bound n={self.n}")

    @classmethod
    def from_text(cls, text: str, k: int, n: int) -> "Partition":
        """Parse comma-separated parts, padding omitted trailing zeros to length k."""
        items = [s for s in (piece.strip() for piece in text.split(",")) if s]
        parts = tuple(int(s) for s in items)
        if len(parts) > k:
            raise WrongLength(f"got {len(parts)} parts for k={k}")
        return cls(parts + (0,) * (k - len(parts)), k, n)

    def part(self, j: int) -> int:
        """1-indexed part access."""
        return self.parts[j - 1]

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.parts) + ")"


def conjugate(p: Partition) -> Partition:
    """Transpose of the partition: part j of the result counts parts of p that are >= j.

    The result has length p.n and bound p.k.
    """
    counts = tuple(sum(1 for a in p.parts if a >= j) for j in range(1, p.n + 1))
    return Partition(counts, p.n, p.k)


class CellSet:
    """Immutable finite set of lattice cells with O(log) arm/leg queries.

    Arbitrary cell sets are allowed; skew-shape validity is a property one
    can query, not a construction requirement.
    """

    __slots__ = ("_cells", "_rows", "_cols")

    def __init__(self, cells: Iterable[Cell] = ()):
        frozen = frozenset((int(r), int(c)) for r, c in cells)
        for r, c in frozen:
            if r < 1 or c < 1:
                raise ValueError(f"cell ({r},{c}) outside the positive quadrant")
        rows: dict[int, list[int]] = {}
        cols: dict[int, list[int]] = {}
        for r, c in sorted(frozen):
            rows.setdefault(r, []).append(c)
            cols.setdefault(c, []).append(r)
        object.__setattr__(self, "_cells", frozen)
        object.__setattr__(self, "_rows", rows)
        object.__setattr__(self, "_cols", cols)

    @classmethod
    def from_row_intervals(cls, intervals: Mapping[int, tuple[int, int]]) -> "CellSet":
        """Build from {row: (col_min, col_max)}; rows with col_min > col_max are skipped."""
        cells = []
        for r, (lo, hi) in intervals.items():
            cells.extend((r, c) for c in range(lo, hi + 1))
        return cls(cells)

    @property
    def cells(self) -> frozenset[Cell]:
        return self._cells

    def __contains__(self, cell: Cell) -> bool:
        return cell in self._cells

    def __iter__(self) -> Iterator[Cell]:
        return iter(sorted(self._cells))

    def __len__(self) -> int:
        return len(self._cells)

    def __eq__(self, other) -> bool:
        if isinstance(other, CellSet):
            return self._cells == other._cells
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._cells)

    def __repr__(self) -> str:
        return f"CellSet({sorted(self._cells)!r})"

    def occupied_rows(self) -> list[int]:
        return sorted(self._rows)

    def row_cols(self, r: int) -> list[int]:
        """Sorted columns occupied in row r (empty list if none)."""
        return list(self._rows.get(r, ()))

    def col_rows(self, c: int) -> list[int]:
        """Sorted rows occupied in column c (empty list if none)."""
        return list(self._cols.get(c, ()))

    def _require(self, cell: Cell) -> None:
        if cell not in self._cells:
            raise CellNotInSet(f"cell {cell} not in the set")

    def _require_nonempty(self) -> None:
        if not self._cells:
            raise EmptySet("operation needs a non-empty cell set")

    def arm(self, cell: Cell) -> int:
        """Number of cells strictly to the right of ``cell`` in its row."""
        self._require(cell)
        cols = self._rows[cell[0]]
        return len(cols) - bisect_right(cols, cell[1])

    def leg(self, cell: Cell) -> int:
        """Number of cells strictly below ``cell`` in its column."""
        self._require(cell)
        rows = self._cols[cell[1]]
        return bisect_left(rows, cell[0])

    def coleg(self, cell: Cell) -> int:
        """Number of cells strictly above ``cell`` in its column."""
        self._require(cell)
        rows = self._cols[cell[1]]
        return len(rows) - bisect_right(rows, cell[0])

    def hook(self, cell: Cell) -> int:
        return self.arm(cell) + self.leg(cell) + 1

    def is_skew_valid(self) -> bool:
        """True when every occupied row is contiguous and both edges rise with the row."""
        prev_lo = prev_hi = None
        for r in self.occupied_rows():
            cols = self._rows[r]
            lo, hi = cols[0], cols[-1]
            if hi - lo + 1 != len(cols):
                return False
            if prev_lo is not None and (lo < prev_lo or hi < prev_hi):
                return False
            prev_lo, prev_hi = lo, hi
        return True

    def bounds(self) -> tuple[int, int, int, int]:
        """(min_row, max_row, min_col, max_col) of the occupied cells."""
        self._require_nonempty()
        rs = [r for r, _ in self._cells]
        cs = [c for _, c in self._cells]
        return min(rs), max(rs), min(cs), max(cs)

    def translate(self, dr: int, dc: int) -> "CellSet":
        return CellSet((r + dr, c + dc) for r, c in self._cells)

    def normalize(self) -> "CellSet":
        """Translate so the minimum occupied row and column are both 1."""
        self._require_nonempty()
        rmin, _, cmin, _ = self.bounds()
        return self.translate(1 - rmin, 1 - cmin)

    def rotate180(self) -> "CellSet":
        """Rotate half a turn inside the bounding box, then normalize."""
        self._require_nonempty()
        _, rmax, _, cmax = self.bounds()
        return CellSet((rmax + 1 - r, cmax + 1 - c) for r, c in self._cells)

    def reflect_vertical(self) -> "CellSet":
        """Mirror left-to-right inside the bounding box, then normalize."""
        self._require_nonempty()
        rmin, _, _, cmax = self.bounds()
        return CellSet((r - rmin + 1, cmax + 1 - c) for r, c in self._cells)

    def row_intervals(self) -> list[tuple[int, int, int]]:
        """(row, col_min, col_max) per occupied row, ascending; rows must be contiguous."""
        out = []
        for r in self.occupied_rows():
            cols = self._rows[r]
            if cols[-1] - cols[0] + 1 != len(cols):
                raise ValueError(f"row {r} is not contiguous")
            out.append((r, cols[0], cols[-1]))
        return out

    def to_json(self) -> dict:
        return {
            "rows": [
                {"row": r, "colMin": lo, "colMax": hi} for r, lo, hi in self.row_intervals()
            ]
        }

    @classmethod
    def from_json(cls, data: dict) -> "CellSet":
        return cls.from_row_intervals(
            {entry["row"]: (entry["colMin"], entry["colMax"]) for entry in data["rows"]}
        )


def build_region(p: Partition, kind: str) -> CellSet:
    """Construct one of the named regions determined by the partition.

    Kinds and their rows (row index i counted from the bottom):

    - ``D``      row i spans columns 1 .. parts[k-i+1]
    - ``R``      the full k x n rectangle
    - ``T``      row i spans parts[1]-parts[i]+1 .. n+parts[1]-parts[i]
    - ``V``      rows k+1..2k, right-justified at column n+parts[1]
    - ``SQ``     union of T and V
    - ``Tstar``  half-turn rotation of T, rows parts[k-i+1]-parts[k]+1 .. n+parts[k-i+1]-parts[k]
    - ``R1``     right part of R, row i holds the last parts[k-i+1] columns
    - ``R2``     complementary left part of R
    - ``T1star`` columns of Tstar up to n-parts[k], per row
    - ``T2star`` columns of Tstar beyond n-parts[k], per row
    """
    if kind not in REGION_KINDS:
        raise ValueError(f"unknown region kind {kind!r}")
    a = p.parts
    k, n = p.k, p.n
    a1, ak = a[0], a[-1]
    rows: dict[int, tuple[int, int]] = {}
    if kind == "D":
        rows = {i: (1, a[k - i]) for i in range(1, k + 1)}
    elif kind == "R":
        rows = {i: (1, n) for i in range(1, k + 1)}
    elif kind == "T":
        rows = {i: (a1 - a[i - 1] + 1, n + a1 - a[i - 1]) for i in range(1, k + 1)}
    elif kind == "V":
        rows = {k + m: (n + a1 - a[m - 1] + 1, n + a1) for m in range(1, k + 1)}
    elif kind == "SQ":
        t = build_region(p, "T")
        v = build_region(p, "V")
        return CellSet(t.cells | v.cells)
    elif kind == "Tstar":
        rows = {i: (a[k - i] - ak + 1, n + a[k - i] - ak) for i in range(1, k + 1)}
    elif kind == "R1":
        rows = {i: (n - a[k - i] + 1, n) for i in range(1, k + 1)}
    elif kind == "R2":
        rows = {i: (1, n - a[k - i]) for i in range(1, k + 1)}
    elif kind == "T1star":
        rows = {i: (a[k - i] - ak + 1, n - ak) for i in range(1, k + 1)}
    elif kind == "T2star":
        rows = {i: (n - ak + 1, n + a[k - i] - ak) for i in range(1, k + 1)}
    return CellSet.from_row_intervals(rows)


def al_multiset(g: CellSet, e: CellSet | Iterable[Cell]) -> Counter:
    """Multiset of (arm, leg) pairs of the cells of ``e`` measured inside ``g``."""
    members = e.cells if isinstance(e, CellSet) else frozenset(e)
    if not members <= g.cells:
        raise NotASubset("statistics requested for cells outside the diagram")
    return Counter((g.arm(x), g.leg(x)) for x in members)


def hook_multiset(g: CellSet, e: CellSet | Iterable[Cell]) -> Counter:
    """Multiset of hook lengths of the cells of ``e`` measured inside ``g``."""
    members = e.cells if isinstance(e, CellSet) else frozenset(e)
    if not members <= g.cells:
        raise NotASubset("statistics requested for cells outside the diagram")
    return Counter(g.hook(x) for x in members)


def arm_slice(g: CellSet, i: int) -> CellSet:
    """Cells whose arm inside ``g`` is exactly i-1: the i-th cell from the right of each row."""
    if i < 1:
        raise IndexOutOfRange(f"arm index {i} must be at least 1")
    picked = []
    for r in g.occupied_rows():
        cols = g.row_cols(r)
        if len(cols) < i:
            raise IndexOutOfRange(f"row {r} has only {len(cols)} cells, need {i}")
        picked.append((r, cols[-i]))
    return CellSet(picked)


def arm_prefix(g: CellSet, i: int) -> CellSet:
    """Cells whose arm inside ``g`` is at most i-1: the i rightmost cells of each row."""
    if i < 1:
        raise IndexOutOfRange(f"arm index {i} must be at least 1")
    picked = []
    for r in g.occupied_rows():
        cols = g.row_cols(r)
        if len(cols) < i:
            raise IndexOutOfRange(f"row {r} has only {len(cols)} cells, need {i}")
        picked.extend((r, c) for c in cols[-i:])
    return CellSet(picked)


def multiset_eq(a: Counter, b: Counter) -> bool:
    return +a == +b


def multiset_union(a: Counter, b: Counter) -> Counter:
    return a + b


def multiset_to_json(m: Counter) -> list[dict]:
    """Arm/leg multiset as a sorted JSON array of {"arm", "leg", "count"} records."""
    return [
        {"arm": key[0], "leg": key[1], "count": m[key]}
        for key in sorted(k for k, v in m.items() if v)
    ]


def hook_multiset_to_json(m: Counter) -> list[dict]:
    return [{"hook": h, "count": m[h]} for h in sorted(k for k, v in m.items() if v)]


def first_multiset_difference(a: Counter, b: Counter) -> dict | None:
    """Smallest key whose multiplicities differ, or None when the multisets agree."""
    for key in sorted(set(a) | set(b)):
        if a[key] != b[key]:
            return {"key": key, "left": a[key], "right": b[key]}
    return None
