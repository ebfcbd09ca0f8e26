"""Arm/leg preserving cell maps between the regions of a bounded partition.

The central map ``phi`` sends the strip T onto its rotation T*: the cell with
arm i-1 in row j goes to the cell with arm i-1 of T* in row P_i(j), where P_i
is the up/down pairing of the lattice path at cut i.  Three elementary maps
``zeta_1/2/3`` then move V and the two halves of T* onto the rectangle halves
and onto D, and ``psi`` composes them into a single bijection from SQ onto
the disjoint union of R and D.

Every map can be certified: a certificate records, cell by cell, the (arm,
leg) pair at the source and at the image, measured in the ambient regions,
plus bijectivity bookkeeping.  ``verify_theorem`` checks the three multiset
identities both ways (direct enumeration and certificate) and raises
CounterexampleFound on any discrepancy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .diagrams import (
    Cell,
    CellSet,
    Partition,
    al_multiset,
    build_region,
    first_multiset_difference,
    hook_multiset,
    hook_multiset_to_json,
    multiset_eq,
    multiset_to_json,
    multiset_union,
)
from .dyck import build_dyck, build_sigma, label_cells, pair_updown
from .errors import CellNotInT, CounterexampleFound

__all__ = [
    "MapEntry",
    "CellMap",
    "CertRecord",
    "BijectionCertificate",
    "rot_T",
    "phi_map",
    "zeta_map",
    "psi_map",
    "build_certificate",
    "theorem_report",
    "verify_theorem",
]


@dataclass(frozen=True)
class MapEntry:
    source: Cell
    target: Cell
    target_tag: str
    al: tuple[int, int]


class CellMap:
    """An injective cell-to-cell map with per-entry target tags."""

    def __init__(self, source_tag: str, entries: Iterable[MapEntry]):
        self.source_tag = source_tag
        self.entries = tuple(sorted(entries, key=lambda e: e.source))
        self._by_source = {e.source: e for e in self.entries}
        if len(self._by_source) != len(self.entries):
            raise ValueError("duplicate source cell in map")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __contains__(self, cell: Cell) -> bool:
        return cell in self._by_source

    def __getitem__(self, cell: Cell) -> MapEntry:
        return self._by_source[cell]

    def sources(self) -> set[Cell]:
        return set(self._by_source)

    def to_json(self) -> list[dict]:
        return [
            {
                "from": list(e.source),
                "to": list(e.target),
                "target": e.target_tag,
                "al": list(e.al),
            }
            for e in self.entries
        ]


def rot_T(p: Partition, x: Cell) -> Cell:
    """Rotate a cell of T by 180 degrees inside T's bounding box.

    The image always lies in T*, and applying the rotation twice returns the
    original cell.
    """
    strip = build_region(p, "T")
    if x not in strip:
        raise CellNotInT(f"cell {x} is not in the strip of {p}")
    r, c = x
    return (p.k + 1 - r, p.n + p.part(1) - p.part(p.k) + 1 - c)


def phi_map(p: Partition) -> CellMap:
    """The strip bijection T -> T*.

    For each cut i, the arm-(i-1) cells of T are matched through the lattice
    path pairing: the one in row j is sent to the arm-(i-1) cell of T* in row
    P_i(j).  Equivalently the target is the 180-degree rotation, within the
    bounding box of the arm-prefix at cut i, of the rightmost cell of T in
    row k+1-P_i(j).
    """
    strip = build_region(p, "T")
    star = build_region(p, "Tstar")
    entries = []
    for i in range(1, p.n + 1):
        pairing = pair_updown(build_dyck(build_sigma(p, i)))
        xs, _ = label_cells(p, i)
        for lab in xs:
            row = pairing[lab.index]
            target = (row, star.row_cols(row)[-i])
            al = (strip.arm(lab.cell), strip.leg(lab.cell))
            entries.append(MapEntry(lab.cell, target, "Tstar", al))
    return CellMap("T", entries)


def zeta_map(p: Partition, kind: int) -> CellMap:
    """One of the three elementary region maps.

    kind 1: V -> R1, matching the t-th cell from the top of the j-th column
    from the left on each side (the column lengths agree).  kind 2: T*1 -> R2
    by the per-row shift that left-justifies the row.  kind 3: T*2 -> D by a
    single horizontal translation.  Arm/leg entries are recorded in the
    ambient regions (SQ for kind 1, T* for kinds 2 and 3).
    """
    if kind == 1:
        sq = build_region(p, "SQ")
        v = build_region(p, "V")
        r1 = build_region(p, "R1")
        width = p.part(1)
        entries = []
        for j in range(1, width + 1):
            src_col = p.n + j
            dst_col = p.n - width + j
            src_rows = v.col_rows(src_col)
            dst_rows = r1.col_rows(dst_col)
            for sr, dr in zip(reversed(src_rows), reversed(dst_rows), strict=True):
                src = (sr, src_col)
                entries.append(
                    MapEntry(src, (dr, dst_col), "R", (sq.arm(src), sq.leg(src)))
                )
        return CellMap("V", entries)
    if kind == 2:
        star = build_region(p, "Tstar")
        entries = [
            MapEntry(
                (r, c),
                (r, c - (p.part(p.k - r + 1) - p.part(p.k))),
                "R",
                (star.arm((r, c)), star.leg((r, c))),
            )
            for r, c in build_region(p, "T1star")
        ]
        return CellMap("T1star", entries)
    if kind == 3:
        star = build_region(p, "Tstar")
        shift = p.n - p.part(p.k)
        entries = [
            MapEntry(
                (r, c),
                (r, c - shift),
                "D",
                (star.arm((r, c)), star.leg((r, c))),
            )
            for r, c in build_region(p, "T2star")
        ]
        return CellMap("T2star", entries)
    raise ValueError(f"zeta kind must be 1, 2 or 3, got {kind!r}")


def psi_map(p: Partition) -> CellMap:
    """The composed bijection SQ -> R (disjoint union) D.

    V-cells go through zeta_1 into the right half of the rectangle.  Strip
    cells go through phi into T*; images landing in the left half T*1 are
    shifted into R2, the rest are translated onto D.
    """
    sq = build_region(p, "SQ")
    z1 = zeta_map(p, 1)
    z2 = zeta_map(p, 2)
    z3 = zeta_map(p, 3)
    entries = list(z1.entries)
    for e in phi_map(p):
        y = e.target
        follow = z2[y] if y in z2 else z3[y]
        al = (sq.arm(e.source), sq.leg(e.source))
        entries.append(MapEntry(e.source, follow.target, follow.target_tag, al))
    return CellMap("SQ", entries)


@dataclass(frozen=True)
class CertRecord:
    source: Cell
    target: Cell
    target_tag: str
    source_stat: tuple[int, ...]
    target_stat: tuple[int, ...]


@dataclass(frozen=True)
class BijectionCertificate:
    """Cell-level evidence that a map is bijective and statistic preserving."""

    records: tuple[CertRecord, ...]
    verdict: bool
    failures: tuple[dict, ...]

    def to_json(self) -> dict:
        return {
            "verdict": "pass" if self.verdict else "fail",
            "entries": [
                {
                    "from": list(r.source),
                    "to": list(r.target),
                    "target": r.target_tag,
                    "sourceStat": list(r.source_stat),
                    "targetStat": list(r.target_stat),
                }
                for r in self.records
            ],
            "failures": list(self.failures),
        }


def _stat_fn(stat: str):
    if stat == "al":
        return lambda g, c: (g.arm(c), g.leg(c))
    if stat == "hook":
        return lambda g, c: (g.hook(c),)
    raise ValueError(f"stat must be 'al' or 'hook', got {stat!r}")


def build_certificate(
    cmap: CellMap,
    source_ambient: CellSet,
    source_members: Iterable[Cell],
    targets: Mapping[str, tuple[CellSet, CellSet]],
    stat: str = "al",
) -> BijectionCertificate:
    """Check a CellMap against expected domain, image, and statistics.

    targets maps each tag to (ambient region, expected image cells).  The
    certificate fails if the domain differs from source_members, if two
    entries share a target, if the tagged images do not exactly cover the
    expected cells, or if any entry changes the chosen statistic.
    """
    measure = _stat_fn(stat)
    failures: list[dict] = []
    records: list[CertRecord] = []

    expected_domain = set(source_members)
    domain = cmap.sources()
    if domain != expected_domain:
        failures.append(
            {
                "kind": "domain-mismatch",
                "missing": sorted(expected_domain - domain),
                "extra": sorted(domain - expected_domain),
            }
        )

    seen: dict[tuple[str, Cell], Cell] = {}
    for e in cmap:
        key = (e.target_tag, e.target)
        if key in seen:
            failures.append(
                {
                    "kind": "not-injective",
                    "target": [e.target_tag, list(e.target)],
                    "sources": [list(seen[key]), list(e.source)],
                }
            )
        seen[key] = e.source

        if e.target_tag not in targets:
            failures.append({"kind": "unknown-target-tag", "tag": e.target_tag})
            continue
        ambient, members = targets[e.target_tag]
        if e.source not in source_ambient or e.target not in members:
            failures.append(
                {
                    "kind": "off-region",
                    "from": list(e.source),
                    "to": [e.target_tag, list(e.target)],
                }
            )
            continue
        s_stat = measure(source_ambient, e.source)
        t_stat = measure(ambient, e.target)
        records.append(CertRecord(e.source, e.target, e.target_tag, s_stat, t_stat))
        if s_stat != t_stat:
            failures.append(
                {
                    "kind": "stat-mismatch",
                    "from": list(e.source),
                    "to": [e.target_tag, list(e.target)],
                    "sourceStat": list(s_stat),
                    "targetStat": list(t_stat),
                }
            )

    covered = {tag: set() for tag in targets}
    for tag, cell in seen:
        if tag in covered:
            covered[tag].add(cell)
    for tag, (_, members) in targets.items():
        missed = set(members.cells if isinstance(members, CellSet) else members)
        missed -= covered[tag]
        if missed:
            failures.append(
                {"kind": "image-incomplete", "tag": tag, "missing": sorted(missed)}
            )

    return BijectionCertificate(tuple(records), not failures, tuple(failures))


def theorem_report(p: Partition, which: int) -> dict:
    """Verify one of the three multiset identities, both ways.

    which=1: hooks of SQ against hooks of R plus D.  which=2: the same with
    (arm, leg) pairs.  which=3: (arm, leg) pairs of T against T*.  The report
    contains the enumerated multisets, their first difference if any, and the
    matching bijection certificate (psi for 1 and 2, phi for 3).
    """
    if which == 3:
        strip = build_region(p, "T")
        star = build_region(p, "Tstar")
        left = al_multiset(strip, strip)
        right = al_multiset(star, star)
        cert = build_certificate(
            phi_map(p), strip, strip, {"Tstar": (star, star)}, "al"
        )
        sides = multiset_to_json(left), multiset_to_json(right)
    elif which in (1, 2):
        sq = build_region(p, "SQ")
        rect = build_region(p, "R")
        dgm = build_region(p, "D")
        targets = {"R": (rect, rect), "D": (dgm, dgm)}
        if which == 2:
            left = al_multiset(sq, sq)
            right = multiset_union(al_multiset(rect, rect), al_multiset(dgm, dgm))
            cert = build_certificate(psi_map(p), sq, sq, targets, "al")
            sides = multiset_to_json(left), multiset_to_json(right)
        else:
            left = hook_multiset(sq, sq)
            right = multiset_union(
                hook_multiset(rect, rect), hook_multiset(dgm, dgm)
            )
            cert = build_certificate(psi_map(p), sq, sq, targets, "hook")
            sides = hook_multiset_to_json(left), hook_multiset_to_json(right)
    else:
        raise ValueError(f"theorem must be 1, 2 or 3, got {which!r}")

    oracle_equal = multiset_eq(left, right)
    verdict = oracle_equal and cert.verdict
    return {
        "theorem": which,
        "alpha": list(p.parts),
        "k": p.k,
        "n": p.n,
        "oracle": {
            "left": sides[0],
            "right": sides[1],
            "equal": oracle_equal,
            "firstDifference": first_multiset_difference(left, right),
        },
        "certificate": cert.to_json(),
        "verdict": "pass" if verdict else "fail",
    }


def verify_theorem(p: Partition, which: int) -> dict:
    """Like theorem_report but raises CounterexampleFound on failure."""
    report = theorem_report(p, which)
    if report["verdict"] != "pass":
        detail = report["oracle"]["firstDifference"]
        if detail is None:
            fails = report["certificate"]["failures"]
            detail = fails[0] if fails else None
        raise CounterexampleFound(
            f"identity {which} fails for alpha={p.parts} k={p.k} n={p.n}",
            case={"alpha": list(p.parts), "k": p.k, "n": p.n, "theorem": which},
            detail=detail,
        )
    return report
