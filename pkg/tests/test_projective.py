"""Tests for the n = k+1 family: Frobenius form, diagonals, shifted strips,
and the decomposition of leg multisets."""

from collections import Counter

import pytest

from hookpair.diagrams import Partition, arm_slice, build_region
from hookpair.errors import (
    CounterexampleFound,
    IndexOutOfRange,
    KindWithoutDiagonal,
    NoShiftRow,
    NotWeaklyDecreasing,
    PartExceedsN,
    WrongN,
)
from hookpair.projective import (
    ClassBPartition,
    StrictPartition,
    alpha_from_strict,
    check_prop_techprop,
    diagonal_spec,
    is_class_B,
    m_decomposition,
    projective_report,
    shift_Ti,
    split_pq,
    verify_projective,
)

from util import strict_partitions

SMALL = alpha_from_strict(StrictPartition((4, 2), k=5))
GOLD = alpha_from_strict(StrictPartition((11, 9, 8, 5, 3, 2), k=12))


def family_members(max_k):
    for k in range(1, max_k + 1):
        for parts in strict_partitions(k):
            yield alpha_from_strict(StrictPartition(parts, k))


class TestStrictPartition:
    def test_valid(self):
        l = StrictPartition((4, 2), k=5)
        assert l.m == 2 and str(l) == "(4,2)"

    def test_empty_allowed(self):
        assert StrictPartition((), k=3).m == 0

    def test_rejects_repeats(self):
        with pytest.raises(NotWeaklyDecreasing):
            StrictPartition((3, 3), k=5)

    def test_rejects_overlarge_part(self):
        with pytest.raises(PartExceedsN):
            StrictPartition((6,), k=5)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            StrictPartition((2, 0), k=5)


class TestFrobeniusForm:
    def test_small_alpha(self):
        assert SMALL.alpha.parts == (5, 4, 2, 1, 0)
        assert SMALL.m == 2 and SMALL.n == 6

    def test_gold_alpha(self):
        assert GOLD.alpha.parts == (12, 11, 11, 9, 8, 8, 6, 4, 3, 3, 1, 0)
        assert GOLD.m == 6

    def test_empty_lambda(self):
        b = alpha_from_strict(StrictPartition((), k=3))
        assert b.alpha.parts == (0, 0, 0)

    def test_recognizer_accepts(self):
        b = is_class_B(Partition((5, 4, 2, 1, 0), k=5, n=6))
        assert b is not None
        assert b.lam.parts == (4, 2) and b.m == 2

    def test_recognizer_rejects(self):
        assert is_class_B(Partition((2, 1), k=2, n=3)) is None

    def test_recognizer_accepts_rectangle(self):
        k = 4
        b = is_class_B(Partition((k + 1,) * k, k=k, n=k + 1))
        assert b is not None
        assert b.lam.parts == tuple(k + 1 - j for j in range(1, k + 1))

    def test_recognizer_needs_matching_bound(self):
        with pytest.raises(WrongN):
            is_class_B(Partition((2, 1), k=2, n=2))

    def test_round_trip_sweep(self):
        for b in family_members(6):
            back = is_class_B(b.alpha)
            assert back is not None
            assert back.lam.parts == b.lam.parts and back.m == b.m


class TestDiagonals:
    def test_diagram_diagonal_cells(self):
        spec = diagonal_spec(SMALL, "D")
        assert spec.total == 6
        assert spec.cells == ((4, 2), (5, 1))

    def test_strip_diagonal_line(self):
        spec = diagonal_spec(SMALL, "T")
        assert spec.total == 11
        assert spec.cells == ((3, 8), (4, 7), (5, 6))

    def test_split_counts_on_diagram(self):
        dgm = build_region(SMALL.alpha, "D")
        p, q = split_pq(dgm, "D", SMALL)
        assert len(p) == len(q) == 6
        assert len(p) == sum(SMALL.lam.parts)

    def test_split_counts_equal_sweep(self):
        # on or below the diagonal: one cell per diagonal hook plus its leg;
        # above: the arms; the two sides balance exactly in this family
        for b in family_members(5):
            dgm = build_region(b.alpha, "D")
            p, q = split_pq(dgm, "D", b)
            assert len(p) == len(q) == sum(b.lam.parts), b.alpha

    def test_rectangle_regions_share_diagonal(self):
        rect = build_region(SMALL.alpha, "R")
        p, q = split_pq(rect, "R", SMALL)
        assert len(p) + len(q) == len(rect)
        assert all(r + c <= 6 for r, c in p)
        assert all(r + c > 6 for r, c in q)

    def test_square_and_strip_agree_below_diagonal(self):
        for b in family_members(5):
            sq = build_region(b.alpha, "SQ")
            strip = build_region(b.alpha, "T")
            p_sq, _ = split_pq(sq, "SQ", b)
            p_t, _ = split_pq(strip, "T", b)
            assert p_sq == p_t, b.alpha

    def test_kinds_without_diagonal(self):
        v = build_region(SMALL.alpha, "V")
        with pytest.raises(KindWithoutDiagonal):
            split_pq(v, "V", SMALL)
        with pytest.raises(KindWithoutDiagonal):
            diagonal_spec(SMALL, "R1")


class TestShiftedStrip:
    def test_gold_shift_row(self):
        _, u = shift_Ti(GOLD, 5)
        assert u == 9

    def test_shift_row_oracle_sweep(self):
        # independent reading: u is the smallest row whose arm-(i-1) cell
        # sits strictly above the strip diagonal
        for b in family_members(5):
            strip = build_region(b.alpha, "T")
            total = b.k + b.alpha.part(1) + 1
            for i in range(1, b.k + 2):
                rows = sorted(
                    r for r, c in arm_slice(strip, i) if r + c > total
                )
                expected = rows[0] if rows else None
                _, u = shift_Ti(b, i)
                assert u == expected, (b.alpha, i)

    def test_rectangle_never_shifts(self):
        k = 4
        b = is_class_B(Partition((k + 1,) * k, k=k, n=k + 1))
        for i in range(1, k + 2):
            ti, u = shift_Ti(b, i)
            assert u is None
            assert ti == build_region(b.alpha, "T")

    def test_shifted_rows_form_block(self):
        ti, u = shift_Ti(SMALL, 1)
        assert u == 3
        a1 = SMALL.alpha.part(1)
        for j in range(u, SMALL.k + 1):
            assert ti.row_cols(j) == list(range(a1 + 1, a1 + SMALL.k + 2))
        for j in range(1, u):
            assert ti.row_cols(j) == build_region(SMALL.alpha, "T").row_cols(j)

    def test_shift_matches_truncated_partition(self):
        # replacing the parts from the shift row on with zeros produces the
        # same strip, and rotating gives that partition's rotated strip
        for b in family_members(5):
            for i in range(1, b.k + 2):
                ti, u = shift_Ti(b, i)
                assert ti.is_skew_valid(), (b.alpha, i)
                if u is None:
                    continue
                beta = tuple(
                    b.alpha.part(j) if j < u else 0
                    for j in range(1, b.k + 1)
                )
                trunc = Partition(beta, k=b.k, n=b.n)
                assert ti == build_region(trunc, "T"), (b.alpha, i)
                assert ti.rotate180() == build_region(trunc, "Tstar")

    def test_cut_bounds(self):
        with pytest.raises(IndexOutOfRange):
            shift_Ti(SMALL, 0)
        with pytest.raises(IndexOutOfRange):
            shift_Ti(SMALL, SMALL.n + 1)


class TestTechprop:
    def test_gold_case(self):
        report = check_prop_techprop(GOLD, 5)
        assert report["u"] == 9
        assert report["parts"] == (True, True, True, True)
        assert report["all"]

    def test_minimal_margin_case(self):
        # u lands one row past the diagonal length
        b = alpha_from_strict(StrictPartition((1,), k=2))
        report = check_prop_techprop(b, 1)
        assert report["u"] == b.m + 1
        assert report["all"]

    def test_holds_everywhere_in_sweep(self):
        for b in family_members(6):
            for i in range(1, b.k + 2):
                _, u = shift_Ti(b, i)
                if u is None:
                    continue
                assert check_prop_techprop(b, i)["all"], (b.alpha, i)

    def test_no_shift_row(self):
        k = 3
        b = is_class_B(Partition((k + 1,) * k, k=k, n=k + 1))
        with pytest.raises(NoShiftRow):
            check_prop_techprop(b, 1)


class TestMDecomposition:
    def test_gold_indices(self):
        dec = m_decomposition(GOLD, 5)
        assert dec.u == 9 and dec.s == 8 and dec.s_eff == 8
        assert dec.passed
        assert dec.m12 == Counter({1: 1, 2: 1, 3: 1, 4: 1})
        assert dec.m21 == Counter({0: 1, 1: 1, 2: 1, 3: 1, 4: 1})
        assert dec.m22 == Counter({1: 1, 2: 1, 3: 1})
        assert dec.m23 == dec.m4

    def test_small_case_with_late_split_index(self):
        # here s = 5 exceeds u = 3, and the effective boundary is u
        dec = m_decomposition(SMALL, 1)
        assert (dec.u, dec.s, dec.s_eff) == (3, 5, 3)
        assert dec.m1 == Counter({0: 3, 1: 1, 2: 1})
        assert dec.m2 == dec.m1
        assert dec.m3 == Counter({0: 2})
        assert dec.m4 == Counter({0: 2})
        assert dec.m11 == Counter({0: 2})
        assert dec.m12 == Counter({0: 1, 1: 1, 2: 1})
        assert dec.m21 == Counter({0: 1, 1: 1, 2: 1})
        assert dec.m22 == Counter()
        assert dec.m23 == Counter({0: 2})
        assert dec.passed

    def test_arm_zero_cut_has_empty_low_range(self):
        dec = m_decomposition(SMALL, 1)
        assert dec.m3 == dec.m4

    def test_all_cuts_of_small_case(self):
        for i in range(1, SMALL.k + 2):
            _, u = shift_Ti(SMALL, i)
            if u is None:
                continue
            assert m_decomposition(SMALL, i).passed, i

    def test_decomposition_sweep(self):
        for b in family_members(5):
            for i in range(1, b.k + 2):
                _, u = shift_Ti(b, i)
                if u is None:
                    continue
                dec = m_decomposition(b, i)
                assert dec.m1 == dec.m11 + dec.m12
                assert dec.m2 == dec.m21 + dec.m22 + dec.m23

    def test_missing_shift_row_raises(self):
        k = 3
        b = is_class_B(Partition((k + 1,) * k, k=k, n=k + 1))
        with pytest.raises(NoShiftRow):
            m_decomposition(b, 1)

    def test_broken_shift_detected(self, monkeypatch):
        import hookpair.projective as pj

        def unshifted(b, i):
            return build_region(b.alpha, "T"), pj._shift_row(b, i)

        monkeypatch.setattr(pj, "shift_Ti", unshifted)
        with pytest.raises(CounterexampleFound) as exc:
            m_decomposition(SMALL, 1)
        assert exc.value.detail["failed"]


class TestProjectiveIdentity:
    def test_small_case_passes(self):
        report = verify_projective(SMALL)
        assert report["theorem"] == "pass"
        assert report["alpha"] == [5, 4, 2, 1, 0]
        assert report["lambda"] == [4, 2]
        assert report["m"] == 2

    def test_gold_case_passes(self):
        assert verify_projective(GOLD)["theorem"] == "pass"

    def test_empty_lambda(self):
        b = alpha_from_strict(StrictPartition((), k=3))
        report = verify_projective(b)
        assert report["theorem"] == "pass"
        dgm = build_region(b.alpha, "D")
        assert len(dgm) == 0
        skipped = [row for row in report["perI"] if row["u"] is None]
        assert [row["i"] for row in skipped] == [4]

    def test_report_schema(self):
        report = projective_report(SMALL)
        assert sorted(report) == ["alpha", "lambda", "m", "perI", "theorem"]
        assert [row["i"] for row in report["perI"]] == list(range(1, 7))
        for row in report["perI"]:
            assert sorted(row) == ["i", "mChecks", "s", "techprop", "u"]
            if row["u"] is None:
                assert row["mChecks"] == "skipped"
                assert row["s"] is None and row["techprop"] is None
            else:
                assert row["mChecks"] == "pass"
                assert row["techprop"] == [True, True, True, True]

    def test_identity_sweep(self):
        for b in family_members(5):
            assert projective_report(b)["theorem"] == "pass", b.alpha
