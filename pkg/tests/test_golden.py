import dataclasses

from k3m20.golden import (
    GOLDEN_ROWS,
    NON_REPRESENTABLE_GOLDEN,
    GoldenDiff,
    documented_corrections,
    golden_check,
)
from k3m20.lattice import norm


def test_rows_cover_expected_degrees():
    assert sorted({r.n for r in GOLDEN_ROWS}) == [1, 2, 3, 4, 5, 7, 8, 9, 10, 15, 18, 30, 45, 90]
    assert len(GOLDEN_ROWS) == 22
    assert NON_REPRESENTABLE_GOLDEN == (6,)


def test_rows_are_self_consistent_after_corrections():
    for row in GOLDEN_ROWS:
        assert row.l_squared == 4 * row.n
        assert row.want_q == 2 * row.n * row.n - 3 * row.n + 1
        a, b, c = row.want_form
        d = 4 * a * c - b * b
        assert d * row.want_index**2 == 160 * row.n
        assert row.embeddings
        for v in row.embeddings:
            assert norm(v) == row.l_squared


def test_corrected_rows_carry_notes():
    for row in GOLDEN_ROWS:
        overridden = any(
            x is not None for x in (row.q_expected, row.form_expected, row.index_expected)
        )
        assert overridden == bool(row.note)


def test_documented_corrections():
    assert set(documented_corrections()) == {
        (1, (1, 0, 10), "q"),
        (7, (2, 0, 35), "q"),
        (7, (2, 0, 35), "index"),
        (15, (2, 0, 3), "index"),
        (15, (5, 0, 25), "form"),
        (15, (5, 0, 25), "index"),
    }


def test_golden_check_passes():
    result = golden_check()
    assert result.ok
    assert result.diffs == ()
    assert len(result.lines) == len(GOLDEN_ROWS) + len(NON_REPRESENTABLE_GOLDEN)
    assert all(": ok" in line for line in result.lines)


def test_golden_check_flags_injected_index_fault():
    rows = list(GOLDEN_ROWS)
    i = next(k for k, r in enumerate(rows) if r.n == 3)
    rows[i] = dataclasses.replace(rows[i], index=3)
    result = golden_check(tuple(rows))
    assert not result.ok
    index_diffs = [d for d in result.diffs if d.field == "index"]
    assert len(index_diffs) == 1
    assert index_diffs[0].n == 3 and index_diffs[0].expected == 3
    assert any("FAIL" in line for line in result.lines)


def test_golden_check_flags_injected_form_fault():
    rows = list(GOLDEN_ROWS)
    i = next(k for k, r in enumerate(rows) if r.n == 2)
    rows[i] = dataclasses.replace(rows[i], form=(1, 0, 5))
    result = golden_check(tuple(rows))
    assert not result.ok
    fields = {d.field for d in result.diffs}
    assert "tx" in fields
    assert "class-set" in fields


def test_golden_check_flags_injected_count_fault():
    rows = list(GOLDEN_ROWS)
    i = next(k for k, r in enumerate(rows) if r.n == 5)
    rows[i] = dataclasses.replace(rows[i], q=37)
    result = golden_check(tuple(rows))
    assert [d.field for d in result.diffs] == ["q"]


def test_golden_check_on_row_subset():
    subset = tuple(r for r in GOLDEN_ROWS if r.n in (3, 45))
    result = golden_check(subset)
    assert result.ok


def test_diff_rendering():
    d = GoldenDiff(n=3, form=(2, 0, 15), field="index", expected=3, got=[2])
    assert str(d) == "n=3 form=(2, 0, 15): index: expected 3, got [2]"
