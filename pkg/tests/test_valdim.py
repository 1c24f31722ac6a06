"""Tests for the b-tables and the dimensions of Spin(9)-invariant valuations."""

import itertools
import math

import pytest

from valspin.lie_type_b import HighestWeight, base_character, exterior_power_char, weyl_dim
from valspin.valdim import (
    EXPECTED_TOTAL,
    N,
    SO7_TABLE_WEIGHTS,
    Spin9ValuationTables,
    compute_bk,
    compute_bkl,
    compute_so7_table,
    default_tables,
    dimension_formula,
    full_report,
    spin9_exterior_decomposition,
    val_dimension,
)

MAIN_ROW = [1, 1, 2, 3, 6, 10, 15, 20, 27, 20, 15, 10, 6, 3, 2, 1, 1]

# Rows follow SO7_TABLE_WEIGHTS, columns are i = 0..7
SO7_COLUMNS = [
    [1, 0, 0, 1, 2, 1, 0, 4],
    [0, 1, 1, 2, 3, 4, 5, 6],
    [0, 1, 1, 1, 2, 3, 5, 3],
    [0, 0, 2, 1, 1, 5, 6, 4],
    [0, 0, 0, 2, 4, 3, 4, 7],
    [0, 0, 1, 2, 3, 5, 6, 7],
    [0, 0, 0, 1, 2, 3, 5, 5],
    [0, 0, 0, 0, 1, 2, 2, 3],
    [0, 0, 0, 1, 2, 1, 1, 3],
    [0, 0, 0, 1, 1, 2, 3, 4],
    [0, 0, 0, 0, 1, 3, 4, 4],
    [0, 0, 0, 0, 1, 0, 0, 2],
    [0, 0, 0, 0, 0, 1, 2, 1],
    [0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 1, 1, 2, 2],
    [0, 0, 0, 0, 0, 1, 1, 2],
    [0, 0, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 1],
]

# B[l][k] for 0 <= k, l <= 7
BKL_TABLE = [
    [1, 0, 0, 1, 2, 1, 0, 4],
    [0, 2, 2, 3, 5, 7, 10, 9],
    [0, 2, 7, 7, 10, 22, 28, 24],
    [1, 3, 7, 18, 30, 39, 50, 63],
    [2, 5, 10, 30, 56, 68, 88, 116],
    [1, 7, 22, 39, 68, 116, 150, 162],
    [0, 10, 28, 50, 88, 150, 204, 210],
    [4, 9, 24, 63, 116, 162, 210, 266],
]


def is_weyl_invariant(character):
    """Check invariance under permutations and sign changes of the variables."""
    rank = character.rank
    for perm in itertools.permutations(range(rank)):
        if character.permute_variables(perm) != character:
            return False
    return all(character.invert_variables([j]) == character for j in range(rank))


def tangent_character():
    """Character of O' ⊕ O over so(7)."""
    return base_character(3, "standard") + base_character(3, "spin")


class TestBk:
    """Tests for b_k, the invariants in Λ^k O²."""

    @pytest.mark.parametrize("k", range(N + 1))
    def test_bk_values(self, k):
        """Test b_k = 1 for k = 0, 8, 16 and 0 otherwise."""
        assert compute_bk(k) == (1 if k in (0, 8, 16) else 0)

    def test_out_of_range_is_zero(self):
        """Test the zero convention outside 0..16."""
        assert compute_bk(-1) == 0
        assert compute_bk(17) == 0

    @pytest.mark.parametrize("k", range(9, N + 1))
    def test_exterior_mirror(self, k):
        """Test Λ^k and Λ^(16-k) decompose identically."""
        assert spin9_exterior_decomposition(k) == spin9_exterior_decomposition(N - k)

    def test_exterior_degree_out_of_range_raises(self):
        """Test that the so(9) tower stops at 16."""
        with pytest.raises(ValueError, match="0..16"):
            spin9_exterior_decomposition(17)


class TestSo7Table:
    """Tests for n^(i), the so(7) decomposition of Λ^i(O' ⊕ O)."""

    def test_matches_published_columns(self):
        """Test columns i = 0..7 entry by entry."""
        table = compute_so7_table()
        for row, weight in zip(SO7_COLUMNS, SO7_TABLE_WEIGHTS):
            assert [table[i].multiplicity(weight) for i in range(8)] == row, str(weight)

    def test_no_other_weights_in_low_degrees(self):
        """Test that the 20 listed weights exhaust columns 0..7."""
        table = compute_so7_table()
        for i in range(8):
            assert set(table[i].weights()) <= set(SO7_TABLE_WEIGHTS)

    def test_column_seven(self):
        """Test the i = 7 column as a whole."""
        table = compute_so7_table()
        assert [table[7].multiplicity(w) for w in SO7_TABLE_WEIGHTS] == [
            4, 6, 3, 4, 7, 7, 5, 3, 3, 4, 4, 2, 1, 1, 2, 2, 1, 0, 0, 1
        ]

    @pytest.mark.parametrize("i", range(16))
    def test_mirror(self, i):
        """Test n^(i) = n^(15-i)."""
        table = compute_so7_table()
        assert table[i] == table[15 - i]

    @pytest.mark.parametrize("i", range(16))
    def test_dimension_audit(self, i):
        """Test Σ n^(i)_λ dim Γ_λ = C(15, i)."""
        table = compute_so7_table()
        total = sum(mult * weyl_dim(3, w) for w, mult in table[i].items())
        assert total == math.comb(15, i)

    def test_weight_order(self):
        """Test the row order of the published table."""
        assert len(SO7_TABLE_WEIGHTS) == 20
        assert SO7_TABLE_WEIGHTS[0] == HighestWeight.zero(3)
        assert SO7_TABLE_WEIGHTS[-1] == HighestWeight.parse("3,1,1")


class TestGeneratedCharacters:
    """Weyl invariance and recombination of every generated exterior character."""

    @pytest.mark.parametrize("i", range(16))
    def test_so7_character_is_weyl_invariant(self, i):
        """Test Λ^i(O' ⊕ O) is invariant under the so(7) Weyl group."""
        assert is_weyl_invariant(exterior_power_char(tangent_character(), i))

    @pytest.mark.parametrize("i", range(16))
    def test_so7_decomposition_recombines(self, i):
        """Test Σ n^(i)_λ Char(Γ_λ) gives back Char(Λ^i(O' ⊕ O))."""
        table = compute_so7_table()
        assert table[i].character() == exterior_power_char(tangent_character(), i)

    @pytest.mark.parametrize("k", range(N + 1))
    def test_spin9_decomposition_recombines(self, k):
        """Test the Λ^k decomposition gives back the so(9) exterior character."""
        spin = base_character(4, "spin")
        assert spin9_exterior_decomposition(k).character() == exterior_power_char(spin, k)


class TestBkl:
    """Tests for b_{k,l} = Σ n^(k)_λ n^(l)_λ."""

    def test_matches_published_table(self):
        """Test the 8×8 table exactly."""
        for l in range(8):
            assert [compute_bkl(k, l) for k in range(8)] == BKL_TABLE[l]

    @pytest.mark.parametrize(
        "k,l,expected",
        [(0, 0, 1), (2, 2, 7), (4, 6, 88), (5, 5, 116), (7, 7, 266)],
    )
    def test_anchor_values(self, k, l, expected):
        """Test individual entries."""
        assert compute_bkl(k, l) == expected

    def test_symmetries_on_full_table(self):
        """Test all four symmetries on 0..15 × 0..15."""
        table = default_tables().bkl_table()
        for k in range(16):
            for l in range(16):
                assert table[k][l] == table[l][k]
                assert table[k][l] == table[15 - k][15 - l]
                assert table[k][l] == table[k][15 - l]
                assert table[k][l] == table[15 - k][l]

    def test_out_of_range_is_zero(self):
        """Test the zero convention for negative and too large indices."""
        assert compute_bkl(-1, 3) == 0
        assert compute_bkl(16, 0) == 0
        assert compute_bkl(3, 16) == 0


class TestDimensionFormula:
    """Tests for the alternating sum giving dim Val_k."""

    def test_main_row(self):
        """Test dim Val_k for all k."""
        assert [val_dimension(k) for k in range(N + 1)] == MAIN_ROW
        assert sum(MAIN_ROW) == EXPECTED_TOTAL

    def test_palindromic(self):
        """Test dim Val_k = dim Val_(16-k)."""
        dims = default_tables().dimensions()
        assert dims == dims[::-1]

    def test_invalid_degree_raises(self):
        """Test that degrees outside 0..16 are rejected."""
        with pytest.raises(ValueError, match="0..16"):
            val_dimension(17)

    def test_hand_made_tables(self):
        """Test the formula on small tables.

        n = 2, b = [[1, 0], [0, 1]], b_k = [1, 0, 1]:
        k = 0: -b00 + b01 + b0 = -1 + 0 + 1 = 0
        k = 1: b10 - 0 - b1 = 0
        k = 2: b2 = 1
        """
        assert dimension_formula([[1, 0], [0, 1]], [1, 0, 1], 2) == [0, 0, 1]

    def test_missing_entries_count_as_zero(self):
        """Test that short tables are padded with zeros."""
        assert dimension_formula([], [], 3) == [0, 0, 0, 0]

    def test_negative_n_raises(self):
        """Test that n must be non-negative."""
        with pytest.raises(ValueError, match="non-negative"):
            dimension_formula([], [], -1)


class TestReport:
    """Tests for the aggregated report."""

    def test_report_contents(self):
        """Test dimensions, total and checks of the full report."""
        report = full_report()
        assert list(report.dimensions) == MAIN_ROW
        assert report.total == EXPECTED_TOTAL
        assert report.consistent
        assert all(report.checks.values())
        assert [list(row[:8]) for row in report.so7_table] == SO7_COLUMNS
        assert [[report.bkl[k][l] for k in range(8)] for l in range(8)] == BKL_TABLE

    def test_report_to_dict(self):
        """Test the serializable form."""
        data = full_report().to_dict()
        assert data["dimensions"] == MAIN_ROW
        assert data["total"] == 143
        assert data["so7_table"][1]["weight"] == ["1/2", "1/2", "1/2"]
        assert data["spin9_exterior"][2]["summands"] == [
            {"weight": ["1", "1", "1", "0"], "mult": 1},
            {"weight": ["1", "1", "0", "0"], "mult": 1},
        ]
        assert len(data["bkl"]) == 16

    def test_worker_pool_gives_identical_report(self):
        """Test that a thread pool does not change the results."""
        pooled = Spin9ValuationTables(workers=3)
        assert pooled.workers == 3
        assert pooled.dimensions() == MAIN_ROW
        assert pooled.bkl_table() == default_tables().bkl_table()

    def test_workers_from_environment(self, monkeypatch):
        """Test VALSPIN_WORKERS is read and validated."""
        monkeypatch.setenv("VALSPIN_WORKERS", "2")
        assert Spin9ValuationTables().workers == 2
        monkeypatch.setenv("VALSPIN_WORKERS", "zero")
        with pytest.raises(ValueError, match="VALSPIN_WORKERS"):
            Spin9ValuationTables()

    def test_invalid_workers_raises(self):
        """Test that a non-positive pool size is rejected."""
        with pytest.raises(ValueError, match="positive"):
            Spin9ValuationTables(workers=0)
