"""Tests for characters and decompositions of so(2m+1)."""

import itertools
import math

import pytest
import sympy as sp

from valspin.laurent import LaurentPolynomial
from valspin.lie_type_b import (
    BaseRepresentation,
    Decomposition,
    DirectSum,
    ExteriorPower,
    ExteriorPowerTower,
    HighestWeight,
    IrreducibleRepresentation,
    NotACharacterError,
    base_character,
    decompose,
    exterior_power_char,
    fundamental_weight,
    is_dominant_exponent,
    named_representation,
    weight_multiplicity,
    weyl_character,
    weyl_denominator,
    weyl_dim,
    weyl_numerator,
)

W = HighestWeight.parse

SPIN9_EXTERIOR = {
    0: ["0,0,0,0"],
    1: ["1/2,1/2,1/2,1/2"],
    2: ["1,1,1,0", "1,1,0,0"],
    3: ["3/2,3/2,1/2,1/2", "3/2,1/2,1/2,1/2"],
    4: ["2,2,0,0", "2,1,1,1", "2,1,0,0", "2,0,0,0", "1,1,1,1"],
    5: ["5/2,3/2,1/2,1/2", "5/2,1/2,1/2,1/2", "3/2,3/2,3/2,3/2", "3/2,3/2,1/2,1/2", "3/2,1/2,1/2,1/2"],
    6: ["3,1,1,0", "3,1,0,0", "2,2,1,1", "2,1,1,1", "2,1,1,0", "2,1,0,0", "1,1,1,0", "1,1,0,0"],
    7: [
        "7/2,1/2,1/2,1/2", "5/2,3/2,3/2,1/2", "5/2,3/2,1/2,1/2", "5/2,1/2,1/2,1/2",
        "3/2,3/2,3/2,1/2", "3/2,3/2,1/2,1/2", "3/2,1/2,1/2,1/2", "1/2,1/2,1/2,1/2",
    ],
    8: [
        "4,0,0,0", "3,1,1,1", "3,1,1,0", "3,0,0,0", "2,2,2,0", "2,2,1,0", "2,2,0,0",
        "2,1,1,1", "2,1,1,0", "2,0,0,0", "1,1,1,1", "1,1,1,0", "1,0,0,0", "0,0,0,0",
    ],
}


def is_weyl_invariant(character):
    """Check invariance under permutations and sign changes of the variables."""
    rank = character.rank
    for perm in itertools.permutations(range(rank)):
        if character.permute_variables(perm) != character:
            return False
    return all(character.invert_variables([j]) == character for j in range(rank))


class TestHighestWeight:
    """Tests for the HighestWeight value type."""

    def test_parse_half_integers(self):
        """Test parsing of exact half-integer entries."""
        weight = W("3/2,1/2,1/2")
        assert weight.doubled == (3, 1, 1)
        assert weight.rank == 3
        assert weight.entries() == ["3/2", "1/2", "1/2"]
        assert str(weight) == "[3/2,1/2,1/2]"
        assert not weight.is_integral

    def test_parse_with_brackets_and_spaces(self):
        """Test that brackets and spaces are accepted."""
        assert W("[2, 1, 0]").doubled == (4, 2, 0)
        assert W("[2, 1, 0]").is_integral

    def test_parse_rank_check(self):
        """Test that the expected rank is enforced."""
        with pytest.raises(ValueError, match="expected 4"):
            HighestWeight.parse("1,1,0", rank=4)

    @pytest.mark.parametrize("text", ["a,b", "3/4,1/4", "1.5,0", "-1,0", "", "1,,0"])
    def test_parse_malformed_raises(self, text):
        """Test that malformed weight strings are rejected."""
        with pytest.raises(ValueError):
            HighestWeight.parse(text)

    def test_mixed_parity_raises(self):
        """Test that integer and half-integer entries cannot mix."""
        with pytest.raises(ValueError, match="not dominant"):
            W("1,1/2")

    def test_increasing_entries_raise(self):
        """Test that entries must be weakly decreasing."""
        with pytest.raises(ValueError, match="not dominant"):
            W("1,2")

    def test_from_fractions(self):
        """Test construction from exact values."""
        weight = HighestWeight.from_fractions([sp.Rational(5, 2), "3/2", sp.Rational(1, 2)])
        assert weight == W("5/2,3/2,1/2")
        with pytest.raises(ValueError, match="multiple of 1/2"):
            HighestWeight.from_fractions([sp.Rational(1, 3)])

    def test_immutability(self):
        """Test that HighestWeight is a frozen dataclass."""
        weight = W("1,0")
        with pytest.raises(AttributeError):
            weight.doubled = (0, 0)

    def test_rho_shifted(self):
        """Test doubled λ + ρ for type B."""
        assert HighestWeight.zero(4).rho_shifted() == (7, 5, 3, 1)
        assert W("1,0,0,0").rho_shifted() == (9, 5, 3, 1)

    def test_is_dominant_exponent(self):
        """Test the dominance predicate on raw exponents."""
        assert is_dominant_exponent((3, 1, 1))
        assert is_dominant_exponent((0, 0))
        assert not is_dominant_exponent((1, 3))
        assert not is_dominant_exponent((2, -2))
        assert not is_dominant_exponent((2, 1))


class TestWeylCharacter:
    """Tests for the Weyl character and dimension formulas."""

    @pytest.mark.parametrize(
        "rank,text,expected",
        [
            (4, "1/2,1/2,1/2,1/2", 16),
            (4, "1,0,0,0", 9),
            (4, "1,1,0,0", 36),
            (4, "1,1,1,0", 84),
            (4, "1,1,1,1", 126),
            (3, "1/2,1/2,1/2", 8),
            (3, "1,0,0", 7),
            (3, "1,1,0", 21),
            (3, "3/2,1/2,1/2", 48),
            (3, "2,0,0", 27),
            (1, "1", 3),
        ],
    )
    def test_dimensions(self, rank, text, expected):
        """Test weyl_dim against known dimensions and against the character."""
        weight = W(text)
        assert weyl_dim(rank, weight) == expected
        assert weyl_character(rank, weight).evaluate_at_one() == expected

    def test_standard_and_spin_characters(self):
        """Test that the fundamental characters match the base characters."""
        assert weyl_character(4, fundamental_weight(4, 1)) == base_character(4, "standard")
        assert weyl_character(4, fundamental_weight(4, 4)) == base_character(4, BaseRepresentation.SPIN)

    def test_trivial_character(self):
        """Test Char(Γ_0) = 1."""
        assert weyl_character(3, HighestWeight.zero(3)) == LaurentPolynomial.one(3)

    def test_numerator_is_denominator_times_character(self):
        """Test the Weyl quotient identity."""
        weight = W("3/2,1/2,1/2")
        assert weyl_numerator(3, weight) == weyl_denominator(3) * weyl_character(3, weight)

    def test_characters_are_weyl_invariant(self):
        """Test Weyl group invariance of irreducible characters."""
        for text in ("1,1,0", "3/2,1/2,1/2", "2,1,0"):
            assert is_weyl_invariant(weyl_character(3, W(text)))

    def test_weight_multiplicities(self):
        """Test weight multiplicities of the adjoint representation."""
        adjoint = W("1,1,0,0")
        assert weight_multiplicity(4, adjoint, (0, 0, 0, 0)) == 4
        assert weight_multiplicity(4, adjoint, (2, 2, 0, 0)) == 1
        assert weight_multiplicity(4, adjoint, (2, 0, 0, 0)) == 1
        assert weight_multiplicity(4, adjoint, (4, 0, 0, 0)) == 0

    def test_rank_mismatch_raises(self):
        """Test that a weight of the wrong rank is rejected."""
        with pytest.raises(ValueError, match="expected 4"):
            weyl_character(4, W("1,0,0"))
        with pytest.raises(ValueError, match="expected 3"):
            weyl_dim(3, W("1,0"))

    def test_fundamental_weight_range(self):
        """Test the fundamental weights and their index check."""
        assert fundamental_weight(4, 2) == W("1,1,0,0")
        with pytest.raises(ValueError, match="1..4"):
            fundamental_weight(4, 5)


class TestExteriorPowers:
    """Tests for exterior powers via the Adams recurrence."""

    @pytest.mark.parametrize("k", range(0, 9))
    def test_spin9_exterior_dimensions(self, k):
        """Test dim Λ^k of the so(9) spin representation is C(16, k)."""
        spin = base_character(4, "spin")
        assert exterior_power_char(spin, k).evaluate_at_one() == math.comb(16, k)

    def test_exterior_of_standard_so3(self):
        """Test Λ^2 of the so(3) standard representation is itself."""
        standard = base_character(1, "standard")
        assert exterior_power_char(standard, 2) == standard
        assert exterior_power_char(standard, 3) == LaurentPolynomial.one(1)
        assert exterior_power_char(standard, 4).is_zero()

    def test_negative_degree_raises(self):
        """Test that negative degrees are rejected."""
        with pytest.raises(ValueError, match="non-negative"):
            exterior_power_char(base_character(3, "spin"), -1)

    def test_tower_caches_lower_degrees(self):
        """Test that the tower reuses its computed powers."""
        tower = ExteriorPowerTower(base_character(3, "standard"))
        top = tower.power(3)
        assert tower.power(3) is top
        assert tower.power(2).evaluate_at_one() == 21
        assert tower.base == base_character(3, "standard")

    @pytest.mark.parametrize("k", range(17))
    def test_exterior_characters_are_weyl_invariant(self, k):
        """Test Weyl invariance of every so(9) spin exterior character."""
        spin = base_character(4, "spin")
        assert is_weyl_invariant(exterior_power_char(spin, k))


class TestDecompose:
    """Tests for the peel-off decomposition."""

    def test_clebsch_gordan_so3(self):
        """Test Γ_1 ⊗ Γ_1 = Γ_2 ⊕ Γ_1 ⊕ Γ_0 for so(3)."""
        c = weyl_character(1, W("1"))
        result = decompose(c * c, 1)
        assert result == Decomposition(1, {W("2"): 1, W("1"): 1, W("0"): 1})

    @pytest.mark.parametrize("k", sorted(SPIN9_EXTERIOR))
    def test_spin9_exterior_lists(self, k):
        """Test Λ^k of the so(9) spin representation summand by summand."""
        character = exterior_power_char(base_character(4, "spin"), k)
        result = decompose(character, 4)
        expected = [W(text) for text in SPIN9_EXTERIOR[k]]
        assert result.weights() == expected
        assert all(mult == 1 for _, mult in result.items())
        assert result.character() == character
        assert result.dimension() == math.comb(16, k)

    def test_lambda4_dimensions(self):
        """Test 495 + 924 + 231 + 44 + 126 = 1820."""
        result = decompose(exterior_power_char(base_character(4, "spin"), 4), 4)
        assert [weyl_dim(4, w) for w in result.weights()] == [495, 924, 231, 44, 126]

    def test_zero_character(self):
        """Test the empty decomposition."""
        result = decompose(LaurentPolynomial.zero(2), 2)
        assert len(result) == 0
        assert str(result) == "0"

    def test_non_dominant_leading_exponent_raises(self):
        """Test that a non-invariant polynomial is rejected."""
        c = LaurentPolynomial(2, {(2, 4): 1})
        with pytest.raises(NotACharacterError, match="not a dominant weight"):
            decompose(c, 2)

    def test_negative_leading_coefficient_raises(self):
        """Test that a virtual character is rejected."""
        c = -weyl_character(2, W("1,0"))
        with pytest.raises(NotACharacterError, match="not positive"):
            decompose(c, 2)

    def test_rank_mismatch_raises(self):
        """Test that the character rank must match."""
        with pytest.raises(ValueError, match="expected 3"):
            decompose(LaurentPolynomial.one(2), 3)


class TestDecomposition:
    """Tests for the Decomposition container."""

    def test_order_and_merge(self):
        """Test lexicographic order and merging of repeated weights."""
        d = Decomposition(2, [(W("1,0"), 1), (W("2,0"), 2), (W("1,0"), 3)])
        assert d.items() == [(W("2,0"), 2), (W("1,0"), 4)]
        assert d.multiplicity(W("1,0")) == 4
        assert d.multiplicity(W("1,1")) == 0
        assert W("2,0") in d

    def test_negative_multiplicity_raises(self):
        """Test that negative multiplicities are rejected."""
        with pytest.raises(ValueError, match="non-negative"):
            Decomposition(2, {W("1,0"): -1})

    def test_to_list_and_str(self):
        """Test serialization with exact strings."""
        d = Decomposition(3, {W("1/2,1/2,1/2"): 1, W("1,1,0"): 2})
        assert d.to_list() == [
            {"weight": ["1", "1", "0"], "mult": 2},
            {"weight": ["1/2", "1/2", "1/2"], "mult": 1},
        ]
        assert str(d) == "2Γ[1,1,0] ⊕ Γ[1/2,1/2,1/2]"

    def test_dimension(self):
        """Test Σ n_λ dim Γ_λ."""
        d = Decomposition(3, {W("1/2,1/2,1/2"): 1, W("1,1,0"): 2})
        assert d.dimension() == 8 + 2 * 21


class TestRepresentations:
    """Tests for the representation objects."""

    def test_irreducible(self):
        """Test an irreducible representation."""
        rep = IrreducibleRepresentation(W("1,1,0,0"))
        assert rep.dimension() == 36
        assert rep.decompose() == Decomposition(4, {W("1,1,0,0"): 1})
        assert rep.label == "Γ[1,1,0,0]"

    @pytest.mark.parametrize("rank", [1, 2, 3, 4])
    def test_named_base_representations_match_characters(self, rank):
        """Test "standard" and "spin" agree with the base characters at every rank."""
        standard = named_representation(rank, "standard")
        assert standard.character() == base_character(rank, "standard")
        assert standard.dimension() == 2 * rank + 1
        assert named_representation(rank, "spin").character() == base_character(rank, "spin")

    def test_tangent_representation_of_spin7(self):
        """Test O' ⊕ O as standard ⊕ spin of so(7)."""
        rep = named_representation(3, "sum")
        assert isinstance(rep, DirectSum)
        assert rep.dimension() == 15
        assert rep.decompose().weights() == [W("1,0,0"), W("1/2,1/2,1/2")]

    def test_exterior_power_of_direct_sum(self):
        """Test Λ^2(O' ⊕ O) over so(7)."""
        rep = ExteriorPower(named_representation(3, "sum"), 2)
        result = rep.decompose()
        assert result.multiplicity(W("1,1,0")) == 2
        assert result.multiplicity(W("1/2,1/2,1/2")) == 1
        assert result.multiplicity(W("1,0,0")) == 1
        assert result.multiplicity(W("3/2,1/2,1/2")) == 1
        assert rep.dimension() == 105

    def test_direct_sum_rank_mismatch_raises(self):
        """Test that summands must share a rank."""
        with pytest.raises(ValueError, match="different ranks"):
            DirectSum([named_representation(3, "spin"), named_representation(4, "spin")])

    def test_unknown_name_raises(self):
        """Test that unknown representation names are rejected."""
        with pytest.raises(ValueError, match="Unknown representation"):
            named_representation(4, "adjoint")

    def test_negative_exterior_degree_raises(self):
        """Test ExteriorPower validates its degree."""
        with pytest.raises(ValueError, match="non-negative"):
            ExteriorPower(named_representation(3, "spin"), -2)
