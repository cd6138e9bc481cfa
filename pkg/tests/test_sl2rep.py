"""Character ring: irreducibles, tensor products, decomposition, factorization."""

import pytest
from hypothesis import given, strategies as st

from multiproj.exactalg import LaurentPoly
from multiproj.sl2rep import (
    Character,
    FactorizationError,
    IrrepMultiset,
    clebsch_gordan_decompose,
    factor_tensor_of_irreps,
    irrep_character,
    partitions,
    tensor_character,
)


def char_of(text):
    return Character(LaurentPoly.parse(text))


class TestIrrepCharacter:
    def test_trivial(self):
        assert irrep_character(0) == char_of("1")

    def test_fundamental(self):
        assert irrep_character(1) == char_of("q + q^-1")

    def test_adjoint(self):
        assert irrep_character(2) == char_of("q^2 + 1 + q^-2")

    @pytest.mark.parametrize("n", range(0, 25))
    def test_dimension(self, n):
        assert irrep_character(n).dimension == n + 1

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            irrep_character(-1)


class TestCharacterInvariants:
    def test_rejects_negative_coefficients(self):
        with pytest.raises(ValueError):
            Character(LaurentPoly.parse("q - 1 + q^-1"))

    def test_rejects_non_palindromic(self):
        with pytest.raises(ValueError):
            Character(LaurentPoly.parse("q^2 + 1"))

    def test_top_degree(self):
        assert irrep_character(5).top_degree == 5


class TestTensorCharacter:
    def test_square_of_fundamental(self):
        c = tensor_character([irrep_character(1), irrep_character(1)])
        assert c == char_of("q^2 + 2 + q^-2")

    def test_single_factor(self):
        assert tensor_character([irrep_character(4)]) == irrep_character(4)

    def test_two_one(self):
        c = tensor_character([irrep_character(2), irrep_character(1)])
        assert c == char_of("q^3 + 2*q + 2*q^-1 + q^-3")

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            tensor_character([])


class TestClebschGordan:
    def test_fundamental_squared(self):
        d = clebsch_gordan_decompose(char_of("q^2 + 2 + q^-2"))
        assert d == IrrepMultiset((2, 0))

    def test_irreducible_input(self):
        assert clebsch_gordan_decompose(irrep_character(5)) == IrrepMultiset((5,))

    def test_two_times_one(self):
        c = tensor_character([irrep_character(1), irrep_character(2)])
        assert clebsch_gordan_decompose(c) == IrrepMultiset((3, 1))

    def test_rejects_non_module_character(self):
        # q^2 + q^-2 misses the weight-0 string member: multiplicity of the
        # label-0 irrep would be -1
        with pytest.raises(ValueError, match="not a module character"):
            clebsch_gordan_decompose(char_of("q^2 + q^-2"))

    @pytest.mark.parametrize("n", range(1, 11))
    def test_reconstruction(self, n):
        for labels in partitions(n):
            c = tensor_character([irrep_character(k) for k in labels])
            acc = LaurentPoly.zero()
            for label, mult in clebsch_gordan_decompose(c).counts():
                coeffs = irrep_character(label).poly
                for _ in range(mult):
                    acc = acc + coeffs
            assert acc == c.poly


class TestIrrepMultiset:
    def test_canonical_descending(self):
        assert IrrepMultiset((1, 3, 1)).labels == (3, 1, 1)

    def test_str_with_multiplicities(self):
        assert str(IrrepMultiset((3, 1, 1))) == "3,1^2"
        assert str(IrrepMultiset((2, 1))) == "2,1"
        assert str(IrrepMultiset((1, 1, 1))) == "1^3"

    def test_total(self):
        assert IrrepMultiset((3, 1, 1)).total() == 5


class TestFactorization:
    def test_two_one(self):
        c = char_of("q^3 + 2*q + 2*q^-1 + q^-3")
        assert factor_tensor_of_irreps(c) == IrrepMultiset((2, 1))

    def test_already_irreducible(self):
        assert factor_tensor_of_irreps(irrep_character(5)) == IrrepMultiset((5,))

    def test_fundamental_squared(self):
        # factors as a PRODUCT {1,1}; the CG decomposition {2,0} is the SUM
        c = char_of("q^2 + 2 + q^-2")
        assert factor_tensor_of_irreps(c) == IrrepMultiset((1, 1))
        assert clebsch_gordan_decompose(c) == IrrepMultiset((2, 0))

    def test_direct_sum_is_not_a_tensor(self):
        # char(3) + char(0): dimension 5 admits no product of (n_i + 1) with
        # the n_i summing to 3
        c = char_of("q^3 + q + 1 + q^-1 + q^-3")
        with pytest.raises(FactorizationError, match="not a tensor"):
            factor_tensor_of_irreps(c)

    def test_multiple_of_trivial_rejected(self):
        with pytest.raises(FactorizationError):
            factor_tensor_of_irreps(char_of("2"))

    def test_trivial_character_rejected(self):
        with pytest.raises(FactorizationError):
            factor_tensor_of_irreps(irrep_character(0))

    @pytest.mark.parametrize("n", range(1, 13))
    def test_round_trip(self, n):
        for labels in partitions(n):
            c = tensor_character([irrep_character(k) for k in labels])
            assert factor_tensor_of_irreps(c).labels == labels

    @pytest.mark.parametrize("n", range(1, 13))
    def test_characters_injective_at_fixed_sum(self, n):
        seen = {}
        for labels in partitions(n):
            c = tensor_character([irrep_character(k) for k in labels])
            assert c not in seen, f"{labels} and {seen[c]} share a character"
            seen[c] = labels


class TestPartitions:
    def test_of_four(self):
        assert list(partitions(4)) == [
            (4,),
            (3, 1),
            (2, 2),
            (2, 1, 1),
            (1, 1, 1, 1),
        ]

    def test_zero_has_empty_partition(self):
        assert list(partitions(0)) == [()]

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            list(partitions(-1))

    def test_counts(self):
        # p(1..10) = 1, 2, 3, 5, 7, 11, 15, 22, 30, 42
        expected = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
        assert [len(list(partitions(n))) for n in range(1, 11)] == expected


@given(st.lists(st.integers(min_value=1, max_value=6), min_size=1, max_size=4))
def test_dimension_multiplicativity(labels):
    c = tensor_character([irrep_character(k) for k in labels])
    expected = 1
    for k in labels:
        expected *= k + 1
    assert c.dimension == expected
    assert c.poly.evaluate_at_one() == expected


@given(st.lists(st.integers(min_value=1, max_value=5), min_size=1, max_size=4))
def test_factorization_round_trip_random(labels):
    c = tensor_character([irrep_character(k) for k in labels])
    assert factor_tensor_of_irreps(c) == IrrepMultiset(tuple(labels))
