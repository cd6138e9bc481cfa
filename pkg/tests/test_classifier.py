"""End-to-end classification of multiprojective spaces and the Sym^2 map."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from multiproj.classifier import (
    Partition,
    ProjPoint,
    Reason,
    Verdict,
    classify,
    cohomology_character,
    parse_partition,
    poincare_of_multiprojective,
    sym2_p1_map,
)
from multiproj.exactalg import LaurentPoly
from multiproj.sl2rep import Character, partitions
from multiproj.symcurve import poincare_genus_zero


class TestParsePartition:
    def test_reorders(self):
        p = parse_partition("1,2,1")
        assert p.parts == (2, 1, 1)
        assert p.n == 4

    def test_single(self):
        assert parse_partition("5").parts == (5,)

    def test_spaces_ok(self):
        assert parse_partition("3 1").parts == (3, 1)
        assert parse_partition(" 2, 1 ").parts == (2, 1)

    @pytest.mark.parametrize("text", ["2,0", "-1", "0"])
    def test_nonpositive_rejected(self, text):
        with pytest.raises(ValueError, match=">= 1"):
            parse_partition(text)

    def test_bad_token_named(self):
        with pytest.raises(ValueError, match="'two'"):
            parse_partition("3,two")

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            parse_partition("  ")


class TestPartitionType:
    def test_canonicalizes(self):
        assert Partition((1, 3, 2)).parts == (3, 2, 1)

    def test_str(self):
        assert str(Partition((2, 1))) == "2,1"

    def test_rejects_empty_and_nonpositive(self):
        with pytest.raises(ValueError):
            Partition(())
        with pytest.raises(ValueError):
            Partition((2, 0))


class TestCohomologyCharacter:
    @pytest.mark.parametrize(
        "parts,text",
        [
            ((1,), "q + q^-1"),
            ((1, 1), "q^2 + 2 + q^-2"),
            ((2, 1), "q^3 + 2*q + 2*q^-1 + q^-3"),
        ],
    )
    def test_examples(self, parts, text):
        expected = Character(LaurentPoly.parse(text))
        assert cohomology_character(Partition(parts)) == expected

    @pytest.mark.parametrize("parts", [(3,), (2, 2), (4, 2, 1)])
    def test_dimension_and_top(self, parts):
        c = cohomology_character(Partition(parts))
        expected_dim = 1
        for k in parts:
            expected_dim *= k + 1
        assert c.dimension == expected_dim
        assert c.top_degree == sum(parts)


class TestClassify:
    def test_distinct_characters(self):
        v = classify(parse_partition("2,1"), parse_partition("1,1,1"))
        assert v.verdict is Verdict.NON_ISOMORPHIC
        assert v.reason is Reason.DISTINCT_CHARACTERS
        assert str(v.character1) == "q^3 + 2*q + 2*q^-1 + q^-3"
        assert str(v.character2) == "q^3 + 3*q + 3*q^-1 + q^-3"
        # evidence round-trips to the inputs
        assert v.factorization1.labels == (2, 1)
        assert v.factorization2.labels == (1, 1, 1)

    def test_reordering_is_isomorphic(self):
        v = classify(parse_partition("1,2"), parse_partition("2,1"))
        assert v.verdict is Verdict.ISOMORPHIC
        assert v.reason is Reason.SAME_PARTITION
        assert v.character1 == v.character2

    def test_dimension_mismatch_short_circuits(self):
        v = classify(parse_partition("3"), parse_partition("2,2"))
        assert v.verdict is Verdict.NON_ISOMORPHIC
        assert v.reason is Reason.DIMENSION_MISMATCH
        assert v.character1 is None and v.factorization2 is None

    def test_json_dict(self):
        doc = classify(parse_partition("3"), parse_partition("2,2")).to_json_dict()
        assert doc == {
            "verdict": "NON_ISOMORPHIC",
            "reason": "DIMENSION_MISMATCH",
            "n1": 3,
            "n2": 4,
            "partition1": "3",
            "partition2": "2,2",
            "character1": None,
            "character2": None,
            "factorization1": None,
            "factorization2": None,
        }

    @pytest.mark.parametrize("n", range(1, 11))
    def test_complete_at_desk_scale(self, n):
        # distinct partitions of equal n are always told apart, and the
        # characters themselves are pairwise distinct
        plist = [Partition(p) for p in partitions(n)]
        chars = [cohomology_character(p) for p in plist]
        assert len(set(chars)) == len(chars)
        for i in range(len(plist)):
            for j in range(i + 1, len(plist)):
                v = classify(plist[i], plist[j])
                assert v.verdict is Verdict.NON_ISOMORPHIC
                assert v.reason is Reason.DISTINCT_CHARACTERS

    @pytest.mark.parametrize("n", range(1, 11))
    def test_self_classification(self, n):
        for p in partitions(n):
            v = classify(Partition(p), Partition(tuple(reversed(p))))
            assert v.verdict is Verdict.ISOMORPHIC


class TestPoincareOfMultiprojective:
    @pytest.mark.parametrize("n", [1, 2, 5, 9])
    def test_single_factor_is_projective_space(self, n):
        assert poincare_of_multiprojective(Partition((n,))) == poincare_genus_zero(n)

    def test_products(self):
        assert poincare_of_multiprojective(Partition((1, 1))).betti == (1, 0, 2, 0, 1)
        assert poincare_of_multiprojective(Partition((2, 1))).betti == (
            1, 0, 2, 0, 2, 0, 1,
        )

    @pytest.mark.parametrize("n", range(1, 13))
    def test_degree_weight_dictionary(self, n):
        # B_d equals the multiplicity of weight n - d in the character:
        # the same data indexed by cohomological degree instead of weight
        for parts in partitions(n):
            p = Partition(parts)
            pp = poincare_of_multiprojective(p)
            c = cohomology_character(p)
            for d, b in enumerate(pp.betti):
                assert b == c.coefficient(n - d)

    def test_total_is_product(self):
        assert poincare_of_multiprojective(Partition((3, 2, 1))).total() == 24


class TestProjPoint:
    def test_scalar_equality(self):
        assert ProjPoint((1, 2)) == ProjPoint((Fraction(1, 2), 1))
        assert hash(ProjPoint((1, 2))) == hash(ProjPoint((2, 4)))

    def test_inequality(self):
        assert ProjPoint((1, 2)) != ProjPoint((1, 3))
        assert ProjPoint((0, 1)) != ProjPoint((1, 0))

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            ProjPoint((0, 0))
        with pytest.raises(ValueError):
            ProjPoint(())

    def test_str(self):
        assert str(ProjPoint((1, 0))) == "[1:0]"


rationals = st.builds(
    Fraction,
    st.integers(min_value=-9, max_value=9),
    st.integers(min_value=1, max_value=9),
)
p1_points = st.tuples(rationals, rationals).filter(lambda c: any(c)).map(ProjPoint)
nonzero_scalars = rationals.filter(lambda r: r != 0)


class TestSym2Map:
    def test_degenerate_corner(self):
        out = sym2_p1_map(ProjPoint((1, 0)), ProjPoint((0, 1)))
        assert out == ProjPoint((0, 0, 1))

    def test_diagonal_point(self):
        out = sym2_p1_map(ProjPoint((1, 1)), ProjPoint((1, 1)))
        assert out == ProjPoint((1, 1, 2))

    def test_corner_cases_nonvanishing(self):
        e0, e1 = ProjPoint((1, 0)), ProjPoint((0, 1))
        for z in (e0, e1):
            for w in (e0, e1):
                sym2_p1_map(z, w)  # must not hit the all-zero guard

    def test_wrong_dimension_rejected(self):
        with pytest.raises(ValueError):
            sym2_p1_map(ProjPoint((1, 0, 0)), ProjPoint((0, 1)))

    @given(p1_points, p1_points)
    def test_symmetric(self, z, w):
        assert sym2_p1_map(z, w) == sym2_p1_map(w, z)

    @given(p1_points, p1_points, nonzero_scalars)
    def test_scaling_equivariant(self, z, w, s):
        scaled = ProjPoint(tuple(s * c for c in z.coords))
        assert sym2_p1_map(scaled, w) == sym2_p1_map(z, w)

    @given(p1_points, p1_points)
    def test_never_zero(self, z, w):
        assert any(sym2_p1_map(z, w).coords)
