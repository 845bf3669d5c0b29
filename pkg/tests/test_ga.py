"""Algebra kernel: blade products, axioms, modes, text round trips."""

import itertools
from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from contextuality_lab.ga import (
    APPROX,
    EXACT,
    Multivector,
    basis_vector,
    blade_product,
    parse_multivector,
    pseudoscalar,
    random_multivector,
    render_multivector,
)

ONE = Multivector.scalar(1)
MINUS_ONE = Multivector.scalar(-1)
E = {i: basis_vector(i) for i in (1, 2, 3)}


def test_basis_vector_masks():
    assert E[1].coeffs[1] == 1
    assert E[2].coeffs[2] == 1
    assert E[3].coeffs[4] == 1


def test_basis_vector_range_check():
    with pytest.raises(ValueError):
        basis_vector(4)
    with pytest.raises(ValueError):
        basis_vector(0)


class TestBladeProduct:
    def test_contraction(self):
        for i in (1, 2, 3):
            assert E[i] * E[i] == ONE

    def test_anticommutation(self):
        for i, j in itertools.permutations((1, 2, 3), 2):
            assert E[i] * E[j] == -(E[j] * E[i])

    def test_anticommutator_rule(self):
        for i in (1, 2, 3):
            for j in (1, 2, 3):
                lhs = E[i] * E[j] + E[j] * E[i]
                assert lhs == Multivector.scalar(2 if i == j else 0)

    def test_pseudoscalar_square(self):
        unit = pseudoscalar()
        assert E[1] * E[2] * E[3] == unit
        assert unit * unit == MINUS_ONE

    def test_pseudoscalar_commutes_with_vectors(self):
        unit = pseudoscalar()
        for i in (1, 2, 3):
            assert unit * E[i] == E[i] * unit

    def test_bivector_words(self):
        for i, j in itertools.permutations((1, 2, 3), 2):
            assert E[i] * E[j] * E[j] * E[i] == ONE
            assert E[i] * E[j] * E[i] * E[j] == MINUS_ONE

    def test_opposite_bivectors_cancel(self):
        e12 = E[1] * E[2]
        e21 = E[2] * E[1]
        assert e12 * e21 == ONE

    def test_trivector_words(self):
        for i, j, k in itertools.permutations((1, 2, 3)):
            word = E[i] * E[j] * E[k]
            assert word * word == MINUS_ONE
            assert E[i] * E[j] * E[k] * E[k] * E[j] * E[i] == ONE

    def test_scale_minus_one_is_reversed_product(self):
        assert (E[1] * E[2]).scale(-1) == E[2] * E[1]

    def test_blade_product_table_signs(self):
        assert blade_product(1, 1) == (1, 0)
        assert blade_product(3, 3) == (-1, 0)
        assert blade_product(7, 7) == (-1, 0)
        assert blade_product(1, 2) == (1, 3)
        assert blade_product(2, 1) == (-1, 3)


class TestSignFlips:
    """Sign choices never move the values of squared words."""

    @pytest.mark.parametrize("s", [1, -1])
    @pytest.mark.parametrize("t", [1, -1])
    def test_plane_words(self, s, t):
        for i, j in itertools.permutations((1, 2, 3), 2):
            a, b = s * E[i], t * E[j]
            assert a * b * b * a == ONE
            assert a * b * a * b == MINUS_ONE

    def test_space_words(self):
        for signs in itertools.product((1, -1), repeat=3):
            for i, j, k in itertools.permutations((1, 2, 3)):
                a, b, c = signs[0] * E[i], signs[1] * E[j], signs[2] * E[k]
                assert a * b * c * c * b * a == ONE
                assert a * b * c * a * b * c == MINUS_ONE


class TestLinearStructure:
    def test_additive_inverse(self):
        assert (E[1] + (-E[1])).is_zero()

    def test_mixed_grade_sum(self):
        mixed = Multivector.scalar(1) + E[3] * E[1]
        assert mixed.scalar_part() == 1
        assert mixed.grade_projection(2) == E[3] * E[1]
        assert mixed.grades() == {0, 2}

    def test_scalar_part_of_products(self):
        assert (E[1] * E[1]).scalar_part() == 1
        assert (E[1] * E[2]).scalar_part() == 0

    def test_grade_projection_range(self):
        with pytest.raises(ValueError):
            E[1].grade_projection(4)

    def test_seeded_associativity_distributivity(self):
        rng = Random(99)
        for _ in range(200):
            a, b, c = (random_multivector(rng) for _ in range(3))
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c


small = st.integers(min_value=-4, max_value=4)
mv_strategy = st.builds(
    lambda values: Multivector(tuple(Fraction(v) for v in values), EXACT),
    st.lists(small, min_size=8, max_size=8),
)


@settings(max_examples=60, deadline=None)
@given(mv_strategy, mv_strategy, mv_strategy)
def test_associativity_property(a, b, c):
    assert (a * b) * c == a * (b * c)


@settings(max_examples=60, deadline=None)
@given(mv_strategy, mv_strategy, mv_strategy)
def test_distributivity_property(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@settings(max_examples=60, deadline=None)
@given(mv_strategy, mv_strategy)
def test_reversal_of_scalar_part(a, b):
    # the scalar part of a product is insensitive to cyclic rotation
    assert (a * b).scalar_part() == (b * a).scalar_part()


class TestModes:
    def test_mixed_mode_rejected(self):
        x = basis_vector(1, APPROX)
        with pytest.raises(ValueError):
            _ = x * E[1]
        with pytest.raises(ValueError):
            _ = x + E[1]
        with pytest.raises(ValueError):
            x.equals(E[1])

    def test_float_coefficient_rejected_in_exact_mode(self):
        with pytest.raises(ValueError):
            E[1].scale(0.5)

    def test_fraction_rejected_in_approx_mode(self):
        with pytest.raises(ValueError):
            basis_vector(1, APPROX).scale(Fraction(1, 2))

    def test_approx_equals_tolerance(self):
        x = basis_vector(1, APPROX)
        nudged = x + basis_vector(1, APPROX).scale(1e-15)
        assert x.equals(nudged, tolerance=1e-12)
        assert not x.equals(x.scale(1.001), tolerance=1e-12)

    def test_approx_mirror_of_axioms(self):
        e1 = basis_vector(1, APPROX)
        e2 = basis_vector(2, APPROX)
        assert (e1 * e2).equals(-(e2 * e1))
        assert (e1 * e1).equals(Multivector.scalar(1.0, APPROX))


class TestTextFormat:
    def test_render_examples(self):
        mixed = Multivector.from_blades({0: 1, 3: 2, 7: -1})
        assert render_multivector(mixed) == "1 + 2*e12 - e123"
        assert str(-E[1]) == "-e1"
        assert str(Multivector.zero()) == "0"

    def test_render_fraction(self):
        half = Multivector.from_blades({6: Fraction(3, 2)})
        assert str(half) == "3/2*e23"

    def test_parse_round_trip(self):
        rng = Random(7)
        for _ in range(50):
            mv = random_multivector(rng)
            assert parse_multivector(str(mv)) == mv

    def test_parse_accepts_typographic_signs(self):
        assert parse_multivector("1 + 2·e12 − e123") == Multivector.from_blades(
            {0: 1, 3: 2, 7: -1}
        )

    def test_parse_fraction_and_zero(self):
        assert parse_multivector("3/2*e23") == Multivector.from_blades({6: Fraction(3, 2)})
        assert parse_multivector("0") == Multivector.zero()

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_multivector("e4")
        with pytest.raises(ValueError):
            parse_multivector("")
        with pytest.raises(ValueError):
            parse_multivector("e1e2")
        with pytest.raises(ValueError):
            parse_multivector("e1 e2")

    def test_parse_decimal_needs_approx(self):
        with pytest.raises(ValueError):
            parse_multivector("0.5*e1")
        parsed = parse_multivector("0.5*e1", mode=APPROX)
        assert parsed.coeffs[1] == 0.5
