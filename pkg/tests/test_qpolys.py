import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import all_partitions_up_to, compositions_of, partitions_of

from cyclosieve import (
    Composition,
    IntPolynomial,
    Partition,
    charge,
    enumerate_cst,
    evacuate,
    kappa,
    kostka_foulkes,
    mn_character,
    q_binomial,
    q_catalan,
    q_factorial,
    q_hook_formula,
    q_int,
    schur_evaluate,
    schur_principal_specialization,
    syt_count,
)

small_polys = st.lists(st.integers(-9, 9), min_size=0, max_size=6).map(IntPolynomial)


class TestIntPolynomial:
    def test_normalization(self):
        assert IntPolynomial((1, 0, 0)).coeffs == (1,)
        assert IntPolynomial(()).is_zero()

    @given(small_polys, small_polys, small_polys)
    @settings(max_examples=60, deadline=None)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) * c == a * c + b * c
        assert a - a == IntPolynomial.zero()

    @given(small_polys)
    @settings(max_examples=40, deadline=None)
    def test_eval_at_one_is_coefficient_sum(self, a):
        assert a(1) == sum(a.coeffs)

    def test_exact_division(self):
        num = q_int(6)
        assert num.exact_div(q_int(3)) == IntPolynomial((1, 0, 0, 1))
        with pytest.raises(AssertionError):
            (q_int(3) + IntPolynomial.one()).exact_div(q_int(2))

    def test_eval_over_fractions(self):
        p = IntPolynomial((1, 2, 1))
        assert p(Fraction(1, 2)) == Fraction(9, 4)


class TestQAnalogues:
    def test_q_binomial_examples(self):
        assert q_binomial(5, 0) == IntPolynomial.one()
        assert q_binomial(2, 1) == IntPolynomial((1, 1))
        assert q_binomial(4, 2) == IntPolynomial((1, 1, 2, 1, 1))

    def test_q_binomial_counts_boxed_partitions(self):
        # [n choose k]_q generates partitions in a k x (n-k) box
        for n in range(1, 8):
            for k in range(n + 1):
                poly = q_binomial(n, k)
                counts = {}
                for lam in all_partitions_up_to(k * (n - k)):
                    if len(lam) <= k and (not lam or lam[0] <= n - k):
                        counts[lam.size] = counts.get(lam.size, 0) + 1
                for exp, coeff in enumerate(poly.coeffs):
                    assert coeff == counts.get(exp, 0)

    def test_value_at_one(self):
        for n in range(8):
            for k in range(n + 1):
                assert q_binomial(n, k)(1) == math.comb(n, k)


class TestQHookFormula:
    def test_hook_formula_222_product_form(self):
        expected = IntPolynomial((1, -1, 1)) * q_int(5)
        assert q_hook_formula(Partition((2, 2, 2))) == expected

    def test_shape_331(self):
        expected = q_int(7) * IntPolynomial((1, 0, 1, 0, 1))
        assert q_hook_formula(Partition((3, 3, 1))) == expected

    def test_single_row(self):
        assert q_hook_formula(Partition((6,))) == IntPolynomial.one()

    def test_counts_at_one(self):
        for lam in all_partitions_up_to(8):
            if lam.size:
                assert q_hook_formula(lam)(1) == syt_count(lam)


class TestKappa:
    def test_examples(self):
        assert kappa(Partition((2, 2))) == 2
        assert kappa(Partition((7,))) == 0
        assert kappa(Partition((3, 3, 3))) == 9

    def test_rectangle_formula(self):
        for a in range(1, 6):
            for b in range(1, 6):
                assert kappa(Partition((b,) * a)) == b * a * (a - 1) // 2


class TestSchur:
    def test_shifted_specialization_22_bound_3(self):
        spec = schur_principal_specialization(Partition((2, 2)), 3)
        assert spec.shift(-kappa(Partition((2, 2)))) == IntPolynomial((1, 1, 2, 1, 1))

    def test_single_box(self):
        assert schur_principal_specialization(Partition((1,)), 5) == q_int(5)

    def test_single_column(self):
        k = 4
        spec = schur_principal_specialization(Partition((1,) * k), k)
        assert spec == IntPolynomial.monomial(kappa(Partition((1,) * k)))

    def test_specialization_at_one_counts_tableaux(self):
        for lam in all_partitions_up_to(8):
            if not lam.size:
                continue
            for k in range(1, 7):
                assert schur_principal_specialization(lam, k)(1) == len(
                    enumerate_cst(lam, k)
                )

    def test_monomial_expansion_of_s22(self):
        # x1^2x2^2 + x2^2x3^2 + x1^2x3^2 + x1x2^2x3 + x1x2x3^2 + x1^2x2x3
        monomials = sorted(
            tuple(t.content(3)) for t in enumerate_cst(Partition((2, 2)), 3)
        )
        assert monomials == sorted(
            [(2, 2, 0), (0, 2, 2), (2, 0, 2), (1, 2, 1), (1, 1, 2), (2, 1, 1)]
        )

    def test_all_ones(self):
        assert schur_evaluate(Partition((3, 1)), (1, 1, 1)) == len(
            enumerate_cst(Partition((3, 1)), 3)
        )

    def test_signed_evaluation_counts_self_evacuating(self):
        for lam in [Partition((2, 2)), Partition((3, 1)), Partition((2, 1))]:
            for k in range(len(lam), 6):
                values = tuple((-1) ** i for i in range(k))
                fixed = sum(
                    1 for t in enumerate_cst(lam, k) if evacuate(t, k) == t
                )
                assert abs(schur_evaluate(lam, values)) == fixed


class TestCharge:
    def test_base_cases(self):
        assert charge((1,)) == 0
        assert charge((2, 1)) == 0
        assert charge((1, 2)) == 1

    def test_weakly_increasing_word_is_maximal(self):
        from itertools import permutations as perms

        words = set(perms((1, 1, 2, 2)))
        values = {w: charge(w) for w in words}
        assert values[(1, 1, 2, 2)] == max(values.values())

    def test_non_partition_content_rejected(self):
        with pytest.raises(ValueError):
            charge((2, 2, 1))
        with pytest.raises(ValueError):
            charge((1, 3))


class TestKostkaFoulkes:
    def test_small_values(self):
        assert kostka_foulkes(Partition((2,)), Composition((1, 1))) == IntPolynomial((0, 1))
        assert kostka_foulkes(Partition((1, 1)), Composition((1, 1))) == IntPolynomial.one()
        assert kostka_foulkes(Partition((2, 1)), Composition((1, 1, 1))) == IntPolynomial((0, 1, 1))
        assert kostka_foulkes(Partition((2, 2)), Composition((1, 1, 1, 1))) == IntPolynomial((0, 0, 1, 0, 1))
        assert kostka_foulkes(Partition((4,)), Composition((4,))) == IntPolynomial.one()

    def test_value_at_one_is_kostka_number(self):
        for lam in all_partitions_up_to(6):
            if not lam.size:
                continue
            n = lam.size
            for k in range(1, 5):
                for alpha in compositions_of(n, k):
                    assert kostka_foulkes(lam, alpha)(1) == len(
                        enumerate_cst(lam, k, alpha)
                    ), (lam, alpha)

    def test_rearrangement_invariance_through_enumeration(self):
        lam = Partition((3, 2, 1))
        base = kostka_foulkes(lam, Composition((3, 2, 1)))
        for alpha in [(1, 2, 3), (2, 3, 1), (3, 1, 2), (1, 3, 2)]:
            assert kostka_foulkes(lam, Composition(alpha)) == base

    def test_q_shift_against_hook_formula(self):
        """K_{shape,1^n}(q) is a q-power times the q-hook formula; the shift
        is found and pinned per shape."""
        for lam in all_partitions_up_to(8):
            n = lam.size
            if not n:
                continue
            kf = kostka_foulkes(lam, Composition((1,) * n))
            f = q_hook_formula(lam)
            shift = kf.valuation() - f.valuation()
            assert shift >= 0
            assert f.shift(shift) == kf, (lam, shift)


class TestMnCharacter:
    def test_identity_class_is_dimension(self):
        for lam in all_partitions_up_to(7):
            if lam.size:
                assert mn_character(lam, Partition((1,) * lam.size)) == syt_count(lam)

    def test_trivial_representation(self):
        for mu in partitions_of(5):
            assert mn_character(Partition((5,)), mu) == 1

    def test_sign_representation(self):
        for mu in partitions_of(5):
            expected = (-1) ** sum(p - 1 for p in mu)
            assert mn_character(Partition((1,) * 5), mu) == expected

    def test_s4_character_table_row(self):
        lam = Partition((2, 2))
        values = {
            (1, 1, 1, 1): 2,
            (2, 1, 1): 0,
            (2, 2): 2,
            (3, 1): -1,
            (4,): 0,
        }
        for mu, expected in values.items():
            assert mn_character(lam, Partition(mu)) == expected

    def test_removal_order_independence(self):
        for lam in all_partitions_up_to(7):
            if not lam.size:
                continue
            for mu in partitions_of(lam.size):
                assert mn_character(lam, mu, removal_order="desc") == mn_character(
                    lam, mu, removal_order="asc"
                )

    def test_evacuation_fixed_points_match_character(self):
        lam = Partition((2, 2))
        chi = mn_character(lam, Partition((2, 2)))
        from cyclosieve import enumerate_syt

        fixed = sum(1 for t in enumerate_syt(lam) if evacuate(t, 4) == t)
        assert fixed == abs(chi)

    def test_size_mismatch_rejected(self):
        with pytest.raises(ValueError):
            mn_character(Partition((2, 2)), Partition((3,)))


class TestQCatalan:
    def test_examples(self):
        assert q_catalan(1) == IntPolynomial.one()
        assert q_catalan(2) == IntPolynomial((1, 0, 1))

    def test_matches_two_row_hook_formula(self):
        for n in range(1, 9):
            assert q_catalan(n) == q_hook_formula(Partition((n, n)))

    def test_catalan_numbers(self):
        for n in range(1, 9):
            assert q_catalan(n)(1) == math.comb(2 * n, n) // (n + 1)
