import pytest

from conftest import all_partitions_up_to, compositions_of, partitions_of

from cyclosieve import (
    CapExceeded,
    Composition,
    Partition,
    Tableau,
    conjugate,
    css,
    descent_set,
    dominance_leq,
    enumerate_cst,
    enumerate_rst,
    enumerate_syt,
    extended_descent_set,
    hook_length,
    syt_count,
)


class TestPartition:
    def test_validation(self):
        with pytest.raises(ValueError):
            Partition((1, 2))
        with pytest.raises(ValueError):
            Partition((2, 0))
        assert Partition(()) == ()

    def test_conjugate_examples(self):
        assert conjugate(Partition((4, 4, 3, 1))) == Partition((4, 3, 3, 2))
        assert conjugate(Partition((5,))) == Partition((1,) * 5)
        assert conjugate(Partition((3, 3))) == Partition((2, 2, 2))

    def test_conjugate_involution_up_to_12(self):
        for size in range(13):
            for lam in partitions_of(size):
                assert lam.conjugate().conjugate() == lam


class TestComposition:
    def test_zero_parts_kept(self):
        alpha = Composition((0, 2, 1, 0, 1))
        assert len(alpha) == 5 and alpha.size == 4

    def test_step_function(self):
        # the section-2 example: alpha = (0,2,1,0,1) maps 1,2 -> 2, 3 -> 3, 4 -> 5
        assert Composition((0, 2, 1, 0, 1)).labels() == (2, 2, 3, 5)

    def test_rotation_direction_matches_promotion(self):
        assert Composition((2, 0, 3, 3, 2, 2)).rotated() == Composition((2, 2, 0, 3, 3, 2))


class TestHooks:
    def test_hook_examples(self):
        assert hook_length(Partition((4, 4, 3, 1)), (2, 1)) == 6
        assert hook_length(Partition((1,)), (1, 1)) == 1
        assert hook_length(Partition((3, 3)), (1, 1)) == 4

    def test_outside_cell_rejected(self):
        with pytest.raises(ValueError):
            hook_length(Partition((3, 1)), (2, 2))

    def test_counts(self):
        assert syt_count(Partition((2, 2, 2))) == 5
        assert syt_count(Partition((3, 3, 1))) == 21


class TestEnumerateSyt:
    def test_counts_match_hook_formula_up_to_10(self):
        for size in range(11):
            for lam in partitions_of(size):
                assert len(enumerate_syt(lam)) == syt_count(lam)

    def test_single_row(self):
        assert enumerate_syt(Partition((4,))) == [Tableau([(1, 2, 3, 4)])]

    def test_canonical_order(self):
        tabs = enumerate_syt(Partition((2, 2)))
        assert [t.row_word() for t in tabs] == sorted(t.row_word() for t in tabs)

    def test_cap(self):
        with pytest.raises(CapExceeded):
            enumerate_syt(Partition((4, 4, 4)), cap=10)


class TestEnumerateCst:
    def test_two_by_two_bound_three_listing(self):
        got = {t.rows for t in enumerate_cst(Partition((2, 2)), 3)}
        expected = {
            ((1, 1), (2, 2)),
            ((2, 2), (3, 3)),
            ((1, 1), (3, 3)),
            ((1, 2), (2, 3)),
            ((1, 2), (3, 3)),
            ((1, 1), (2, 3)),
        }
        assert got == expected

    def test_single_box(self):
        assert len(enumerate_cst(Partition((1,)), 7)) == 7

    def test_content_restriction_is_kostka(self):
        lam = Partition((2, 2, 2))
        alpha = Composition((2, 2, 2))
        tabs = enumerate_cst(lam, 3, alpha)
        assert all(t.content(3) == alpha for t in tabs)
        # brute-force filter oracle
        brute = [t for t in enumerate_cst(lam, 3) if t.content(3) == alpha]
        assert tabs == brute

    def test_rows_exceeding_bound_empty(self):
        assert enumerate_cst(Partition((1, 1, 1)), 2) == []

    def test_rst_is_transposed_cst(self):
        lam = Partition((3, 2))
        rst = enumerate_rst(lam, 4)
        assert {t.rows for t in rst} == {
            t.transpose().rows for t in enumerate_cst(lam.conjugate(), 4)
        }
        assert all(t.is_row_strict(4) for t in rst)


class TestDescents:
    def test_three_row_display(self):
        t = Tableau([(1, 3, 5), (2, 4, 7), (6,)])
        assert descent_set(t) == frozenset({1, 3, 5})

    def test_row_and_column(self):
        assert descent_set(Tableau([(1, 2, 3, 4)])) == frozenset()
        assert descent_set(Tableau([(1,), (2,), (3,)])) == frozenset({1, 2})

    def test_non_standard_rejected(self):
        with pytest.raises(ValueError):
            descent_set(Tableau([(1, 1), (2, 2)]))


class TestExtendedDescents:
    def test_twelve_box_rectangle(self):
        p = Tableau([(1, 2, 4, 9), (3, 5, 8, 11), (6, 7, 10, 12)])
        assert extended_descent_set(p) == frozenset({2, 4, 5, 9, 11})
        jp = Tableau([(1, 2, 3, 5), (4, 6, 9, 10), (7, 8, 11, 12)])
        assert extended_descent_set(jp) == frozenset({3, 5, 6, 10, 12})

    def test_single_row(self):
        assert extended_descent_set(Tableau([(1, 2, 3)])) == frozenset()

    def test_restriction_is_plain_descent_set(self):
        from conftest import rectangles_up_to

        for lam in rectangles_up_to(8):
            n = lam.size
            for t in enumerate_syt(lam):
                ext = extended_descent_set(t)
                assert ext - {n} == descent_set(t)

    def test_non_rectangular_rejected(self):
        with pytest.raises(ValueError):
            extended_descent_set(Tableau([(1, 2), (3,)]))


class TestCss:
    def test_examples(self):
        assert css(Partition((3, 3, 2))).rows == ((1, 4, 7), (2, 5, 8), (3, 6))
        assert css(Partition((1, 1, 1))).rows == ((1,), (2,), (3,))
        assert css(Partition((2, 2))).rows == ((1, 3), (2, 4))


class TestDominance:
    def test_examples(self):
        assert dominance_leq(Partition((2, 2)), Partition((3, 1)))
        assert dominance_leq(Partition((3, 1)), Partition((3, 1)))
        assert not dominance_leq(Partition((3, 1)), Partition((2, 2)))

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            dominance_leq(Partition((2,)), Partition((3,)))


class TestTableauBasics:
    def test_content_reports_explicit_length(self):
        t = Tableau([(1, 1), (3, 3)])
        assert t.content(4) == Composition((2, 0, 2, 0))
        with pytest.raises(ValueError):
            t.content(2)

    def test_immutability(self):
        t = Tableau([(1, 2)])
        with pytest.raises(AttributeError):
            t.rows = ((9,),)
