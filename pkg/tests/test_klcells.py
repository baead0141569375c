from itertools import permutations as itertools_permutations

import pytest

from conftest import all_partitions_up_to, rectangles_up_to

from cyclosieve import (
    Composition,
    IntPolynomial,
    Partition,
    Permutation,
    Tableau,
    enumerate_syt,
    long_element,
    promote,
    rsk,
    simple,
)
from cyclosieve.klcells import (
    CellMatrix,
    cell_generator_matrix,
    kl_immanant,
    kl_table,
    mu_promotion_invariance,
    mu_tableaux,
    representation_matrix,
    vanishing_criterion_check,
    verify_promotion_identity,
    _identity_matrix,
    _mat_mul,
)
from cyclosieve.jeudetaquin import evacuate
from cyclosieve.permutations import rsk_inverse


def all_perms(n):
    return [Permutation(p) for p in itertools_permutations(range(1, n + 1))]


def _promotion_orbits(shape):
    orbits = []
    seen = set()
    for t in enumerate_syt(shape):
        if t in seen:
            continue
        orbit = [t]
        cur = promote(t, shape.size)
        while cur != t:
            orbit.append(cur)
            cur = promote(cur, shape.size)
        seen.update(orbit)
        orbits.append(orbit)
    return orbits


def _delete_corner(t: Tableau) -> Tableau:
    rows = [list(row) for row in t.rows]
    assert rows[-1][-1] == t.size
    rows[-1].pop()
    if not rows[-1]:
        rows.pop()
    return Tableau(rows)


class TestTableAxioms:
    def test_s3_polynomials_are_comparability_indicators(self):
        table = kl_table(3)
        for u in all_perms(3):
            for w in all_perms(3):
                expected = IntPolynomial.one() if table.leq(u, w) else IntPolynomial.zero()
                assert table.poly(u, w) == expected

    def test_s4_singular_loci(self):
        table = kl_table(4)
        one_plus_q = IntPolynomial((1, 1))
        # P_{x,3412} = 1+q exactly for x <= 1324; P_{x,4231} = 1+q for x <= 2143
        w3412, w4231 = Permutation((3, 4, 1, 2)), Permutation((4, 2, 3, 1))
        for x in all_perms(4):
            if table.leq(x, w3412):
                expected = one_plus_q if table.leq(x, Permutation((1, 3, 2, 4))) else IntPolynomial.one()
                assert table.poly(x, w3412) == expected
            if table.leq(x, w4231):
                expected = one_plus_q if table.leq(x, Permutation((2, 1, 4, 3))) else IntPolynomial.one()
                assert table.poly(x, w4231) == expected

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_defining_axioms(self, n):
        table = kl_table(n)
        for u in all_perms(n):
            assert table.poly(u, u) == IntPolynomial.one()  # normalization
        for (ui, wi), coeffs in table._polys.items():
            lu, lw = table.lengths[ui], table.lengths[wi]
            assert table._leq[ui, wi]  # Bruhat compatibility of storage
            assert len(coeffs) - 1 <= (lw - lu - 1) // 2  # degree bound
            assert coeffs[0] >= 1  # constant term positive for u <= w
        # vanishing outside the order
        for u in all_perms(n):
            for w in all_perms(n):
                if not table.leq(u, w) and u != w:
                    assert table.poly(u, w).is_zero()

    def test_s6_degree_bound_holds_storewide(self):
        table = kl_table(6)
        for (ui, wi), coeffs in table._polys.items():
            assert len(coeffs) - 1 <= (table.lengths[wi] - table.lengths[ui] - 1) // 2

    def test_rank_cap(self):
        with pytest.raises(ValueError):
            kl_table(7)


class TestMu:
    def test_spec_examples_in_s4(self):
        table = kl_table(4)
        assert table.mu_sym(Permutation((4, 1, 2, 3)), Permutation((2, 1, 3, 4))) == 0
        assert table.mu_sym(Permutation((2, 1, 3, 4)), Permutation((3, 1, 2, 4))) == 1
        assert table.mu_sym(Permutation((3, 1, 2, 4)), Permutation((4, 1, 2, 3))) == 1

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_long_element_and_inverse_symmetries(self, n):
        table = kl_table(n)
        wo = long_element(n)
        for u in all_perms(n):
            for v in all_perms(n):
                m = table.mu(u, v)
                assert m == table.mu(wo * v, wo * u)
                assert m == table.mu(v * wo, u * wo)
                assert m == table.mu(wo * u * wo, wo * v * wo)
                assert m == table.mu(u.inverse(), v.inverse())

    def test_mu_tableaux_independent_of_recording_choice(self):
        """Both change-of-label forms give the same value for every choice of
        the auxiliary tableau."""
        lam = Partition((3, 2))
        basis = enumerate_syt(lam)
        table = kl_table(5)
        for p in basis:
            for q in basis:
                values = {
                    table.mu_sym(rsk_inverse(p, t), rsk_inverse(q, t)) for t in basis
                } | {
                    table.mu_sym(rsk_inverse(t, p), rsk_inverse(t, q)) for t in basis
                }
                assert len(values) == 1
                assert values.pop() == mu_tableaux(p, q, table)

    def test_mu_diagonal_vanishes(self):
        for p in enumerate_syt(Partition((2, 2))):
            assert mu_tableaux(p, p) == 0


class TestCellMatrices:
    def test_one_dimensional_modules(self):
        row = cell_generator_matrix(Partition((4,)), 2)
        assert row.matrix == ((1,),)
        col = cell_generator_matrix(Partition((1, 1, 1, 1)), 2)
        assert col.matrix == ((-1,),)

    def test_22_matrix_against_direct_formula(self):
        lam = Partition((2, 2))
        basis = enumerate_syt(lam)
        from cyclosieve.tableaux import descent_set

        for i in (1, 2, 3):
            m = cell_generator_matrix(lam, i).matrix
            for col, t in enumerate(basis):
                if i in descent_set(t):
                    assert m[col][col] == -1
                    assert all(m[r][col] == 0 for r in range(len(basis)) if r != col)
                else:
                    assert m[col][col] == 1

    def test_involutions_and_braid_relations(self):
        for size in range(2, 7):
            for lam in all_partitions_up_to(size):
                if lam.size != size:
                    continue
                dim = len(enumerate_syt(lam))
                ident = _identity_matrix(dim)
                mats = {i: cell_generator_matrix(lam, i).matrix for i in range(1, size)}
                for i, m in mats.items():
                    assert _mat_mul(m, m) == ident, (lam, i)
                for i in range(1, size):
                    for j in range(i + 1, size):
                        a, b = mats[i], mats[j]
                        if j - i > 1:
                            assert _mat_mul(a, b) == _mat_mul(b, a), (lam, i, j)
                        else:
                            assert _mat_mul(_mat_mul(a, b), a) == _mat_mul(
                                _mat_mul(b, a), b
                            ), (lam, i, j)

    def test_long_element_is_signed_evacuation_matrix(self):
        """The longest element acts as evacuation up to one global sign,
        on arbitrary shapes."""
        for lam in [Partition(s) for s in [(2, 2), (3, 1), (2, 1), (3, 2), (2, 2, 1), (4, 2)]]:
            n = lam.size
            basis = enumerate_syt(lam)
            idx = {t: i for i, t in enumerate(basis)}
            rho = representation_matrix(lam, long_element(n))
            evac = [[0] * len(basis) for _ in basis]
            for t in basis:
                evac[idx[evacuate(t, n)]][idx[t]] = 1
            plus = tuple(tuple(r) for r in evac)
            minus = tuple(tuple(-x for x in r) for r in evac)
            assert rho in (plus, minus), lam


class TestPromotionIdentity:
    @pytest.mark.parametrize(
        "shape", [(1,), (2,), (1, 1), (3,), (1, 1, 1), (4,), (2, 2), (1, 1, 1, 1)]
    )
    def test_small_rectangles(self, shape):
        report = verify_promotion_identity(Partition(shape))
        assert report.ok
        assert report.sign == (-1) ** (len(shape) - 1)

    def test_222_sign_and_cycle_structure(self):
        report = verify_promotion_identity(Partition((2, 2, 2)))
        assert report.ok and report.sign == 1

    def test_non_rectangular_rejected(self):
        with pytest.raises(ValueError):
            verify_promotion_identity(Partition((2, 1)))


class TestMuInvariance:
    def test_holds_on_rectangles_and_near_rectangles(self):
        for shape in [(2, 2), (2, 1), (3, 2), (2, 2, 1), (3, 3), (2, 2, 2), (5,), (1, 1, 1, 1)]:
            assert mu_promotion_invariance(Partition(shape)).holds, shape

    def test_31_counterexample(self):
        report = mu_promotion_invariance(Partition((3, 1)))
        assert not report.holds

    def test_31_cycle_values(self):
        t1 = Tableau([(1, 2, 3), (4,)])
        t2 = promote(t1, 4)
        t3 = promote(t2, 4)
        assert promote(t3, 4) == t1
        cycle = [mu_tableaux(t1, t2), mu_tableaux(t2, t3), mu_tableaux(t3, t1)]
        assert sorted(cycle) == [0, 1, 1]

    def test_cross_orbit_constancy_222(self):
        """Coprime orbits (sizes 2 and 3) have constant mu across them."""
        lam = Partition((2, 2, 2))
        orbits = _promotion_orbits(lam)
        assert sorted(len(o) for o in orbits) == [2, 3]
        two = next(o for o in orbits if len(o) == 2)
        three = next(o for o in orbits if len(o) == 3)
        assert {mu_tableaux(p, q) for p in two for q in three} == {1}

    def test_cross_orbit_constancy_all_coprime_pairs(self):
        from math import gcd

        for lam in rectangles_up_to(6):
            orbits = _promotion_orbits(lam)
            for i, first in enumerate(orbits):
                for second in orbits[i + 1:]:
                    if gcd(len(first), len(second)) != 1:
                        continue
                    values = {mu_tableaux(p, q) for p in first for q in second}
                    assert len(values) == 1, (tuple(lam), len(first), len(second))

    def test_mu_preserved_by_corner_deletion(self):
        """Dropping the largest entry from a rectangular tableau (always the
        bottom-right corner) preserves mu, rectangles up to 6 boxes."""
        for lam in rectangles_up_to(6):
            if lam.size < 2:
                continue
            basis = enumerate_syt(lam)
            for a, p in enumerate(basis):
                for q in basis[a + 1:]:
                    assert mu_tableaux(p, q) == mu_tableaux(
                        _delete_corner(p), _delete_corner(q)
                    ), (tuple(lam), p, q)


class TestImmanants:
    def test_identity_gives_determinant(self):
        ones = Composition((1, 1, 1))
        det = kl_immanant(Permutation((1, 2, 3)), ones, ones)
        assert len(det.terms) == 6
        for mono, coeff in det.terms.items():
            w = Permutation(tuple(b for _, b in sorted(mono)))
            assert coeff == (-1) ** w.length()

    def test_repeated_row_displays(self):
        """The repeated-row matrix has row pattern (1,1,2); two of the four
        substituted permutation monomials coincide and cancel."""
        rows = Composition((2, 1))
        cols = Composition((1, 1, 1))
        imm213 = kl_immanant(Permutation((2, 1, 3)), rows, cols)
        assert imm213.terms == {
            ((1, 1), (1, 2), (2, 3)): 1,
            ((1, 1), (1, 3), (2, 2)): -1,
        }
        assert kl_immanant(Permutation((2, 3, 1)), rows, cols).is_zero()

    def test_rank_four_expansions(self):
        ones = Composition((1, 1, 1, 1))
        imm3412 = kl_immanant(Permutation((3, 4, 1, 2)), ones, ones)
        expected = {
            ((1, 3), (2, 4), (3, 1), (4, 2)): 1,
            ((1, 4), (2, 3), (3, 1), (4, 2)): -1,
            ((1, 3), (2, 4), (3, 2), (4, 1)): -1,
            ((1, 4), (2, 3), (3, 2), (4, 1)): 1,
        }
        assert imm3412.terms == {tuple(sorted(k)): v for k, v in expected.items()}
        imm3142 = kl_immanant(Permutation((3, 1, 4, 2)), ones, ones)
        expected = {
            ((1, 3), (2, 1), (3, 4), (4, 2)): 1,
            ((1, 3), (2, 2), (3, 4), (4, 1)): -1,
            ((1, 3), (2, 4), (3, 1), (4, 2)): -1,
            ((1, 4), (2, 1), (3, 3), (4, 2)): -1,
            ((1, 4), (2, 2), (3, 3), (4, 1)): 1,
            ((1, 3), (2, 4), (3, 2), (4, 1)): 1,
            ((1, 4), (2, 3), (3, 1), (4, 2)): 1,
            ((1, 4), (2, 3), (3, 2), (4, 1)): -1,
        }
        assert imm3142.terms == {tuple(sorted(k)): v for k, v in expected.items()}

    @pytest.mark.parametrize("n", [3, 4])
    def test_row_swap_action(self, n):
        """Row swaps act by the descent formula, with position-side simple
        reflections and the directed mu; pinned by this exhaustive check."""
        table = kl_table(n)
        ones = Composition((1,) * n)
        imms = {
            tuple(w): kl_immanant(w, ones, ones, table) for w in all_perms(n)
        }
        for w in all_perms(n):
            for i in range(1, n):
                lhs = imms[tuple(w)].swap_rows(i)
                sw = w * simple(i, n)
                if sw.length() > w.length():
                    rhs = imms[tuple(w)].scale(-1)
                else:
                    rhs = imms[tuple(w)] + imms[tuple(sw)]
                    for z in all_perms(n):
                        if z == w or (z * simple(i, n)).length() <= z.length():
                            continue
                        m = table.mu(w, z)
                        if m:
                            rhs = rhs + imms[tuple(z)].scale(m)
                assert lhs == rhs, (w, i)


class TestVanishingCriterion:
    def test_n3_matches_semistandardizability(self):
        report = vanishing_criterion_check(3)
        assert report.holds and report.cases_checked == 24

    def test_n4_exhaustive(self):
        report = vanishing_criterion_check(4)
        assert report.holds and report.cases_checked == 192

    def test_all_ones_never_vanishes(self):
        table = kl_table(4)
        ones = Composition((1, 1, 1, 1))
        for w in all_perms(4):
            assert not kl_immanant(w, ones, ones, table).is_zero()

    def test_recording_tableaux_of_213_231(self):
        from cyclosieve.jeudetaquin import is_semistandardizable

        q213 = rsk(Permutation((2, 1, 3)))[1]
        q231 = rsk(Permutation((2, 3, 1)))[1]
        assert is_semistandardizable(q213, Composition((2, 1)))
        assert not is_semistandardizable(q231, Composition((2, 1)))


class TestDump:
    def test_json_triples_shape(self):
        table = kl_table(3)
        triples = table.dump_triples()
        assert all(set(t) == {"u", "v", "coeffs"} for t in triples)
        assert all(t["coeffs"] == [1] for t in triples)
