"""Universal presentations: sign patterns, character solvers, groups."""

import math

import pytest
from hypothesis import given, strategies as st

from kleintwist.cocycle import Cocycle2, klein_bicharacter
from kleintwist.errors import (InfiniteCharacterSpace, PatternMismatch,
                               SignMismatch)
from kleintwist.perm import isomorphism_type, symmetric_group
from kleintwist.present import (KLEIN_PRODUCT, Bidegree, IncSeq, O2, O2Minus,
                                SO3, SO3Minus, SnPlus, character_group_of,
                                commutation_sign,
                                determinant_to_permanent_signs,
                                parse_presentation, relation_sign_table,
                                solve_characters)


class TestBidegree:
    def test_klein_product_is_xor(self):
        for i in range(4):
            for j in range(4):
                assert KLEIN_PRODUCT[i][j] == i ^ j

    def test_mul_and_identity(self):
        d = Bidegree(1, 2) * Bidegree(3, 2)
        assert (d.left, d.right) == (2, 0)
        assert Bidegree.identity() == Bidegree(0, 0)

    def test_range_guard(self):
        with pytest.raises(ValueError):
            Bidegree(4, 0)

    def test_commutation_sign_symmetry(self):
        sigma = klein_bicharacter()
        for a in (Bidegree(1, 2), Bidegree(3, 3), Bidegree(0, 1)):
            for b in (Bidegree(2, 2), Bidegree(1, 0)):
                assert commutation_sign(sigma, a, b) == commutation_sign(sigma, b, a)
                assert commutation_sign(sigma, a, b) in (1, -1)


class TestSignTable:
    def test_pattern(self):
        table = relation_sign_table(klein_bicharacter())
        assert len(table) == 81
        for ((i, j), (k, l)), v in table.items():
            expected = -1 if (i == k) != (j == l) else 1
            assert v == expected

    def test_minus_count(self):
        table = relation_sign_table(klein_bicharacter())
        assert sum(1 for v in table.values() if v == -1) == 36

    def test_tampered_cocycle_detected(self):
        sigma = klein_bicharacter()
        rows = [list(r) for r in sigma.table]
        rows[2][1] = -rows[2][1]
        tampered = Cocycle2.build(sigma.carrier, rows, rows, sigma.star_corrector)
        with pytest.raises(PatternMismatch):
            relation_sign_table(tampered)


class TestDetToPerm:
    def test_sizes_two_and_three(self):
        for size in (2, 3):
            signs = determinant_to_permanent_signs(size)
            assert len(signs) == math.factorial(size)
            for tau, s in signs.items():
                assert s * tau.sign() == 1

    def test_size_guard(self):
        with pytest.raises(ValueError):
            determinant_to_permanent_signs(4)

    def test_tampered_cocycle_detected(self):
        sigma = klein_bicharacter()
        rows = [list(r) for r in sigma.table]
        rows[1][1] = -rows[1][1]
        tampered = Cocycle2.build(sigma.carrier, rows, rows, sigma.star_corrector)
        with pytest.raises(SignMismatch):
            determinant_to_permanent_signs(3, tampered)


class TestSpecs:
    def test_names_roundtrip(self):
        for spec in (O2Minus(), SO3Minus(), SnPlus(4), IncSeq(2, 4), O2(), SO3()):
            assert parse_presentation(spec.name) == spec

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            parse_presentation("so5minus")


SOLS_O2 = solve_characters(O2Minus())
SOLS_SO3 = solve_characters(SO3Minus())


class TestSolutions:
    def test_o2minus_count_and_group(self):
        assert len(SOLS_O2) == 8
        g = character_group_of(O2Minus())
        assert g.order == 8
        assert isomorphism_type(g).name == "D4"

    def test_so3minus_count_and_group(self):
        assert len(SOLS_SO3) == 24
        g = character_group_of(SO3Minus())
        assert g.order == 24
        assert isomorphism_type(g).name == "S4"

    def test_so3minus_matrices_are_special_signed_perms(self):
        for sol in SOLS_SO3:
            m = sol.matrix
            prod = 1
            for row in m:
                nonzero = [v for v in row if v]
                assert len(nonzero) == 1 and nonzero[0] in (1, -1)
                prod *= nonzero[0]
            assert prod == 1

    def test_snplus_counts(self):
        for n in (3, 4, 5):
            assert len(solve_characters(SnPlus(n))) == math.factorial(n)

    def test_snplus_group(self):
        g = character_group_of(SnPlus(4))
        assert g.order == 24
        assert isomorphism_type(g).name == "S4"

    def test_grid_cap(self):
        with pytest.raises(ValueError):
            solve_characters(SnPlus(6))

    def test_incseq_solutions(self):
        sols = solve_characters(IncSeq(2, 4))
        assert len(sols) == 6
        for sol in sols:
            supports = [next(i for i in range(1, 5) if sol[i, j]) for j in (1, 2)]
            assert supports[0] < supports[1]

    def test_incseq_has_no_character_group(self):
        with pytest.raises(ValueError, match="rectangular"):
            character_group_of(IncSeq(2, 4))

    def test_continuous_presentations_refused(self):
        with pytest.raises(InfiniteCharacterSpace):
            solve_characters(O2())
        with pytest.raises(InfiniteCharacterSpace):
            solve_characters(SO3())

    def test_solution_indexing_is_one_based(self):
        sol = SOLS_O2[0]
        assert sol[1, 1] == sol.matrix[0][0]
        assert sol[2, 1] == sol.matrix[1][0]


_DIAG_SIGNS = [(a, b, c) for a in (1, -1) for b in (1, -1) for c in (1, -1)]


class TestInvariance:
    @given(st.sampled_from(SOLS_SO3), st.sampled_from(_DIAG_SIGNS))
    def test_symmetric_rescaling_preserves_solutions(self, sol, d):
        # conjugating by a diagonal sign matrix keeps every defining
        # property, so the solution set is stable under it
        m = sol.matrix
        rescaled = tuple(tuple(d[i] * m[i][j] * d[j] for j in range(3))
                         for i in range(3))
        assert rescaled in {s.matrix for s in SOLS_SO3}

    @given(st.sampled_from(SOLS_SO3), st.sampled_from(SOLS_SO3))
    def test_solutions_closed_under_product(self, a, b):
        prod = tuple(tuple(sum(a.matrix[i][t] * b.matrix[t][j] for t in range(3))
                           for j in range(3)) for i in range(3))
        assert prod in {s.matrix for s in SOLS_SO3}

    @given(st.sampled_from(SOLS_SO3))
    def test_rows_orthonormal(self, sol):
        m = sol.matrix
        for i in range(3):
            for j in range(3):
                dot = sum(m[i][t] * m[j][t] for t in range(3))
                assert dot == (1 if i == j else 0)
