import pytest

from ssquintic.poly import gcd, is_separable
from ssquintic.primes import primes_in_range
from ssquintic.quintic import (HURWITZ_PAIRS, CountResult, InvalidPair,
                               QuinticFamily, WrongFamily, WrongResidue,
                               count_z8, count_z10, fixed_type_is_superspecial,
                               g_poly_z8, g_poly_z10,
                               hurwitz_is_superspecial_via_table, hurwitz_st,
                               lambda_r_relation, special_lambda_roots_z10)

# (s, t) for each p mod 13 (rows 1..12) and pair in HURWITZ_PAIRS order
HURWITZ_ST_TABLE = {
    1: [(4, 1), (8, 2), (7, 5), (12, 3), (11, 6), (10, 9)],
    2: [(2, 7), (4, 1), (10, 9), (6, 8), (12, 3), (5, 11)],
    3: [(10, 9), (7, 5), (11, 6), (4, 1), (8, 2), (12, 3)],
    4: [(1, 10), (2, 7), (5, 11), (3, 4), (6, 8), (9, 12)],
    5: [(6, 8), (12, 3), (4, 1), (5, 11), (10, 9), (2, 7)],
    6: [(5, 11), (10, 9), (12, 3), (2, 7), (4, 1), (6, 8)],
    7: [(8, 2), (3, 4), (1, 10), (11, 6), (9, 12), (7, 5)],
    8: [(7, 5), (1, 10), (9, 12), (8, 2), (3, 4), (11, 6)],
    9: [(12, 3), (11, 6), (8, 2), (10, 9), (7, 5), (4, 1)],
    10: [(3, 4), (6, 8), (2, 7), (9, 12), (5, 11), (1, 10)],
    11: [(11, 6), (9, 12), (3, 4), (7, 5), (1, 10), (8, 2)],
    12: [(9, 12), (5, 11), (6, 8), (1, 10), (2, 7), (3, 4)],
}


class TestFixedTypes:
    def test_examples(self):
        assert fixed_type_is_superspecial(QuinticFamily.TYPE1_FERMAT, 19)
        assert fixed_type_is_superspecial(QuinticFamily.TYPE2_HURWITZ, 23)
        assert not fixed_type_is_superspecial(QuinticFamily.TYPE5_Z16, 17)
        assert fixed_type_is_superspecial(QuinticFamily.TYPE4_Z20, 19)
        assert not fixed_type_is_superspecial(QuinticFamily.TYPE1_FERMAT, 31)

    def test_wrong_family(self):
        with pytest.raises(WrongFamily):
            fixed_type_is_superspecial(QuinticFamily.TYPE6_Z10, 19)


class TestHurwitz:
    def test_full_table(self):
        for residue, row in HURWITZ_ST_TABLE.items():
            for pair, expected in zip(HURWITZ_PAIRS, row):
                assert hurwitz_st(residue, *pair) == expected

    def test_spec_examples(self):
        assert hurwitz_st(1, 0, 0) == (4, 1)
        assert hurwitz_st(4, 2, 0) == (9, 12)
        assert hurwitz_st(12, 1, 1) == (2, 7)

    def test_invalid_pair(self):
        with pytest.raises(InvalidPair):
            hurwitz_st(19, 2, 2)

    def test_table_path_agrees_with_congruence(self):
        for residue in range(1, 13):
            assert hurwitz_is_superspecial_via_table(residue) == \
                (residue in (4, 10, 12))


class TestZ10Poly:
    def test_wrong_residue(self):
        with pytest.raises(WrongResidue):
            g_poly_z10(17)

    @pytest.mark.parametrize("p", [19, 29, 59, 79, 89])
    def test_lemma_properties(self, p):
        g = g_poly_z10(p)
        assert g.degree == (3 * p - 7) // 10
        assert g.coefficient(0) == 1
        assert g.eval(1) != 0
        assert is_separable(g)

    def test_special_root_counts(self):
        # 2 special roots when p = 9 mod 20, 3 when p = 19 mod 20
        for p in (29, 89, 109):
            assert special_lambda_roots_z10(g_poly_z10(p), p) == 2
        for p in (19, 59, 79):
            assert special_lambda_roots_z10(g_poly_z10(p), p) == 3

    def test_minus_one_root_iff_19_mod_20(self):
        for p in (19, 59, 79):
            assert g_poly_z10(p).eval(p - 1) == 0
        for p in (29, 89, 109):
            assert g_poly_z10(p).eval(p - 1) != 0

    @pytest.mark.parametrize("p", [19, 29, 59, 79, 89, 109])
    def test_inverse_root_pairing(self, p):
        g = g_poly_z10(p)
        roots = [x for x in range(1, p) if g.eval(x) == 0]
        for x in roots:
            assert g.eval(pow(x, p - 2, p)) == 0


class TestZ10Count:
    def test_examples(self):
        assert count_z10(19).count == 1
        assert count_z10(29).count == 3
        assert count_z10(17).count == 0

    def test_dual_path_metadata(self):
        res = count_z10(29)
        assert res.method == "both_agree"
        assert res.deg_g == 8
        assert res.adjustments == 2
        assert count_z10(17).method == "closed_form"

    def test_dual_path_sweep(self):
        for p in primes_in_range(14, 300):
            res = count_z10(p)
            if p % 5 == 4:
                assert res.method == "both_agree"
                assert 2 * res.count + res.adjustments == res.deg_g


class TestZ8:
    def test_degree_examples(self):
        assert g_poly_z8(23).degree == 0
        assert g_poly_z8(31).degree == 3

    def test_count_examples(self):
        assert count_z8(23).count == 0
        assert count_z8(191).count == 3
        assert count_z8(751).count == 5

    def test_gcd_properties(self):
        for p in (17, 19, 23, 29, 31, 37, 41, 43, 47):
            g = g_poly_z8(p)
            assert g.eval(0) != 0 and g.eval(1) != 0
            assert g.is_zero or is_separable(g)

    def test_minus_one_adjustment(self):
        res = count_z8(31)  # 31 = 15 mod 16
        assert res.adjustments == 1
        assert g_poly_z8(31).eval(30) == 0
        assert count_z8(23).adjustments == 0

    @pytest.mark.parametrize("p", [31, 47, 71, 79, 103])
    def test_inverse_root_pairing(self, p):
        g = g_poly_z8(p)
        roots = [x for x in range(2, p - 1) if g.eval(x) == 0]
        for x in roots:
            assert g.eval(pow(x, p - 2, p)) == 0

    def test_first_polynomial_is_quotient_criterion(self):
        # the (1/2, ., .) entry of the derived criterion equals the
        # genus-2 quotient's single vanishing polynomial
        from fractions import Fraction as F

        from ssquintic.hypergeom import HGSpec, truncated_hg
        from ssquintic.superelliptic import FamilyParams, criterion_polynomials
        for p in (17, 19, 23, 29, 37, 41, 43, 47):
            if p % 4 == 1:
                h = truncated_hg(HGSpec(F(1, 2), F(1, 4), F(3, 4),
                                        (p - 1) // 4, p))
            else:
                h = truncated_hg(HGSpec(F(1, 2), F(3, 4), F(5, 4),
                                        (p - 3) // 4, p))
            derived = [truncated_hg(s) for _, s in
                       criterion_polynomials(FamilyParams(4, 2, p))
                       if s.a == F(1, 2)]
            assert derived and all(d == h for d in derived)


class TestLambdaRRelation:
    def test_r2_20_gives_special_quadratic(self):
        p = 29
        roots = lambda_r_relation(20, p)
        assert roots is not None
        for lam in roots:
            assert (lam * lam - 18 * lam + 1) % p == 0

    def test_r_zero_gives_minus_one(self):
        p = 19
        roots = lambda_r_relation(0, p)
        assert roots == (p - 1, p - 1)

    def test_roots_multiply_to_one(self):
        p = 43
        for r2 in range(p):
            roots = lambda_r_relation(r2, p)
            if roots is not None:
                assert roots[0] * roots[1] % p == 1

    def test_non_square_discriminant(self):
        # r^2 - 2 = 0 gives discriminant -4; pick p where -1 is not a QR
        assert lambda_r_relation(2, 19) is None
