import random

import pytest

from knotmeta.exactalg import (
    LB_ONE,
    LB_S,
    LB_S_INV,
    LB_U,
    LB_ZERO,
    Mat2,
    UniPoly,
    laurent_eval_s_to_i,
)
from knotmeta.knotdata import GroupWord, TwoBridge, all_two_bridge, relator_word
from knotmeta.riley import (
    RileyHolonomy,
    _content_normalize,
    _holonomy_at_i,
    _irem_monic,
    _power_x1x2_at_i,
    approx_real_roots,
    cross_check_counts,
    riley_polynomial,
    section_at_minus_one,
    verify_longitude_mod_phi,
    verify_relator_general_t,
    verify_relator_mod_phi,
    word_holonomy,
)


def tb(p, q):
    return TwoBridge(name=f"S({p},{q})", p=p, q=q)


def up(*ints):
    return UniPoly.from_ints(*ints)


class TestWordHolonomy:
    def test_empty_word_is_identity(self):
        got = word_holonomy(RileyHolonomy(), GroupWord(()))
        assert got == Mat2.identity(LB_ONE, LB_ZERO)

    def test_x1_x2_product(self):
        got = word_holonomy(RileyHolonomy(), GroupWord(((1, 1), (2, 1))))
        assert got == Mat2(
            LB_S * LB_S - LB_U,
            LB_S_INV * LB_S_INV,
            -LB_U,
            LB_S_INV * LB_S_INV,
        )

    def test_x1_x2_specializes_to_unit_matrix(self):
        got = word_holonomy(RileyHolonomy(), GroupWord(((1, 1), (2, 1))))
        # at s^2 = -1 this is [[-1-u, -1], [-u, -1]]
        assert laurent_eval_s_to_i(got.a) == up(-1, -1)
        assert laurent_eval_s_to_i(got.b) == up(-1)
        assert laurent_eval_s_to_i(got.c) == up(0, -1)
        assert laurent_eval_s_to_i(got.d) == up(-1)

    def test_random_word_times_inverse(self):
        rng = random.Random(13)
        H = RileyHolonomy()
        for _ in range(8):
            letters = tuple(
                (rng.choice((1, 2)), rng.choice((1, -1))) for _ in range(6)
            )
            w = GroupWord(letters)
            prod = word_holonomy(H, w) * word_holonomy(H, w.inverse())
            assert prod == Mat2.identity(LB_ONE, LB_ZERO)

    def test_determinant_one(self):
        H = RileyHolonomy()
        for K in all_two_bridge(9):
            rho_w = word_holonomy(H, relator_word(K))
            assert rho_w.det() == LB_ONE


class TestRileyPolynomial:
    def test_s31_at_minus_one(self):
        phi = laurent_eval_s_to_i(riley_polynomial(tb(3, 1)))
        assert phi == up(-3, -1)

    def test_s53_at_minus_one(self):
        phi = laurent_eval_s_to_i(riley_polynomial(tb(5, 3)))
        assert phi in (up(5, 5, 1), up(-5, -5, -1))

    def test_only_even_s_exponents(self):
        for K in all_two_bridge(11):
            assert riley_polynomial(K).s_exponents_all_even()


class TestSectionFastPath:
    def test_s31(self):
        sec = section_at_minus_one(tb(3, 1))
        assert sec.phi == up(3, 1)
        assert sec.roots_count == 1
        assert sec.squarefree

    def test_s53(self):
        sec = section_at_minus_one(tb(5, 3))
        assert sec.phi == up(5, 5, 1)
        assert sec.roots_count == 2

    def test_degrees(self):
        for K in all_two_bridge(21, include_negative_q=True):
            sec = section_at_minus_one(K)
            assert sec.phi.degree == (K.p - 1) // 2
            assert sec.w11.degree == (K.p - 1) // 2
            assert sec.w12.degree == (K.p - 3) // 2

    def test_agrees_with_laurent_route(self):
        # dual-route check: integer fast path vs full Laurent specialization
        for K in all_two_bridge(13, include_negative_q=True):
            sec = section_at_minus_one(K)
            lau = laurent_eval_s_to_i(riley_polynomial(K))
            lead = lau.lead
            normalized = lau * lead.inv() if lead.re < 0 else lau
            assert sec.phi == normalized

    def test_power_form_matches_letter_product(self):
        for K in all_two_bridge(15):
            k, P = _holonomy_at_i(relator_word(K))
            assert k % 2 == 0
            power = _power_x1x2_at_i((K.p - 1) // 2)
            sign = 1 if k == 0 else -1
            assert tuple(tuple(sign * x for x in e) for e in P) == power


class TestInternalHelpers:
    def test_irem_monic(self):
        # u^3 mod u^2+5u+5 = 20u + 25
        assert _irem_monic((0, 0, 0, 1), (5, 5, 1)) == (25, 20)

    def test_content_normalize(self):
        assert _content_normalize((-10, -15, -5)) == (2, 3, 1)
        assert _content_normalize(()) == ()

    def test_perturbed_phi_leaves_residue(self):
        # the relator identity P N1 = N2 P must fail mod phi + 1
        from knotmeta.riley import _iadd, _ineg, _ishift, _isub

        K = tb(5, 3)
        phi_bad = (6, 5, 1)
        _k, (A, B, C, D) = _holonomy_at_i(relator_word(K))
        lhs = (A, _ineg(_iadd(A, B)), C, _ineg(_iadd(C, D)))
        rhs = (A, B, _isub(_ineg(_ishift(A)), C), _isub(_ineg(_ishift(B)), D))
        residues = [_irem_monic(_isub(l, r), phi_bad) for l, r in zip(lhs, rhs)]
        assert any(r != () for r in residues)


class TestVerifyOps:
    def test_relator_s53(self):
        report = verify_relator_mod_phi(tb(5, 3))
        assert report.ok
        assert all(r.is_zero() for r in report.residues)

    def test_relator_sweep(self):
        for K in all_two_bridge(17, include_negative_q=True):
            assert verify_relator_mod_phi(K).ok, K.name

    def test_longitude_s53(self):
        report = verify_longitude_mod_phi(tb(5, 3))
        assert report.result == "id"
        assert report.trace_is_two
        assert report.ok

    def test_longitude_sweep(self):
        for K in all_two_bridge(15, include_negative_q=True):
            report = verify_longitude_mod_phi(K)
            assert report.result == "id", K.name
            assert report.trace_is_two

    def test_relator_general_t(self):
        for K in all_two_bridge(9):
            assert verify_relator_general_t(K).ok, K.name

    def test_report_serialization(self):
        d = verify_relator_mod_phi(tb(7, 3)).to_dict()
        assert d["ok"] is True
        assert len(d["residues"]) == 4


class TestCrossCheck:
    def test_s15_11(self):
        report = cross_check_counts(tb(15, 11))
        assert report.riley_root_count == 7
        assert report.half_p_minus_one == 7
        assert report.metabelian_count == 7
        assert report.ok

    def test_sweep(self):
        for K in all_two_bridge(21):
            assert cross_check_counts(K).ok, K.name


class TestApproxRealRoots:
    def test_linear(self):
        roots, pairs = approx_real_roots(up(3, 1))
        assert pairs == 0
        assert roots == [pytest.approx(-3.0)]

    def test_quadratic_golden(self):
        roots, pairs = approx_real_roots(up(5, 5, 1))
        assert pairs == 0
        assert roots == [
            pytest.approx((-5 - 5**0.5) / 2),
            pytest.approx((-5 + 5**0.5) / 2),
        ]

    def test_complex_pair(self):
        roots, pairs = approx_real_roots(up(1, 0, 1))
        assert roots == []
        assert pairs == 1

    def test_constant(self):
        assert approx_real_roots(up(7)) == ([], 0)

    def test_rejects_complex_coefficients(self):
        from knotmeta.exactalg import GaussRat

        with pytest.raises(ValueError):
            approx_real_roots(UniPoly((GaussRat(0, 1), GaussRat(1))))


class TestErrorPaths:
    def test_holonomy_unit_tracking(self):
        # rho(x1)^2 at t=-1 is i^2 * id = -id
        k, P = _holonomy_at_i(GroupWord(((1, 1), (1, 1))))
        assert k == 2
        assert P == ((1,), (), (), (1,))

    def test_inverse_letter_units(self):
        k, P = _holonomy_at_i(GroupWord(((2, 1), (2, -1))))
        assert k == 0
        assert P == ((1,), (), (), (1,))

    def test_bad_internal_phi_raises_nothing_silently(self):
        with pytest.raises(AssertionError):
            _irem_monic((1, 2, 3), (5, 5, 2))  # non-monic divisor refused
