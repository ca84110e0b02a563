import pytest

from circulant_iso.families import (corollary_2n, family_42, family_43,
                                    necessary_conditions_48,
                                    shift_identities_check, type2_family_check)
from circulant_iso.type1 import type1_orbit
from circulant_iso.type2 import ThetaParams, classify_pair, theta_set, v_set


class TestFamily42:
    def test_order_16(self):
        pair = family_42(2, 1)
        assert pair.order == 16
        assert pair.r_jumps == (1, 2, 7) and pair.s_jumps == (2, 3, 5)
        assert pair.expected_t == 2 and not pair.degenerate

    def test_mirror_parameters(self):
        pair = family_42(2, 2)
        assert pair.r_jumps == (2, 3, 5) and pair.s_jumps == (1, 2, 7)

    def test_degenerate(self):
        pair = family_42(3, 2)
        assert pair.degenerate
        assert pair.r_jumps == pair.s_jumps == (2, 3, 9)

    def test_bounds(self):
        with pytest.raises(ValueError):
            family_42(1, 1)
        with pytest.raises(ValueError):
            family_42(2, 3)

    @pytest.mark.parametrize("n", range(2, 8))
    def test_identity_and_not_type1(self, n):
        for s in range(1, n + 1):
            if n == 2 * s - 1:
                continue
            pair = family_42(n, s)
            assert theta_set(ThetaParams(pair.order, 2, n), pair.r_jumps) == pair.s_jumps
            assert type2_family_check(pair)


class TestFamily43:
    def test_problem_24_type2(self):
        pair = family_43(3, 1, [1, 4])
        assert pair.order == 24
        assert pair.r_jumps == (1, 2, 8, 11) and pair.s_jumps == (2, 5, 7, 8)
        verdict = classify_pair(pair.order, pair.r_jumps, pair.s_jumps)
        assert (verdict.kind, verdict.m) == ("type2", 2)

    def test_problem_16_type2(self):
        pair = family_43(2, 1, [1, 2, 4])
        assert pair.r_jumps == (1, 2, 4, 7, 8) and pair.s_jumps == (2, 3, 4, 5, 8)

    def test_problem_24_type1(self):
        pair = family_43(3, 1, [1, 5])
        assert pair.r_jumps == (1, 2, 10, 11) and pair.s_jumps == (2, 5, 7, 10)
        verdict = classify_pair(pair.order, pair.r_jumps, pair.s_jumps)
        assert (verdict.kind, verdict.x) == ("type1", 5)

    def test_never_non_isomorphic(self):
        for n, s, p in ((2, 1, [1]), (2, 2, [1, 2]), (3, 1, [1, 4]), (3, 1, [1, 5]),
                        (4, 2, [1]), (5, 1, [1, 3]), (3, 3, [2, 3])):
            pair = family_43(n, s, p)
            verdict = classify_pair(pair.order, pair.r_jumps, pair.s_jumps)
            assert verdict.kind in ("type1", "type2"), (n, s, p, verdict)

    def test_validation(self):
        with pytest.raises(ValueError, match="gcd"):
            family_43(3, 1, [2, 4])
        with pytest.raises(ValueError, match="coprime"):
            family_43(3, 1, [3, 8])
        with pytest.raises(ValueError, match="degenerate"):
            family_43(3, 2, [1])
        with pytest.raises(ValueError):
            family_43(3, 1, [])


class TestCorollaryPowersOfTwo:
    def test_order_16(self):
        pair = corollary_2n(4, 1)
        assert pair.order == 16
        assert pair.r_jumps == (1, 2, 7) and pair.s_jumps == (2, 3, 5)

    def test_order_32(self):
        pair = corollary_2n(5, 3)
        assert pair.order == 32
        assert pair.r_jumps == (2, 5, 11) and pair.s_jumps == (2, 3, 13)
        assert theta_set(ThetaParams(32, 2, 4), pair.r_jumps) == pair.s_jumps

    def test_mirror(self):
        pair = corollary_2n(4, 2)
        assert pair.r_jumps == (2, 3, 5) and pair.s_jumps == (1, 2, 7)

    def test_bounds(self):
        with pytest.raises(ValueError):
            corollary_2n(3, 1)
        with pytest.raises(ValueError):
            corollary_2n(4, 3)

    def test_never_degenerate(self):
        for npow in (4, 5, 6):
            for s in range(1, 2 ** (npow - 3) + 1):
                assert not corollary_2n(npow, s).degenerate


class TestShiftIdentities:
    def test_base_family_at_zero(self):
        assert shift_identities_check(2, 1, [1], 0).ok

    def test_wider_family(self):
        assert shift_identities_check(3, 1, [1, 4], 5).ok

    @pytest.mark.parametrize("t", range(12))
    def test_all_shifts_order_24(self, t):
        assert shift_identities_check(3, 1, [1, 4], t).ok

    def test_t_range(self):
        with pytest.raises(ValueError):
            shift_identities_check(2, 1, [1], 8)


class TestNecessaryConditions:
    def test_hits_at_16(self):
        report = necessary_conditions_48(16, (2, 1, 7))
        assert report.all_hold
        assert report.t_candidates == (2, 6)
        assert report.allows(2) and report.allows(6) and not report.allows(3)

    def test_sum_violation_means_no_hits(self):
        report = necessary_conditions_48(16, (2, 1, 3))
        assert not report.odd_sum_is_half and not report.all_hold
        for t, image in v_set(16, 2, (1, 2, 3)):
            if t == 0 or image is None:
                continue
            assert image in type1_orbit(16, (1, 2, 3))

    def test_order_24_candidates(self):
        report = necessary_conditions_48(24, (2, 5, 7))
        assert report.order_div_8 and report.odd_sum_is_half and report.odd_not_n8
        assert report.t_candidates == (3, 9)
        image = theta_set(ThetaParams(24, 2, 3), (2, 5, 7))
        assert image == (1, 2, 11)
        assert image not in type1_orbit(24, (2, 5, 7))

    def test_shape_violation(self):
        with pytest.raises(ValueError):
            necessary_conditions_48(16, (1, 3, 5))
        with pytest.raises(ValueError):
            necessary_conditions_48(16, (2, 4, 6))
