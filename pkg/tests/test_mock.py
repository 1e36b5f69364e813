"""The mock Eisenstein family: route agreement, published coefficient
tables, traces, the moment/trace identities, integrality, leading
pattern."""

from fractions import Fraction as F
from math import factorial

import pytest

from mockeis.bernoulli import bernoulli
from mockeis.errors import MissingMemberError
from mockeis.functions import divisor_like_sum, rank_moment, theta_series
from mockeis.mock import (
    MockFamily,
    crank_trace_residuals,
    eisenstein_members,
    integrality_check,
    leading_pattern_check,
    mock_eisenstein_family,
    partition_trace,
    phi_weight,
    psi_weight,
    trace_identity_residuals,
)
from mockeis.qseries import QSeries, euler_product, partition_series
from mockeis.wjets import build_jet, jet_exp, rational_jet, two_sinh_half_over_w

# Published low-order coefficients of f_{k,j}; full prefixes, constants
# included.  (The (4,6) row's q^8 entry appears with a misprinted
# exponent in its source table; the value is confirmed by the recursion.)
KNOWN_TABLES = {
    (3, 2): [F(-1, 24), 0, 0, 1, 3, 5, 7, 9, 11],
    (3, 4): [F(1, 240), 0, 0, 1, 15, 65, 169, 333, 557],
    (3, 6): [F(-1, 504), 0, 0, 1, 63, 665, 3337, 10989, 27581],
    (3, 8): [F(1, 480), 0, 0, 1, 255, 6305, 58849, 319293, 1216037],
    (4, 2): [F(-1, 24), 0, 0, 0, 1, 3, 5, 7, 9, 11],
    (4, 4): [F(1, 240), 0, 0, 0, 1, 15, 65, 175, 363, 635],
    (4, 6): [F(-1, 504), 0, 0, 0, 1, 63, 665, 3367, 11499, 30491],
    (4, 8): [F(1, 480), 0, 0, 0, 1, 255, 6305, 58975, 324963, 1283195],
    (5, 2): [F(-1, 24), 0, 0, 0, 0, 1, 3, 5, 7, 9, 11],
    (5, 4): [F(1, 240), 0, 0, 0, 0, 1, 15, 65, 175, 369, 665],
    (5, 6): [F(-1, 504), 0, 0, 0, 0, 1, 63, 665, 3367, 11529, 31001],
    (5, 8): [F(1, 480), 0, 0, 0, 0, 1, 255, 6305, 58975, 325089, 1288865],
}


class TestFamilyTables:
    @pytest.mark.parametrize("k,j", sorted(KNOWN_TABLES))
    def test_known_coefficients(self, k, j):
        expected = KNOWN_TABLES[(k, j)]
        fam = mock_eisenstein_family(k, 8, len(expected) - 1)
        assert fam.member(j) == QSeries(expected)

    def test_odd_members_vanish(self):
        fam = mock_eisenstein_family(3, 8, 10)
        for j in (1, 3, 5, 7):
            assert fam.member(j).is_zero()

    def test_constant_terms(self):
        fam = mock_eisenstein_family(4, 12, 6)
        for j in range(2, 13, 2):
            assert fam.member(j).coeff(0) == -bernoulli(j) / (2 * j)

    def test_missing_member(self):
        fam = mock_eisenstein_family(3, 6, 8)
        with pytest.raises(MissingMemberError):
            fam.member(8)
        with pytest.raises(MissingMemberError):
            fam.member(0)

    def test_k2_requires_flag(self):
        with pytest.raises(ValueError):
            mock_eisenstein_family(2, 4, 8)
        fam = mock_eisenstein_family(2, 4, 8, allow_k2=True)
        assert fam.extrapolated
        # with k=2 the leading pattern starts at q^2
        assert fam.member(2).coeff(2) == 1


class TestRoutes:
    @pytest.mark.parametrize("k", (3, 4, 5))
    def test_three_routes_agree(self, k):
        families = [
            mock_eisenstein_family(k, 10, 20, route)
            for route in ("recursionA", "recursionB", "logRoute")
        ]
        for j in range(2, 11, 2):
            a, b, c = (fam.member(j) for fam in families)
            assert a == b == c

    def test_unknown_route(self):
        with pytest.raises(ValueError):
            mock_eisenstein_family(3, 4, 8, "newton")


class TestTraces:
    def test_weights(self):
        assert phi_weight(()) == 1
        assert phi_weight((2,)) == 1
        assert phi_weight((1, 1)) == 2
        assert psi_weight((2,)) == -1
        assert psi_weight((1, 1)) == 2

    def test_trace_zero_is_one(self):
        fam = mock_eisenstein_family(3, 4, 8)
        assert partition_trace(0, fam.member, 8) == QSeries.one(8)

    def test_trace_one_vanishes(self):
        fam = mock_eisenstein_family(3, 4, 8)
        assert partition_trace(1, fam.member, 8).is_zero()

    def test_trace_two_is_first_member(self):
        fam = mock_eisenstein_family(3, 4, 8)
        assert partition_trace(2, fam.member, 8) == fam.member(2)

    def test_trace_beyond_family_range(self):
        fam = mock_eisenstein_family(3, 4, 8)
        with pytest.raises(MissingMemberError):
            partition_trace(6, fam.member, 8)

    @pytest.mark.parametrize("weight,scale", [("phi", 2), ("psi", -2)])
    def test_cycle_index_consistency(self, weight, scale):
        # sum_n Tr_n(weight, f) w^n = exp(scale * sum_j f_j w^j / j!)
        order, top = 30, 10
        fam = mock_eisenstein_family(3, top, order)
        expo = jet_exp(
            build_jet(
                {
                    j: fam.member(j) * F(scale, factorial(j))
                    for j in range(2, top + 1, 2)
                },
                2,
                top,
                order,
            )
        )
        for n in range(top + 1):
            assert partition_trace(n, fam.member, order, weight) == expo.coeff(n)


class TestTraceIdentity:
    def test_residuals_vanish(self):
        residuals = trace_identity_residuals(3, 6, 15)
        assert all(r.is_zero() for r in residuals)

    def test_w2_coefficient_relation(self):
        # The w^2 layer states R_{k,2}/2 = (f_{k,2} + 1/24)/(q)_inf.
        k, order = 4, 18
        fam = mock_eisenstein_family(k, 2, order)
        lhs = rank_moment(k, 2, order, "direct").series / 2
        rhs = (fam.member(2) + F(1, 24)) * partition_series(order)
        assert lhs == rhs

    def test_uncorrected_identity_fails_at_w0(self):
        # Dropping the theta shift breaks the w^0 layer at q^{k-1}.
        k, order = 3, 10
        zeroth = rank_moment(k, 0, order, "direct").series
        assert zeroth != partition_series(order)
        assert zeroth.coeff(k - 1) != partition_series(order).coeff(k - 1)

    def test_crank_analogue(self):
        residuals = crank_trace_residuals(6, 12)
        assert all(r.is_zero() for r in residuals)

    @pytest.mark.parametrize("k", (3, 4, 5))
    def test_moment_g_sum_bridge(self, k):
        # (w/(2 sinh(w/2))) [ (q)_inf sum_j R_{k,j} w^j/j! + theta_{1,2k-1} ]
        #   = 1 + sum_j (j g_{2,2k-1,j}/2^{j-2}) w^j/j!,
        # the identity the log route reads its members from.
        top, order = 10, 30
        e = euler_product(order)
        entries = {
            j: (rank_moment(k, j, order, "direct").series * e) / factorial(j)
            for j in range(top + 1)
        }
        entries[0] = entries[0] + theta_series(1, 2 * k - 1, order)
        lhs = rational_jet(two_sinh_half_over_w(top).inverse(), order) * build_jet(
            entries, 0, top, order
        )
        assert lhs.coeff(0) == QSeries.one(order)
        for j in range(1, top + 1):
            if j % 2:
                assert lhs.coeff(j).is_zero()
            else:
                g = divisor_like_sum(2, 2 * k - 1, j, order)
                assert lhs.coeff(j) == g * F(j, 2 ** (j - 2) * factorial(j))

    def test_eisenstein_members_accessor(self):
        members = eisenstein_members(8)
        assert members(3).is_zero()
        assert members(2).coeff(0) == F(-1, 24)
        with pytest.raises(MissingMemberError):
            members(0)


class TestIntegrality:
    def test_family_passes(self):
        fam = mock_eisenstein_family(3, 8, 25)
        assert integrality_check(fam).ok

    def test_trivial_families_pass(self):
        # vacuous: nothing to check
        empty = MockFamily(
            k=3, max_j=0, order=6, route="recursionA", extrapolated=False,
            members={},
        )
        assert integrality_check(empty).ok
        # zero in the shifted sense: members carry only their forced
        # constants, so every shifted coefficient is 0
        constants_only = MockFamily(
            k=3, max_j=4, order=6, route="recursionA", extrapolated=False,
            members={
                2: QSeries.constant(-bernoulli(2) / 4, 6),
                4: QSeries.constant(-bernoulli(4) / 8, 6),
            },
        )
        assert integrality_check(constants_only).ok

    def test_perturbed_family_fails(self):
        base = mock_eisenstein_family(3, 4, 10)
        members = dict(base.members)
        members[4] = members[4] + QSeries.monomial(F(1, 2), 3, 10)
        bad = MockFamily(
            k=3, max_j=4, order=10, route="recursionA", extrapolated=False,
            members=members,
        )
        report = integrality_check(bad)
        assert not report.ok
        assert (report.j, report.n) == (4, 3)
        assert report.value == F(3, 2)


class TestLeadingPattern:
    def test_k3_j4(self):
        fam = mock_eisenstein_family(3, 4, 6)
        assert [fam.member(4).coeff(3 + i) for i in range(3)] == [1, 15, 65]
        assert leading_pattern_check(3, 4, 6, fam).ok

    def test_k5_j2(self):
        fam = mock_eisenstein_family(5, 2, 10)
        assert [fam.member(2).coeff(5 + i) for i in range(5)] == [1, 3, 5, 7, 9]
        assert leading_pattern_check(5, 2, 10, fam).ok

    def test_k4_j8(self):
        fam = mock_eisenstein_family(4, 8, 8)
        assert [fam.member(8).coeff(4 + i) for i in range(4)] == [
            1, 255, 6305, 58975,
        ]
        assert leading_pattern_check(4, 8, 8, fam).ok

    def test_detects_wrong_coefficient(self):
        base = mock_eisenstein_family(3, 4, 6)
        members = dict(base.members)
        members[4] = members[4] + QSeries.monomial(1, 4, 6)
        bad = MockFamily(
            k=3, max_j=4, order=6, route="recursionA", extrapolated=False,
            members=members,
        )
        report = leading_pattern_check(3, 4, 6, bad)
        assert not report.ok
        assert "q^4" in report.detail

    def test_order_precondition(self):
        with pytest.raises(ValueError):
            leading_pattern_check(3, 4, 4)
