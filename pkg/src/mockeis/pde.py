"""The level-5 Appell jet, the heat-type operators, and the two
differential-equation residuals.

Coordinates: w = 2*pi*i*z throughout, so that

    zeta = e^w,   1/(2i sin(pi z)) = 1/(2 sinh(w/2)),   qD = q d/dq,

and the heat-type operator at level 5 becomes

    H_j = 10 qD + d^2/dw^2 + 10 (2j - 1) G_2.

The level-5 Appell function, written through the k = 3 mock Eisenstein
family, is the jet

    A_5 = -(1/w) exp(2 sum_j f_{3,j} w^j/j!)
          + (1/(2 sinh(w/2))) theta_{1,5}
          - (e^w/(2 sinh(w/2))) theta_{1,5}
          - e^{3w/2} theta_{3,5},

and it satisfies (H_3 H_1 - (220/3) G_4) A_5 = -24 w^{-5} exp(10 sum_k G_k w^k/k!);
the right-hand side's -24 w^{-5} is the w-form of (3i)/(4 pi^5 z^5).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import ConfigError
from .functions import eisenstein, theta_series
from .mock import MockFamily, mock_eisenstein_family
from .qseries import QSeries
from .wjets import WJet, build_jet, exp_cw, jet_exp, reciprocal_two_sinh_half


def appell5_jet(max_deg: int, q_order: int, family: MockFamily | None = None) -> WJet:
    """The level-5 Appell jet on the certified window [-1, max_deg]."""
    if max_deg < 1 or q_order < 1:
        raise ValueError("max_deg and q_order must be >= 1")
    need_j = max_deg + 1 if (max_deg + 1) % 2 == 0 else max_deg + 2
    if family is None:
        family = mock_eisenstein_family(3, need_j, q_order)
    elif family.k != 3 or family.max_j < max_deg + 1 or family.order < q_order:
        raise ValueError("family must cover k=3, members to max_deg+1, and the q-order")

    exponent = build_jet(
        {
            j: family.member(j) * Fraction(2, factorial(j))
            for j in range(2, max_deg + 2, 2)
        },
        2,
        max_deg + 1,
        q_order,
    )
    th15 = theta_series(1, 5, q_order)
    th35 = theta_series(3, 5, q_order)
    inv_sinh = reciprocal_two_sinh_half(max_deg + 1, q_order)

    term1 = -jet_exp(exponent).shift(-1)
    term2 = inv_sinh.scale(th15)
    term3 = -(exp_cw(1, max_deg + 1, q_order) * inv_sinh).scale(th15)
    term4 = -exp_cw(Fraction(3, 2), max_deg, q_order).scale(th35)
    return term1 + term2 + term3 + term4


def heat_operator(j: int, jet: WJet) -> WJet:
    """H_j = 10 qD + d^2/dw^2 + 10 (2j - 1) G_2 on a jet.

    The second w-derivative shrinks the certified window to
    [min-2, max-2]; below the input window the other two summands are
    known zero, so nothing is lost at the bottom.
    """
    if j < 1 or j % 2 == 0:
        raise ValueError("heat operator index must be odd and positive")
    g2 = eisenstein(2, jet.q_order)
    return (
        jet.qderiv().scale(10)
        + jet.wderiv().wderiv()
        + jet.scale(g2 * (10 * (2 * j - 1)))
    )


def _eisenstein_exponential(scale: int, max_deg: int, q_order: int) -> WJet:
    """exp(scale * sum_{k>=2} G_k w^k/k!) on [0, max_deg]."""
    entries = {
        k: eisenstein(k, q_order) * Fraction(scale, factorial(k))
        for k in range(2, max_deg + 1, 2)
    }
    return jet_exp(build_jet(entries, 2, max_deg, q_order))


def pde_residual(max_deg: int, q_order: int) -> WJet:
    """(H_3 H_1 - (220/3) G_4) A_5 + 24 w^{-5} exp(10 sum G_k w^k/k!).

    Zero on its whole certified window [-5, max_deg]; the w^{-5}
    coefficient alone is the leading Eisenstein identity, and each
    higher degree encodes one coefficient equation of the closure
    argument.
    """
    a5 = appell5_jet(max_deg + 4, q_order)
    g4 = eisenstein(4, q_order)
    lhs = heat_operator(3, heat_operator(1, a5)) - a5.scale(g4 * Fraction(220, 3))
    rhs = _eisenstein_exponential(10, max_deg + 5, q_order).shift(-5).scale(-24)
    return lhs - rhs


_THETA_SHIFTS = {1: Fraction(1, 40), 3: Fraction(9, 40)}


def theta_ode_residual(a: int, q_order: int) -> QSeries:
    """Residual of the second-order theta differential equation.

    With alpha = 1/40 for theta_{1,5} and 9/40 for theta_{3,5} (the
    fractional q-power conjugated away):

        (qD + alpha + 5 G_2)(qD + alpha + G_2) theta - (11/15) G_4 theta.
    """
    try:
        alpha = _THETA_SHIFTS[a]
    except KeyError:
        raise ConfigError("theta ODE is implemented for a in {1, 3} at level 5") from None
    theta = theta_series(a, 5, q_order)
    g2 = eisenstein(2, q_order)
    g4 = eisenstein(4, q_order)
    inner = theta.qderiv() + theta * alpha + g2 * theta
    outer = inner.qderiv() + inner * alpha + (g2 * inner) * 5
    return outer - (g4 * theta) * Fraction(11, 15)
