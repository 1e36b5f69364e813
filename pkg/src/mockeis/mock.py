"""The mock Eisenstein series attached to k-rank moments.

For k >= 3 the family members f_{k,j} (even j; odd members vanish) are
defined through

    FG_k(zeta, q) + theta_{1,2k-1}/(q)_inf
        = sin(pi z)/(pi z (q)_inf) * exp(2 sum_j f_{k,j} (2 pi i z)^j / j!),

and are computed here by three independent routes, all phrased over the
divisor-like sums g_ell = g_{2,2k-1,ell}:

  * recursionA:
        f_n = n g_n / 2^{n-1}
              - sum_{l=2}^{n-1} binom(n-1, l-1) f_l (n-l) g_{n-l} / 2^{n-l-2}
  * recursionB:
        f_n = sum_{l=2}^{n} (l g_l / 2^{l-1}) ((n-1)!/(l-1)!) Tr_{n-l}(psi, f)
  * logRoute: read 2 f_j / j! off the w^j coefficient of
        log(1 + sum_j (j g_j / 2^{j-2}) w^j / j!).

Partition traces use the weights

    phi(lambda) = prod_k 2^{l_k} / (l_k! k!^{l_k}),
    psi(lambda) = (-1)^{sum l_k} phi(lambda).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Dict, List, Optional, Tuple

from . import functions as fn
from .bernoulli import bernoulli
from .errors import MissingMemberError
from .partitions import partitions_of
from .qseries import QSeries, partition_series
from .wjets import build_jet, jet_log, rational_jet, two_sinh_half_over_w

ROUTES = ("recursionA", "recursionB", "logRoute")

Members = Callable[[int], QSeries]


def phi_weight(lam: Tuple[int, ...]) -> Fraction:
    """phi(lambda) = prod over parts k with multiplicity l: 2^l/(l! k!^l)."""
    w = Fraction(1)
    for part, mult in Counter(lam).items():
        w *= Fraction(2**mult, factorial(mult) * factorial(part) ** mult)
    return w


def psi_weight(lam: Tuple[int, ...]) -> Fraction:
    """psi(lambda) = (-1)^{number of parts} phi(lambda)."""
    sign = -1 if len(lam) % 2 else 1
    return sign * phi_weight(lam)


_WEIGHTS = {"phi": phi_weight, "psi": psi_weight}


def partition_trace(n: int, members: Members, order: int, weight: str = "phi") -> QSeries:
    """Tr_n(weight, f) = sum_{lambda of n} weight(lambda) prod_k f_k^{l_k}.

    ``members`` maps a part size to its series; odd members are expected
    to be zero series.  Tr_0 = 1 (empty product).
    """
    try:
        weigh = _WEIGHTS[weight]
    except KeyError:
        raise ValueError(f"unknown trace weight {weight!r}") from None
    total = QSeries.zero(order)
    for lam in partitions_of(n):
        term = QSeries.one(order)
        dead = False
        for part, mult in sorted(Counter(lam).items()):
            factor = members(part)
            if factor.is_zero():
                dead = True
                break
            term = term * factor**mult
        if dead:
            continue
        total = total + term * weigh(lam)
    return total


def eisenstein_members(order: int) -> Members:
    """Member accessor for the Eisenstein family (odd weights are zero)."""

    def member(j: int) -> QSeries:
        if j < 1:
            raise MissingMemberError("Eisenstein members start at weight 1")
        return fn.eisenstein(j, order)

    return member


@dataclass(frozen=True)
class MockFamily:
    """Members f_{k,j} for even j <= max_j at a common truncation order."""

    k: int
    max_j: int
    order: int
    route: str
    extrapolated: bool
    members: Dict[int, QSeries] = field(repr=False)

    def member(self, j: int) -> QSeries:
        if j < 1 or j > self.max_j:
            raise MissingMemberError(
                f"member {j} outside the computed range 1..{self.max_j}"
            )
        if j % 2:
            return QSeries.zero(self.order)
        return self.members[j]


def _g_sums(k: int, max_j: int, order: int) -> Dict[int, QSeries]:
    return {
        ell: fn.divisor_like_sum(2, 2 * k - 1, ell, order)
        for ell in range(2, max_j + 1, 2)
    }


def _route_recursion_a(g: Dict[int, QSeries], max_j: int, order: int) -> Dict[int, QSeries]:
    members: Dict[int, QSeries] = {}
    for n in range(2, max_j + 1, 2):
        acc = g[n] * Fraction(n, 2 ** (n - 1))
        for ell in range(2, n - 1, 2):
            coeff = comb(n - 1, ell - 1) * Fraction(n - ell, 2 ** (n - ell - 2))
            acc = acc - (members[ell] * g[n - ell]) * coeff
        members[n] = acc
    return members


def _route_recursion_b(g: Dict[int, QSeries], max_j: int, order: int) -> Dict[int, QSeries]:
    members: Dict[int, QSeries] = {}

    def partial(j: int) -> QSeries:
        if j % 2:
            return QSeries.zero(order)
        return members[j]

    for n in range(2, max_j + 1, 2):
        acc = QSeries.zero(order)
        for ell in range(2, n + 1, 2):
            tr = partition_trace(n - ell, partial, order, weight="psi")
            coeff = Fraction(ell, 2 ** (ell - 1)) * Fraction(
                factorial(n - 1), factorial(ell - 1)
            )
            acc = acc + (g[ell] * tr) * coeff
        members[n] = acc
    return members


def _route_log(g: Dict[int, QSeries], max_j: int, order: int) -> Dict[int, QSeries]:
    entries = {0: QSeries.one(order)}
    for j in range(2, max_j + 1, 2):
        entries[j] = g[j] * Fraction(j, 2 ** (j - 2) * factorial(j))
    logs = jet_log(build_jet(entries, 0, max_j, order))
    return {
        j: logs.coeff(j) * Fraction(factorial(j), 2)
        for j in range(2, max_j + 1, 2)
    }


_ROUTE_BUILDERS = {
    "recursionA": _route_recursion_a,
    "recursionB": _route_recursion_b,
    "logRoute": _route_log,
}


@lru_cache(maxsize=None)
def mock_eisenstein_family(
    k: int,
    max_j: int,
    order: int,
    route: str = "recursionA",
    allow_k2: bool = False,
) -> MockFamily:
    """Build the family {f_{k,j}} for even j <= max_j at the given order.

    k = 2 runs the same recursions with g_{2,3,ell}; it is an
    extrapolation outside the verified k >= 3 range and must be enabled
    explicitly.
    """
    if k < 2:
        raise ValueError("the family is defined for k >= 2")
    if k == 2 and not allow_k2:
        raise ValueError("k = 2 is an extrapolation; pass allow_k2=True to compute it")
    if max_j < 2 or max_j % 2:
        raise ValueError("max_j must be an even integer >= 2")
    if order < 1:
        raise ValueError("order must be >= 1")
    if route not in _ROUTE_BUILDERS:
        raise ValueError(f"unknown route {route!r}; choose one of {ROUTES}")
    g = _g_sums(k, max_j, order)
    members = _ROUTE_BUILDERS[route](g, max_j, order)
    return MockFamily(
        k=k,
        max_j=max_j,
        order=order,
        route=route,
        extrapolated=(k == 2),
        members=members,
    )


# -- identity checks ------------------------------------------------------


def trace_identity_residuals(
    k: int, max_j: int, order: int, route: str = "recursionA"
) -> List[QSeries]:
    """Residuals (one per power of the trace variable, 0..max_j) of

        sum_j R_{k,j} w^j/j! + theta_{1,2k-1}/(q)_inf
            = (2 sinh(w/2) / (w (q)_inf)) sum_j Tr_j(phi, f_k) w^j.

    The theta shift on the w^0 coefficient makes the identity exact;
    without it the two sides already differ at q^{k-1}.
    """
    if max_j % 2:
        raise ValueError("max_j must be even")
    fam = mock_eisenstein_family(k, max(max_j, 2), order, route)
    inv_euler = partition_series(order)
    lhs = [
        fn.rank_moment(k, j, order, "direct").series / factorial(j)
        for j in range(max_j + 1)
    ]
    lhs[0] = lhs[0] + fn.theta_series(1, 2 * k - 1, order) * inv_euler
    traces = build_jet(
        {j: partition_trace(j, fam.member, order, "phi") for j in range(max_j + 1)},
        0,
        max_j,
        order,
    )
    sinc = rational_jet(two_sinh_half_over_w(max_j), order)
    rhs = (sinc * traces).scale(inv_euler)
    return [lhs[j] - rhs.coeff(j) for j in range(max_j + 1)]


def crank_trace_residuals(max_j: int, order: int) -> List[QSeries]:
    """Residuals of the crank analogue

        sum_j C_j w^j/j! = (2 sinh(w/2) / (w (q)_inf)) sum_j Tr_j(phi, G) w^j

    with C_j from enumeration and G the Eisenstein family."""
    if max_j % 2:
        raise ValueError("max_j must be even")
    inv_euler = partition_series(order)
    members = eisenstein_members(order)
    lhs = [
        fn.crank_moment(j, order, "combinatorial").series / factorial(j)
        for j in range(max_j + 1)
    ]
    traces = build_jet(
        {j: partition_trace(j, members, order, "phi") for j in range(max_j + 1)},
        0,
        max_j,
        order,
    )
    sinc = rational_jet(two_sinh_half_over_w(max_j), order)
    rhs = (sinc * traces).scale(inv_euler)
    return [lhs[j] - rhs.coeff(j) for j in range(max_j + 1)]


@dataclass(frozen=True)
class IntegralityReport:
    ok: bool
    j: Optional[int] = None
    n: Optional[int] = None
    value: Optional[Fraction] = None

    def describe(self) -> str:
        if self.ok:
            return "all shifted coefficients integral"
        return f"member j={self.j}: coefficient of q^{self.n} is {self.value}"


def integrality_check(family: MockFamily) -> IntegralityReport:
    """Check that every member plus B_j/(2j) has integer coefficients."""
    for j in range(2, family.max_j + 1, 2):
        shifted = family.member(j) + bernoulli(j) / (2 * j)
        for n, c in enumerate(shifted.coeffs):
            if c.denominator != 1:
                return IntegralityReport(ok=False, j=j, n=n, value=c)
    return IntegralityReport(ok=True)


@dataclass(frozen=True)
class PatternReport:
    ok: bool
    detail: str = ""


def leading_pattern_check(
    k: int, j: int, order: int, family: Optional[MockFamily] = None
) -> PatternReport:
    """Check the leading coefficients of f_{k,j}:

    constant -B_j/(2j), then q^{k+i} carries (i+1)^j - i^j for i < k.
    """
    if j < 2 or j % 2:
        raise ValueError("the pattern concerns even j >= 2")
    if order < 2 * k - 1:
        raise ValueError("order must reach q^{2k-1}")
    if family is None:
        family = mock_eisenstein_family(k, j, order)
    member = family.member(j)
    expected_const = -bernoulli(j) / (2 * j)
    if member.coeff(0) != expected_const:
        return PatternReport(
            ok=False,
            detail=f"constant {member.coeff(0)} != {expected_const}",
        )
    for i in range(k):
        want = (i + 1) ** j - i**j
        got = member.coeff(k + i)
        if got != want:
            return PatternReport(
                ok=False,
                detail=f"coefficient of q^{k + i} is {got}, expected {want}",
            )
    return PatternReport(ok=True)
