"""Laurent jets in the formal variable w with q-series coefficients.

All two-variable identities in this package are computed in the variable
w = 2*pi*i*z, in which every coefficient is an exact rational q-series:
zeta = e^w, 1/(2i sin(pi z)) = 1/(2 sinh(w/2)), and sin(pi z)/(pi z) =
2 sinh(w/2)/w.  That choice eliminates pi and i from the arithmetic.

A :class:`WJet` stores coefficients for degrees min_deg..max_deg and
certifies exactly that window: degrees below min_deg are known to be
zero, degrees above max_deg are unknown.  Products and derivatives
shrink the certified window so that no reported coefficient ever depends
on discarded data; in particular the window of a product is
[a.min + b.min, min(a.max + b.min, b.max + a.min)].
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Dict, Sequence

from .errors import ConstantTermError, WindowUnderflowError
from .qseries import QSeries


class WJet:
    """Laurent polynomial in w whose coefficients are truncated q-series."""

    __slots__ = ("min_deg", "coeffs", "q_order")

    def __init__(self, min_deg: int, coeffs: Sequence[QSeries]):
        cs = tuple(coeffs)
        if not cs:
            raise WindowUnderflowError("a jet needs at least one certified degree")
        q_order = min(c.order for c in cs)
        self.min_deg = min_deg
        self.coeffs = tuple(c.truncate(q_order) for c in cs)
        self.q_order = q_order

    @property
    def max_deg(self) -> int:
        return self.min_deg + len(self.coeffs) - 1

    def coeff(self, deg: int) -> QSeries:
        """Coefficient of w^deg; zero below the window, error above it."""
        if deg > self.max_deg:
            raise WindowUnderflowError(
                f"w^{deg} is outside the certified window [{self.min_deg}, {self.max_deg}]"
            )
        if deg < self.min_deg:
            return QSeries.zero(self.q_order)
        return self.coeffs[deg - self.min_deg]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def degrees(self):
        return range(self.min_deg, self.max_deg + 1)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "WJet") -> "WJet":
        lo = min(self.min_deg, other.min_deg)
        hi = min(self.max_deg, other.max_deg)
        if hi < lo:
            raise WindowUnderflowError("sum has an empty certified window")
        order = min(self.q_order, other.q_order)
        zero = QSeries.zero(order)
        out = []
        for d in range(lo, hi + 1):
            a = self.coeff(d).truncate(order) if d >= self.min_deg else zero
            b = other.coeff(d).truncate(order) if d >= other.min_deg else zero
            out.append(a + b)
        return WJet(lo, out)

    def __neg__(self) -> "WJet":
        return WJet(self.min_deg, [-c for c in self.coeffs])

    def __sub__(self, other: "WJet") -> "WJet":
        return self + (-other)

    def __mul__(self, other: "WJet") -> "WJet":
        lo = self.min_deg + other.min_deg
        hi = min(self.max_deg + other.min_deg, other.max_deg + self.min_deg)
        if hi < lo:
            raise WindowUnderflowError("product has an empty certified window")
        order = min(self.q_order, other.q_order)
        out = []
        for d in range(lo, hi + 1):
            acc = QSeries.zero(order)
            i_lo = max(self.min_deg, d - other.max_deg)
            i_hi = min(self.max_deg, d - other.min_deg)
            for i in range(i_lo, i_hi + 1):
                a = self.coeffs[i - self.min_deg]
                if a.is_zero():
                    continue
                acc = acc + a * other.coeffs[d - i - other.min_deg]
            out.append(acc)
        return WJet(lo, out)

    def scale(self, factor) -> "WJet":
        """Multiply every coefficient by a q-series or rational scalar."""
        return WJet(self.min_deg, [c * factor for c in self.coeffs])

    def shift(self, degree: int) -> "WJet":
        """Exact multiplication by the monomial w^degree."""
        return WJet(self.min_deg + degree, self.coeffs)

    def wderiv(self) -> "WJet":
        """d/dw: coefficient at degree d becomes (d+1) * c_{d+1}."""
        out = [
            (self.min_deg + i) * c for i, c in enumerate(self.coeffs)
        ]
        return WJet(self.min_deg - 1, out)

    def qderiv(self) -> "WJet":
        """q d/dq applied to every coefficient; the window is unchanged."""
        return WJet(self.min_deg, [c.qderiv() for c in self.coeffs])

    def __repr__(self) -> str:
        return (
            f"WJet(window=[{self.min_deg}, {self.max_deg}], q_order={self.q_order})"
        )


def build_jet(entries: Dict[int, QSeries], min_deg: int, max_deg: int, q_order: int) -> WJet:
    """Jet over [min_deg, max_deg] from a sparse {degree: series} map."""
    if max_deg < min_deg:
        raise WindowUnderflowError("empty jet window requested")
    stray = [d for d in entries if not min_deg <= d <= max_deg]
    if stray:
        raise ValueError(f"entries at degrees {stray} fall outside the window")
    zero = QSeries.zero(q_order)
    out = [entries.get(d, zero) for d in range(min_deg, max_deg + 1)]
    return WJet(min_deg, out)


def rational_jet(wseries: QSeries, q_order: int, shift: int = 0) -> WJet:
    """Lift a rational series in w (a QSeries reused formally) to a jet."""
    coeffs = [QSeries.constant(c, q_order) for c in wseries.coeffs]
    return WJet(shift, coeffs)


def exp_cw(c, max_deg: int, q_order: int) -> WJet:
    """The jet of e^{c w} = sum_k c^k w^k / k! through w^max_deg."""
    c = Fraction(c)
    coeffs = []
    power = Fraction(1)
    for k in range(max_deg + 1):
        coeffs.append(QSeries.constant(power / factorial(k), q_order))
        power *= c
    return WJet(0, coeffs)


def two_sinh_half_over_w(max_deg: int) -> QSeries:
    """2 sinh(w/2)/w as a rational series in w: sum_m w^{2m}/(4^m (2m+1)!).

    This is sin(pi z)/(pi z) in w-coordinates, and also equals
    exp(sum_{j>=2} (B_j/j) w^j/j!) (checked in the tests).
    """
    coeffs = [Fraction(0)] * (max_deg + 1)
    for m in range(0, max_deg // 2 + 1):
        coeffs[2 * m] = Fraction(1, 4**m * factorial(2 * m + 1))
    return QSeries(coeffs)


def reciprocal_two_sinh_half(max_deg: int, q_order: int) -> WJet:
    """1/(2 sinh(w/2)) as a simple-pole jet on [-1, max_deg].

    Built by inverting the power-series part of 2 sinh(w/2) = w * S(w)
    and shifting; equals sum_n B_n(1/2) w^{n-1}/n!.
    """
    inv = two_sinh_half_over_w(max_deg + 1).inverse()
    return rational_jet(inv, q_order, shift=-1)


def jet_exp(a: WJet, max_deg: int | None = None) -> WJet:
    """exp of a jet with certified window contained in degrees >= 1.

    Standard recurrence n b_n = sum_k k a_k b_{n-k} with q-series
    coefficients; the result is certified on [0, a.max_deg].
    """
    if a.min_deg < 1:
        if not a.coeff(0).is_zero() or a.min_deg < 0:
            raise ConstantTermError("jet exp requires vanishing below degree 1")
    top = a.max_deg if max_deg is None else min(max_deg, a.max_deg)
    order = a.q_order
    b = [QSeries.one(order)]
    for n in range(1, top + 1):
        acc = QSeries.zero(order)
        for k in range(1, n + 1):
            ak = a.coeff(k)
            if ak.is_zero():
                continue
            acc = acc + (ak * b[n - k]) * k
        b.append(acc / n)
    return WJet(0, b)


def jet_log(a: WJet) -> WJet:
    """log of a jet with min_deg 0 and constant coefficient equal to 1."""
    order = a.q_order
    if a.min_deg != 0 or a.coeff(0) != QSeries.one(order):
        raise ConstantTermError("jet log requires constant coefficient 1")
    l = [QSeries.zero(order)]
    for n in range(1, a.max_deg + 1):
        acc = QSeries.zero(order)
        for k in range(1, n):
            lk = l[k]
            if lk.is_zero():
                continue
            ank = a.coeff(n - k)
            if ank.is_zero():
                continue
            acc = acc + (lk * ank) * k
        l.append(a.coeff(n) - acc / n)
    return WJet(0, l)
