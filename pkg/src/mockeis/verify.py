"""Named verification suites with machine-readable results.

Each suite checks one family of identities at its default acceptance
size; sizes can be overridden.  All comparisons are exact, so a check
either matches coefficient-for-coefficient or reports the first
offender.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional

from . import functions as fn
from . import mock
from . import partitions as pt
from . import pde

DEFAULT_KS = (3, 4, 5)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _first_series_mismatch(a, b) -> Optional[str]:
    order = min(a.order, b.order)
    for n in range(order + 1):
        if a.coeff(n) != b.coeff(n):
            return f"q^{n}: {a.coeff(n)} != {b.coeff(n)}"
    return None


def _series_check(name: str, a, b) -> CheckResult:
    bad = _first_series_mismatch(a, b)
    if bad is None:
        return CheckResult(name, True)
    return CheckResult(name, False, bad)


def _zero_check(name: str, series) -> CheckResult:
    for n in range(series.order + 1):
        if series.coeff(n) != 0:
            return CheckResult(name, False, f"q^{n}: {series.coeff(n)} != 0")
    return CheckResult(name, True)


# -- suites ---------------------------------------------------------------


def suite_counts(
    ks: Iterable[int] = DEFAULT_KS,
    max_n: Optional[int] = None,
    max_m: Optional[int] = None,
) -> List[CheckResult]:
    """N_k(m,n): enumeration vs the count series, plus the multisum for k=3."""
    results = []
    for k in ks:
        n_top = 25 if max_n is None else max_n
        m_top = 6 if max_m is None else max_m
        table = pt.count_table(k, m_top, n_top)
        ok = True
        detail = ""
        for m in range(-m_top, m_top + 1):
            series = fn.krank_count_series(k, m, n_top)
            for n in range(n_top + 1):
                if series.coeff(n) != table.count(m, n):
                    ok = False
                    detail = (
                        f"N_{k}({m},{n}): series {series.coeff(n)}, "
                        f"enumeration {table.count(m, n)}"
                    )
                    break
            if not ok:
                break
        results.append(
            CheckResult(
                f"counts: N_{k} enumeration = count series (n<={n_top}, |m|<={m_top})",
                ok,
                detail,
            )
        )
        if k == 3:
            n3 = min(15, n_top) if max_n is None else max_n
            m3 = min(5, m_top) if max_m is None else max_m
            small = pt.count_table(3, m3, n3)
            multi = fn.multisum_count_table(3, m3, n3)
            ok = True
            detail = ""
            for m in range(-m3, m3 + 1):
                for n in range(n3 + 1):
                    if multi.count(m, n) != small.count(m, n):
                        ok = False
                        detail = (
                            f"N_3({m},{n}): multisum {multi.count(m, n)}, "
                            f"enumeration {small.count(m, n)}"
                        )
                        break
                if not ok:
                    break
            results.append(
                CheckResult(
                    f"counts: N_3 multisum = enumeration (n<={n3}, |m|<={m3})",
                    ok,
                    detail,
                )
            )
    return results


def suite_moments(
    ks: Iterable[int] = DEFAULT_KS,
    max_j: int = 10,
    order: int = 40,
    comb_order: int = 25,
    comb_max_j: int = 6,
) -> List[CheckResult]:
    """Rank-moment identities: two series routes, odd vanishing, and the
    brute-force moments."""
    results = []
    for k in ks:
        for j in range(2, max_j + 1, 2):
            direct = fn.rank_moment(k, j, order, "direct").series
            divsum = fn.rank_moment(k, j, order, "divisor-sum").series
            results.append(
                _series_check(
                    f"moments: R_{{{k},{j}}} direct = divisor-sum (order {order})",
                    direct,
                    divsum,
                )
            )
        odd_ok = all(
            fn.rank_moment(k, j, order, m).series.is_zero()
            for j in range(1, max_j + 1, 2)
            for m in ("direct", "divisor-sum")
        )
        results.append(
            CheckResult(f"moments: R_{{{k},odd}} vanish identically", odd_ok)
        )
        zero_series = fn.rank_moment(k, 0, comb_order, "direct").series
        comb_zero = fn.rank_moment(k, 0, comb_order, "combinatorial").series
        results.append(
            _series_check(
                f"moments: R_{{{k},0}} theta form = enumeration (order {comb_order})",
                zero_series,
                comb_zero,
            )
        )
        for j in range(1, comb_max_j + 1):
            results.append(
                _series_check(
                    f"moments: R_{{{k},{j}}} series = enumeration (order {comb_order})",
                    fn.rank_moment(k, j, comb_order, "direct").series,
                    fn.rank_moment(k, j, comb_order, "combinatorial").series,
                )
            )
    return results


def suite_traces(
    ks: Iterable[int] = DEFAULT_KS, max_j: int = 8, order: int = 30
) -> List[CheckResult]:
    """The moment/trace identity (with the theta shift) per k."""
    results = []
    for k in ks:
        residuals = mock.trace_identity_residuals(k, max_j, order)
        ok = True
        detail = ""
        for j, res in enumerate(residuals):
            for n in range(res.order + 1):
                if res.coeff(n) != 0:
                    ok = False
                    detail = f"w^{j} q^{n}: residual {res.coeff(n)}"
                    break
            if not ok:
                break
        results.append(
            CheckResult(
                f"traces: k={k} moment/trace identity (w^{max_j}, order {order})",
                ok,
                detail,
            )
        )
    return results


def suite_crank(max_j: int = 8, order: int = 20) -> List[CheckResult]:
    """The crank analogue of the trace identity, plus method agreement."""
    results = []
    residuals = mock.crank_trace_residuals(max_j, order)
    ok = True
    detail = ""
    for j, res in enumerate(residuals):
        for n in range(res.order + 1):
            if res.coeff(n) != 0:
                ok = False
                detail = f"w^{j} q^{n}: residual {res.coeff(n)}"
                break
        if not ok:
            break
    results.append(
        CheckResult(
            f"crank: trace identity for Eisenstein family (w^{max_j}, order {order})",
            ok,
            detail,
        )
    )
    for j in range(0, max_j + 1):
        results.append(
            _series_check(
                f"crank: C_{j} enumeration = Eisenstein route (order {order})",
                fn.crank_moment(j, order, "combinatorial").series,
                fn.crank_moment(j, order, "eisenstein").series,
            )
        )
    return results


def suite_integrality(
    ks: Iterable[int] = DEFAULT_KS, max_j: int = 12, order: int = 60
) -> List[CheckResult]:
    results = []
    for k in ks:
        family = mock.mock_eisenstein_family(k, max_j, order)
        report = mock.integrality_check(family)
        results.append(
            CheckResult(
                f"integrality: k={k}, j<={max_j}, order {order}",
                report.ok,
                "" if report.ok else report.describe(),
            )
        )
    return results


def suite_pattern(ks: Iterable[int] = DEFAULT_KS, max_j: int = 12) -> List[CheckResult]:
    results = []
    for k in ks:
        order = 2 * k
        family = mock.mock_eisenstein_family(k, max_j, order)
        for j in range(2, max_j + 1, 2):
            report = mock.leading_pattern_check(k, j, order, family)
            results.append(
                CheckResult(
                    f"pattern: f_{{{k},{j}}} leading coefficients",
                    report.ok,
                    report.detail,
                )
            )
    return results


def suite_pde(max_deg: int = 7, q_order: int = 20) -> List[CheckResult]:
    residual = pde.pde_residual(max_deg, q_order)
    ok = True
    detail = ""
    for d in residual.degrees():
        series = residual.coeff(d)
        for n in range(series.order + 1):
            if series.coeff(n) != 0:
                ok = False
                detail = f"w^{d} q^{n}: residual {series.coeff(n)}"
                break
        if not ok:
            break
    return [
        CheckResult(
            f"pde: level-5 residual zero on window [-5, {max_deg}] at order {q_order}",
            ok,
            detail,
        )
    ]


def suite_theta_ode(q_order: int = 40) -> List[CheckResult]:
    results = []
    for a in (1, 3):
        results.append(
            _zero_check(
                f"theta-ode: theta_{{{a},5}} residual zero (order {q_order})",
                pde.theta_ode_residual(a, q_order),
            )
        )
    return results


SUITES: Dict[str, Callable[..., List[CheckResult]]] = {
    "counts": suite_counts,
    "moments": suite_moments,
    "traces": suite_traces,
    "crank": suite_crank,
    "integrality": suite_integrality,
    "pattern": suite_pattern,
    "pde": suite_pde,
    "theta-ode": suite_theta_ode,
}


def run_suite(name: str, **overrides) -> List[CheckResult]:
    """Run one named suite (or 'all'), applying any size overrides."""
    if name == "all":
        results = []
        for key in SUITES:
            results.extend(run_suite(key, **overrides))
        return results
    if name not in SUITES:
        raise KeyError(name)
    func = SUITES[name]
    allowed = func.__code__.co_varnames[: func.__code__.co_argcount]
    kwargs = {k: v for k, v in overrides.items() if k in allowed and v is not None}
    return func(**kwargs)
