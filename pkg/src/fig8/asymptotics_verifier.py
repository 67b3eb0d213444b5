"""Predicted large-N behaviour of J_N and convergence studies against it."""

from __future__ import annotations

import cmath
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateSaddleError, DomainError
from .figure_eight_core import (
    KAPPA,
    LogComplex,
    action_s,
    action_s_minus,
    action_s_plus,
    alexander,
    colored_jones,
    logsumexp_complex,
    make_cusp,
    radicand,
    torsion,
)
from .figure_eight_core import saddle_hessian
from .quantum_dilog import (
    PotentialContext,
    QuadratureSpec,
    big_f_prime,
    f_n,
    jones_via_potential,
)
from .region_atlas import ZERO_TOL, RegionLabel, classify
from .special_functions import principal_log, principal_sqrt

GAMMA_ONE_THIRD = math.gamma(1 / 3)

_GROWING = {RegionLabel.GammaPlus, RegionLabel.GammaTildePlus}
_BALANCED = {RegionLabel.GammaZero, RegionLabel.GammaTildeZero}
_CONVERGENT = {
    RegionLabel.GammaMinus,
    RegionLabel.GammaTildeMinus,
    RegionLabel.OmegaCapXi,
    RegionLabel.OmegaBoundary,
}


@dataclass(frozen=True)
class AsymptoticPrediction:
    """Leading term of J_N.

    For growing regimes leading = prefactor * exp(N * growth_rate), with
    prefactor = sqrt(pi) / (2 sinh(xi/2)) * T(xi)^(1/2) * (N/xi)^(1/2).
    For convergent regimes leading = 1 / Delta(e^xi) and prefactor is 0.
    """

    regime: RegionLabel
    n: int
    leading: LogComplex
    growth_rate: complex
    torsion_factor: complex
    prefactor: complex
    conjectural: bool


def _growing_term(cp, n: int) -> tuple[complex, complex, LogComplex]:
    xi = cp.xi
    w = principal_sqrt(radicand(cp))  # = 2 sinh(phi), first quadrant on Xi
    if w == 0:
        raise DegenerateSaddleError("phi = 0; use known_case_predict")
    growth = action_s(cp) / xi
    pref = cmath.sqrt(2 * math.pi * n) / (2 * cmath.sinh(xi / 2) * principal_sqrt(xi * w))
    lead = LogComplex.from_complex(pref) * LogComplex.from_log(n * growth)
    return growth, pref, lead


def _add(x: LogComplex, y: complex) -> LogComplex:
    terms = [complex(x.log_mag, x.arg)]
    if y != 0:
        terms.append(principal_log(y))
    return logsumexp_complex(terms)


def predict(cp, n: int, zero_tol: float = ZERO_TOL) -> AsymptoticPrediction:
    """Leading-order value of J_N(e^{xi/N}) for xi in Xi."""
    cp = make_cusp(cp)
    n = int(n)
    if n < 1:
        raise DomainError("N must be positive")
    label, _ = classify(cp.xi, zero_tol)
    if label is RegionLabel.OutsideXi:
        raise DomainError("xi is outside Xi; no prediction")
    if cp.branch_point is not None:
        raise DegenerateSaddleError("degenerate saddle; use known_case_predict")
    limit = 1 / alexander(cmath.exp(cp.xi))
    tors = torsion(cp.xi)
    if label in _CONVERGENT:
        growth = action_s(cp) / cp.xi
        return AsymptoticPrediction(
            label, n, LogComplex.from_complex(limit), growth, tors, 0j, label.conjectural
        )
    growth, pref, lead = _growing_term(cp, n)
    if label in _BALANCED:
        lead = _add(lead, limit)
    return AsymptoticPrediction(label, n, lead, growth, tors, pref, label.conjectural)


# ---------------------------------------------------------------------------
# reference formulas for previously known cases


def _half_power_term(u: float, xi: complex, n: int, action: complex, sqrt_pi: complex) -> LogComplex:
    t_half = principal_sqrt(torsion(xi))
    nx = principal_sqrt(n / xi)
    pref = sqrt_pi / (2 * cmath.sinh(u / 2)) * t_half * nx
    return LogComplex.from_complex(pref) * LogComplex.from_log(action * n / xi)


def _jones_dual(p: int, xi: complex, n: int) -> LogComplex:
    # J_p(e^{4 N pi^2 / xi}) with q = exp(zeta / p)
    return colored_jones(p, p * 4 * n * math.pi ** 2 / xi)


def known_case_predict(case_id: int, params: dict, n: int) -> LogComplex:
    """Leading term of J_N in the eight previously known cases.

    params by case: 1 and 3 {"u", "p"}; 2 {"p"}; 4 {"xi"}; 5 {}; 6 {"xi"};
    7 {}; 8 {"u"} (complex, small).  Case 8 returns exp(N S+(u)/xi) only,
    since only the exponential growth rate is known there.
    """
    n = int(n)
    params = dict(params or {})
    if case_id in (1, 3):
        u = float(params["u"])
        p = int(params.get("p", 1))
        if p < 1 or u <= 0:
            raise DomainError("need u > 0 and p >= 1")
        if case_id == 1 and not u < KAPPA:
            raise DomainError("case 1 needs 0 < u < kappa")
        if case_id == 3 and not u > KAPPA:
            raise DomainError("case 3 needs u > kappa")
        xi = complex(u, 2 * p * math.pi)
        if case_id == 1:
            lead = _half_power_term(u, xi, n, action_s_plus(u), principal_sqrt(-math.pi))
        else:
            lead = _half_power_term(u, xi, n, action_s_minus(u), math.sqrt(math.pi))
        return lead if p == 1 else lead * _jones_dual(p, xi, n)
    if case_id == 2:
        p = int(params.get("p", 1))
        if p < 1:
            raise DomainError("need p >= 1")
        xi = complex(KAPPA, 2 * p * math.pi)
        c = GAMMA_ONE_THIRD * cmath.exp(1j * math.pi / 6) / 3 ** (1 / 6)
        lead = (
            LogComplex.from_complex(c)
            * LogComplex.from_log(2 / 3 * principal_log(n / xi))
            * LogComplex.from_log(2j * math.pi * KAPPA * n / xi)
        )
        return lead if p == 1 else lead * _jones_dual(p, xi, n)
    if case_id == 4:
        xi = complex(params["xi"])
        cp = make_cusp(xi)
        if not (math.cosh(cp.a) - math.cos(cp.b) < 0.5 and abs(cp.b) < math.pi / 3):
            raise DomainError("case 4 needs cosh a - cos b < 1/2 and |b| < pi/3")
        return LogComplex.from_complex(1 / alexander(cmath.exp(xi)))
    if case_id == 5:
        return LogComplex.from_complex(GAMMA_ONE_THIRD / 3 ** (2 / 3) * (n / KAPPA) ** (2 / 3))
    if case_id == 6:
        xi = complex(params["xi"])
        if xi.imag != 0 or not xi.real > KAPPA:
            raise DomainError("case 6 needs real xi > kappa")
        return _half_power_term(xi.real, xi, n, action_s(xi), math.sqrt(math.pi))
    if case_id == 7:
        lead = (
            LogComplex.from_complex(-2 * math.pi ** 1.5 * principal_sqrt(torsion(0)))
            * LogComplex.from_log(1.5 * principal_log(n / (2j * math.pi)))
            * LogComplex.from_log(n * action_s_plus(0) / (2j * math.pi))
        )
        return lead
    if case_id == 8:
        u = complex(params["u"])
        if u.real == 0:
            raise DomainError("case 8 needs u off the imaginary axis")
        xi = u + 2j * math.pi
        return LogComplex.from_log(n * action_s_plus(u) / xi)
    raise DomainError(f"unknown case {case_id}")


# ---------------------------------------------------------------------------
# convergence studies


@dataclass
class ConvergenceReport:
    xi: complex
    regime: RegionLabel
    n_values: list
    exact: list
    predicted: list
    errors: list
    phase_errors: list
    fitted_order: float
    conjectural: bool
    route: str = "direct"
    error_kind: str = field(default="")


def fit_order(n_values, errors) -> float:
    """Slope of log(error) against log(N) by least squares."""
    x = np.log(np.asarray(n_values, dtype=float))
    y = np.log(np.asarray(errors, dtype=float))
    return float(np.polyfit(x, y, 1)[0])


def worker_count() -> int:
    """Worker cap from FIG8_THREADS (default 1)."""
    raw = os.environ.get("FIG8_THREADS", "1")
    try:
        val = int(raw)
    except ValueError as exc:
        raise DomainError("FIG8_THREADS must be a positive integer") from exc
    if val < 1:
        raise DomainError("FIG8_THREADS must be a positive integer")
    return val


def _exact_cell(args):
    xi, n, route, quad = args
    if route == "potential":
        return jones_via_potential(n, xi, quad)
    return colored_jones(n, xi)


def ordered_map(fn, items, workers: int | None = None):
    """map() that may fan out to processes but always returns input order."""
    items = list(items)
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(workers, len(items))) as pool:
        return list(pool.map(fn, items))


def convergence_study(
    cp,
    n_values,
    route: str = "direct",
    quad: QuadratureSpec | None = None,
    zero_tol: float = ZERO_TOL,
    workers: int | None = None,
) -> ConvergenceReport:
    """Compare exact J_N with the prediction for each N.

    The error is |J_N - 1/Delta| in convergent regimes, |J_N/pred - 1| in
    growing ones and |J_N - pred| when Re(S/xi) = 0.
    """
    cp = make_cusp(cp)
    n_values = [int(n) for n in n_values]
    if len(n_values) < 3 or any(b <= a for a, b in zip(n_values, n_values[1:])):
        raise DomainError("need at least three ascending N values")
    if route not in ("direct", "potential"):
        raise DomainError("route must be 'direct' or 'potential'")
    preds = [predict(cp, n, zero_tol) for n in n_values]
    regime = preds[0].regime
    exact = ordered_map(_exact_cell, [(cp.xi, n, route, quad) for n in n_values], workers)
    kind = "relative" if regime in _GROWING else "absolute"
    errors, phases = [], []
    for j, p in zip(exact, preds):
        r = j.ratio_to(p.leading)
        phases.append(abs(cmath.phase(r)))
        if regime in _GROWING:
            errors.append(abs(r - 1))
        else:
            errors.append(abs(j.to_complex() - p.leading.to_complex()))
    return ConvergenceReport(
        xi=cp.xi,
        regime=regime,
        n_values=n_values,
        exact=exact,
        predicted=[p.leading for p in preds],
        errors=errors,
        phase_errors=phases,
        fitted_order=fit_order(n_values, errors),
        conjectural=preds[0].conjectural,
        route=route,
        error_kind=kind,
    )


# ---------------------------------------------------------------------------
# sum against integral, saddle identities


def _gl_integral(fn, lo: float, hi: float, panels: int, order: int = 16):
    x, w = np.polynomial.legendre.leggauss(order)
    edges = np.linspace(lo, hi, panels + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1:] - edges[:-1])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    vals = fn(nodes)
    return complex(np.sum(weights * vals)), float(np.max(np.abs(vals)))


def sum_vs_integral_check(
    cp,
    n: int,
    delta1: float,
    quad: QuadratureSpec | None = None,
    delta0: float = 0.3,
    zero_tol: float = ZERO_TOL,
    max_panels: int = 256,
) -> float:
    """Gap between the midpoint sum of exp(N f_N) and its integral.

    When Re F(sigma) > 0 the sum runs over 0 <= (2k+1)/2N <= 1 - delta1 and
    both sides are scaled by |exp(-N F(sigma))|.  Otherwise both run over
    [-delta0, 1 - delta1] and no scaling is applied.
    """
    cp = make_cusp(cp)
    n = int(n)
    if n > 200:
        raise DomainError("N is capped at 200 for this check")
    if not 0 < delta1 < 0.1:
        raise DomainError("delta1 must lie in (0, 0.1)")
    label, diag = classify(cp.xi, zero_tol)
    if label not in (RegionLabel.GammaPlus, RegionLabel.GammaZero, RegionLabel.GammaMinus):
        raise DomainError("xi must lie in Gamma")
    ctx = PotentialContext(cp, n)
    hi = 1 - delta1
    if diag.re_s_over_xi > zero_tol:
        lo = 0.0
        scale = -n * (action_s(cp) / cp.xi).real
    else:
        lo = -delta0
        scale = 0.0
    k = np.arange(math.ceil(lo * n - 0.5), n)
    x = (2 * k + 1) / (2 * n)
    x = x[(x >= lo) & (x <= hi)]
    s = logsumexp_complex(n * f_n(x, ctx, quad) + scale)
    total = s.to_complex() / n

    def integrand(z):
        return np.exp(n * f_n(z, ctx, quad) + scale)

    panels = 16
    prev, mag = _gl_integral(integrand, lo, hi, panels)
    while True:
        panels *= 2
        cur, mag = _gl_integral(integrand, lo, hi, panels)
        if abs(cur - prev) <= 1e-12 * max(mag, 1.0):
            break
        if panels >= max_panels:
            break
        prev = cur
    return abs(total - cur)


def fd_second_derivative(cp, z: complex, h: float = 1e-6) -> complex:
    """Central difference of F' at z.

    Differencing F' rather than F keeps the stencil tiny. Near sigma, F' is a
    log of something close to 1, while F itself has a cut that wide stencils
    can cross when sigma sits close to 1.
    """
    cp = make_cusp(cp)
    return (big_f_prime(z + h, cp) - big_f_prime(z - h, cp)) / (2 * h)


def saddle_check(cp, h: float = 1e-6) -> dict:
    """F'(sigma) = 0 and F''(sigma) = -xi * 2 sinh(phi), checked numerically."""
    cp = make_cusp(cp)
    hess = saddle_hessian(cp)  # raises on degenerate or outside Xi
    fp = big_f_prime(cp.sigma, cp)
    fd = fd_second_derivative(cp, cp.sigma, h)
    res = abs(fd - hess)
    return {
        "xi": cp.xi,
        "f_prime_at_sigma": abs(fp),
        "hessian_closed": hess,
        "hessian_fd": fd,
        "hessian_residual": res,
        "passed": bool(abs(fp) < 1e-10 and res < 1e-6),
    }
