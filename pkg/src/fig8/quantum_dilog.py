"""Quantum dilogarithm T_N, the summand potential f_N and its limit F.

    T_N(z) = 1/4 int_R e^{(2z-1)t} / (t sinh(t) sinh(gamma t / N)) dt,

with gamma = xi / (2 pi i).  R runs along (-inf, -1], over the upper half
of the unit circle and out along [1, inf), which keeps it away from the
triple pole at t = 0.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericalFailure
from .figure_eight_core import CuspParameter, LogComplex, logsumexp_complex, make_cusp
from .special_functions import dilog, l2, principal_log

_DOMAIN_SHRINK = 1e-9


@dataclass(frozen=True)
class QuadratureSpec:
    """Settings for the contour quadrature of T_N.

    rotate_tails turns each tail ray about its start point (+-1) into a
    sector free of poles so that the integrand decays as fast as possible.
    The value of the integral does not change.
    """

    tol: float = 1e-10
    max_panels: int = 1 << 15
    tail_safety: float = 10.0
    nodes: int = 16
    rotate_tails: bool = True

    def __post_init__(self):
        if not self.tol > 0:
            raise DomainError("tol must be positive")
        if self.max_panels < 8:
            raise DomainError("max_panels must be at least 8")
        if self.tail_safety < 1:
            raise DomainError("tail_safety must be >= 1")


@dataclass(frozen=True)
class PotentialContext:
    cp: CuspParameter
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("N must be a positive integer")
        if not self.cp.b > 0:
            raise DomainError("need Im xi > 0 so that Re gamma > 0")

    @property
    def gamma(self) -> complex:
        return self.cp.xi / (2j * math.pi)


def make_context(xi, n: int) -> PotentialContext:
    return PotentialContext(make_cusp(xi), int(n))


_GL_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gauss_legendre(n: int):
    if n not in _GL_CACHE:
        _GL_CACHE[n] = np.polynomial.legendre.leggauss(n)
    return _GL_CACHE[n]


def _panels(lo: float, hi: float, count: int, order: int):
    x, w = _gauss_legendre(order)
    edges = np.linspace(lo, hi, count + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1:] - edges[:-1])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def _integrand(t, z, gn):
    """e^{(2z-1)t} / (t sinh t sinh(gn t)) without overflow for large |t|."""
    st = np.where(t.real >= 0, 1.0, -1.0)
    w = gn * t
    sw = np.where(w.real >= 0, 1.0, -1.0)
    expo = (2 * z - 1) * t - st * t - sw * w
    den = t * (-np.expm1(-2 * st * t)) * (-np.expm1(-2 * sw * w))
    return 4 * st * sw * np.exp(expo) / den


def in_strip(z: complex, ctx: PotentialContext) -> bool:
    """Whether the defining integral of T_N converges at z."""
    half = ctx.gamma.real / (2 * ctx.n)
    x = complex(z).real
    return -half + _DOMAIN_SHRINK < x < 1 + half - _DOMAIN_SHRINK


def _ray_angle(lam: complex, sign: float, arg_xi: float, rotate: bool) -> float:
    # ray t = t0 + sign * r e^{i theta}; decay rate is -Re(sign * lam * e^{i theta})
    if not rotate or not (0 < arg_xi < math.pi / 2):
        return 0.0
    target = -cmath.phase(-sign * lam)
    return min(max(target, -0.8 * arg_xi), 1.2)


def _tail_length(z, gn, t0, direction, rate, quad, tol):
    n_over_g = 1 / abs(gn)
    k = 4 * (1 + n_over_g)
    r = max(8.0, math.log(k * quad.tail_safety / (rate * tol)) / rate)
    for _ in range(60):
        t = np.array([t0 + r * direction])
        val = abs(_integrand(t, z, gn)[0])
        if val / rate < tol / quad.tail_safety:
            return r
        r *= 1.5
    raise NumericalFailure("tail of the T_N integrand does not decay")


def _t_n_single(z: complex, ctx: PotentialContext, quad: QuadratureSpec) -> complex:
    gn = ctx.gamma / ctx.n
    lam_left = 2 * z + gn
    lam_right = 2 * z - 2 - gn
    arg_xi = cmath.phase(ctx.cp.xi)
    th_l = _ray_angle(lam_left, -1.0, arg_xi, quad.rotate_tails)
    th_r = _ray_angle(lam_right, 1.0, arg_xi, quad.rotate_tails)
    d_l = -cmath.exp(1j * th_l)
    d_r = cmath.exp(1j * th_r)
    rate_l = -(lam_left * d_l).real
    rate_r = -(lam_right * d_r).real
    if rate_l <= 0 or rate_r <= 0:
        raise DomainError("T_N integral diverges at this point")
    tol = quad.tol / 4
    len_l = _tail_length(z, gn, -1.0, d_l, rate_l, quad, tol)
    len_r = _tail_length(z, gn, 1.0, d_r, rate_r, quad, tol)

    def total(h):
        n_l = max(1, math.ceil(len_l / h))
        n_r = max(1, math.ceil(len_r / h))
        n_s = max(16, math.ceil(16 / h))
        if max(n_l, n_r, n_s) > quad.max_panels:
            raise NumericalFailure("T_N quadrature exceeded max_panels")
        s, ws = _panels(0.0, math.pi, n_s, quad.nodes)
        t = np.exp(1j * s)
        semi = -np.sum(ws * _integrand(t, z, gn) * 1j * t)
        r, wl = _panels(0.0, len_l, n_l, quad.nodes)
        left = -d_l * np.sum(wl * _integrand(-1.0 + r * d_l, z, gn))
        r, wr = _panels(0.0, len_r, n_r, quad.nodes)
        right = d_r * np.sum(wr * _integrand(1.0 + r * d_r, z, gn))
        return complex(0.25 * (left + semi + right))

    h = 1.0
    prev = total(h)
    while True:
        h /= 2
        cur = total(h)
        if abs(cur - prev) < quad.tol:
            return cur
        prev = cur


def t_n(z, ctx: PotentialContext, quad: QuadratureSpec | None = None):
    """Quantum dilogarithm T_N(z) inside its convergence strip.

    Accepts a scalar or an array of points.
    """
    quad = quad or QuadratureSpec()
    arr = np.asarray(z, dtype=complex)
    flat = arr.ravel()
    for zz in flat:
        if not in_strip(zz, ctx):
            raise DomainError(f"z = {zz} lies outside the convergence strip of T_N")
    out = np.array([_t_n_single(complex(zz), ctx, quad) for zz in flat]).reshape(arr.shape)
    return complex(out) if arr.ndim == 0 else out


def in_potential_domain(z, ctx: PotentialContext) -> bool:
    g = ctx.gamma
    return in_strip(g * (1 - z), ctx) and in_strip(g * (1 + z), ctx)


def f_n(z, ctx: PotentialContext, quad: QuadratureSpec | None = None):
    """Summand potential (T_N(g(1-z)) - T_N(g(1+z)))/N - xi z + 2 pi i z."""
    arr = np.asarray(z, dtype=complex)
    g = ctx.gamma
    xi = ctx.cp.xi
    for zz in arr.ravel():
        if not in_potential_domain(zz, ctx):
            raise DomainError(f"f_N is not defined at z = {zz}")
    tm = t_n(g * (1 - arr), ctx, quad)
    tp = t_n(g * (1 + arr), ctx, quad)
    out = (tm - tp) / ctx.n - xi * arr + 2j * math.pi * arr
    return complex(out) if arr.ndim == 0 else out


def jones_via_potential(n: int, cp, quad: QuadratureSpec | None = None) -> LogComplex:
    """J_N as (1 / (2 sinh(xi/2))) * sum_k exp(N f_N((2k+1)/(2N)))."""
    cp = make_cusp(cp)
    ctx = PotentialContext(cp, int(n))
    x = (2 * np.arange(n) + 1) / (2 * n)
    exponents = n * f_n(x, ctx, quad)
    return logsumexp_complex(exponents) / (2 * cmath.sinh(cp.xi / 2))


# ---------------------------------------------------------------------------
# limit potential


def big_f(z, cp):
    """F(z) = (L2(g(1-z)) - L2(g(1+z)))/xi - xi z + 2 pi i z."""
    cp = make_cusp(cp)
    xi = cp.xi
    g = xi / (2j * math.pi)
    arr = np.asarray(z, dtype=complex)
    out = (l2(g * (1 - arr)) - l2(g * (1 + arr))) / xi - xi * arr + 2j * math.pi * arr
    return complex(out) if arr.ndim == 0 else out


def big_f_closed(z, cp):
    """Dilogarithm form of F, valid when |Re(xi z)| <= a."""
    cp = make_cusp(cp)
    return big_g(cp.xi * np.asarray(z, dtype=complex), cp)


def big_f_prime(z, cp) -> complex:
    """F'(z) from its logarithmic closed forms.

    log(2cosh xi - 2cosh(xi z)) when |Re(xi z)| < a, and
    log(1 - e^{-xi-xi z}) + log(1 - e^{xi-xi z}) + xi z + pi i when
    Re(xi z) >= a.  F is odd, so F' is even and Re(xi z) <= -a reduces to
    the previous case.
    """
    cp = make_cusp(cp)
    return big_g_prime(cp.xi * complex(z), cp) * cp.xi


def big_g(zz, cp):
    """G(Z) = F(Z / xi); accepts arrays."""
    cp = make_cusp(cp)
    xi = cp.xi
    arr = np.asarray(zz, dtype=complex)
    # the closed form extends continuously to |Re Z| = a, where F itself
    # would need L2 at the end of its cut
    inside = np.abs(arr.real) <= cp.a
    out = np.empty_like(arr)
    w = arr[inside]
    out[inside] = (dilog(np.exp(-xi - w)) - dilog(np.exp(-xi + w))) / xi + w
    if not inside.all():
        out[~inside] = big_f(arr[~inside] / xi, cp)
    return complex(out) if arr.ndim == 0 else out


def big_g_prime(zz, cp) -> complex:
    """G'(Z) = F'(Z / xi) / xi."""
    cp = make_cusp(cp)
    xi = cp.xi
    zz = complex(zz)
    if abs(zz.real) < cp.a:
        arg = 2 * cmath.cosh(xi) - 2 * cmath.cosh(zz)
        if arg == 0:
            raise DomainError("log singularity of G'")
        return principal_log(arg) / xi
    if zz.real < 0:
        zz = -zz
    f1 = 1 - cmath.exp(-xi - zz)
    f2 = 1 - cmath.exp(xi - zz)
    if f1 == 0 or f2 == 0:
        raise DomainError("log singularity of G'")
    return (principal_log(f1) + principal_log(f2) + zz + 1j * math.pi) / xi
