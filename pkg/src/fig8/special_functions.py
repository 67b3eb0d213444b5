"""Complex log, sqrt and dilogarithm with fixed branch cuts.

log and sqrt are cut along (-inf, 0) and take the limit from above on the
cut, so log(-x) = log x + pi*i and sqrt(-x) = i*sqrt(x).  Li2 is cut along
(1, inf) and on the cut Im Li2(x) = -pi*log(x).

Every function accepts a scalar or an array and returns the same shape.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import bernoulli

from .errors import DomainError

PI2_6 = math.pi ** 2 / 6

# Li2(z) = sum_n B_n u^(n+1) / (n+1)!  with  u = -log(1-z), valid for |u| < 2*pi.
_NB = 40
_BERN_COEF = np.array(
    [b / math.factorial(n + 1) for n, b in enumerate(bernoulli(_NB))]
)
_SERIES_TERMS = 60


def _as_complex_array(z):
    arr = np.asarray(z, dtype=complex)
    # Fold a signed zero imaginary part onto +0 so that negative reals sit
    # on the upper lip of the cut.
    imag = np.where(arr.imag == 0, 0.0, arr.imag)
    return arr.real + 1j * imag, arr.ndim == 0


def _out(arr, scalar):
    return complex(arr) if scalar else arr


def principal_log(z):
    """Logarithm with Im in (-pi, pi]; raises DomainError at 0."""
    arr, scalar = _as_complex_array(z)
    if np.any(arr == 0):
        raise DomainError("log of zero")
    return _out(np.log(arr), scalar)


def principal_sqrt(z):
    """Square root with Re >= 0, and Im >= 0 whenever Re == 0."""
    arr, scalar = _as_complex_array(z)
    return _out(np.sqrt(arr), scalar)


def _power_series(z):
    # Horner form of sum_{n=1}^{K} z^n / n^2
    acc = np.zeros_like(z)
    for n in range(_SERIES_TERMS, 0, -1):
        acc = z * (1.0 / (n * n) + acc)
    return acc


def _bernoulli_series(u):
    acc = np.zeros_like(u)
    for c in _BERN_COEF[::-1]:
        acc = u * (c + acc)
    return acc


def _dilog_unit_left(v):
    """Li2 for |v| <= 1 and Re v <= 1/2."""
    out = np.empty_like(v)
    small = np.abs(v) <= 0.5
    out[small] = _power_series(v[small])
    rest = ~small
    out[rest] = _bernoulli_series(-np.log(1.0 - v[rest]))
    return out


def _dilog_unit(w):
    """Li2 for |w| <= 1."""
    out = np.empty_like(w)
    refl = w.real > 0.5
    left = ~refl
    out[left] = _dilog_unit_left(w[left])
    wr = w[refl]
    vr = 1.0 - wr
    # Li2(w) = pi^2/6 - log(w) log(1-w) - Li2(1-w)
    prod = np.zeros_like(wr)
    nz = vr != 0
    prod[nz] = np.log(wr[nz]) * np.log(vr[nz])
    out[refl] = PI2_6 - prod - _dilog_unit_left(vr)
    return out


def dilog(z):
    """Dilogarithm Li2(z) = -int_0^z log(1-t)/t dt, cut along (1, inf)."""
    arr, scalar = _as_complex_array(z)
    flat = np.atleast_1d(arr).ravel()
    out = np.empty_like(flat)
    big = np.abs(flat) > 1.0
    out[~big] = _dilog_unit(flat[~big])
    zb = flat[big]
    if zb.size:
        # Li2(z) = -pi^2/6 - log(-z)^2 / 2 - Li2(1/z)
        lg = principal_log(-zb)
        out[big] = -PI2_6 - 0.5 * lg * lg - _dilog_unit(1.0 / zb)
    out = out.reshape(arr.shape)
    return _out(out, scalar)


def _check_l_domain(arr):
    on_axis = arr.imag == 0
    bad = on_axis & ((arr.real <= 0) | (arr.real >= 1))
    if np.any(bad):
        raise DomainError("argument on (-inf, 0] or [1, inf)")


def l1(z):
    """log(1 - e^{2 pi i z}) continued holomorphically to the lower half plane."""
    arr, scalar = _as_complex_array(z)
    _check_l_domain(arr)
    upper = arr.imag >= 0
    out = np.empty_like(arr)
    zu = arr[upper]
    out[upper] = principal_log(-np.expm1(2j * np.pi * zu))
    zl = arr[~upper]
    out[~upper] = (
        2j * np.pi * zl - 1j * np.pi + principal_log(-np.expm1(-2j * np.pi * zl))
    )
    return _out(out, scalar)


def l2(z):
    """Li2(e^{2 pi i z}) continued holomorphically to the lower half plane."""
    arr, scalar = _as_complex_array(z)
    _check_l_domain(arr)
    upper = arr.imag >= 0
    out = np.empty_like(arr)
    out[upper] = dilog(np.exp(2j * np.pi * arr[upper]))
    zl = arr[~upper]
    pi2 = np.pi ** 2
    out[~upper] = (
        2 * pi2 * zl * zl - 2 * pi2 * zl + pi2 / 3 - dilog(np.exp(-2j * np.pi * zl))
    )
    return _out(out, scalar)


def l2_derivative_check(z: complex, h: float) -> float:
    """Residual of d/dz l2 = -2 pi i l1 using a central difference of step h."""
    if not 1e-8 <= h <= 1e-4:
        raise DomainError("step h must lie in [1e-8, 1e-4]")
    z = complex(z)
    fd = (l2(z + h) - l2(z - h)) / (2 * h)
    return abs(fd + 2j * math.pi * l1(z))
