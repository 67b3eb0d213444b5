"""Scalar quantities attached to the figure-eight knot.

The cusp parameter xi = a + b i determines everything else: the second
eigenvalue parameter phi with cosh(phi) = cosh(xi) - 1/2, the action S,
the torsion T, the longitude eigenvalue and the colored Jones values
J_N at q = exp(xi / N).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import mpmath
import numpy as np

from .errors import DegenerateSaddleError, DomainError, PoleError
from .special_functions import dilog, principal_log, principal_sqrt

KAPPA = math.acosh(1.5)

# |(2cosh xi - 3)(2cosh xi + 1)| below this (relative) counts as a branch point.
BRANCH_POINT_TOL = 1e-13

_EPS = np.finfo(float).eps


def _wrap(theta: float) -> float:
    """Reduce an angle to (-pi, pi]."""
    t = math.remainder(theta, 2 * math.pi)
    if t <= -math.pi:
        t += 2 * math.pi
    return t


@dataclass(frozen=True)
class LogComplex:
    """A complex number stored as (log|z|, arg z).

    Values like exp(N S / xi) overflow a double for N in the hundreds;
    carrying the logarithm keeps them finite.
    """

    log_mag: float
    arg: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "log_mag", float(self.log_mag))
        object.__setattr__(self, "arg", _wrap(float(self.arg)))

    @classmethod
    def from_complex(cls, z) -> "LogComplex":
        z = complex(z)
        if z == 0:
            return cls(-math.inf, 0.0)
        return cls(math.log(abs(z)), cmath.phase(z))

    @classmethod
    def from_log(cls, w) -> "LogComplex":
        """exp(w) for a complex exponent w."""
        w = complex(w)
        return cls(w.real, w.imag)

    def to_complex(self) -> complex:
        """Plain complex value; raises OverflowError when too large."""
        if self.log_mag == -math.inf:
            return 0j
        return cmath.rect(math.exp(self.log_mag), self.arg)

    def __mul__(self, other) -> "LogComplex":
        if not isinstance(other, LogComplex):
            other = LogComplex.from_complex(other)
        return LogComplex(self.log_mag + other.log_mag, self.arg + other.arg)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "LogComplex":
        if not isinstance(other, LogComplex):
            other = LogComplex.from_complex(other)
        return LogComplex(self.log_mag - other.log_mag, self.arg - other.arg)

    def ratio_to(self, other: "LogComplex") -> complex:
        """self / other as an ordinary complex number."""
        q = self / other
        return q.to_complex()


def logsumexp_complex(logs) -> LogComplex:
    """sum(exp(logs)) for complex exponents, in the order given."""
    logs = np.asarray(logs, dtype=complex).ravel()
    if logs.size == 0:
        return LogComplex(-math.inf)
    m = float(np.max(logs.real))
    if m == -math.inf:
        return LogComplex(-math.inf)
    s = complex(np.sum(np.exp(logs - m)))
    if s == 0:
        return LogComplex(-math.inf)
    return LogComplex(m + math.log(abs(s)), cmath.phase(s))


def _raw_radicand(xi: complex) -> complex:
    ch = cmath.cosh(xi)
    return (2 * ch - 3) * (2 * ch + 1)


def _near_branch_point(xi: complex) -> bool:
    ch = cmath.cosh(xi)
    return abs(_raw_radicand(xi)) <= BRANCH_POINT_TOL * (1 + abs(ch) ** 2)


def radicand(xi) -> complex:
    """(2cosh xi - 3)(2cosh xi + 1), set to exactly 0 within rounding of a root.

    The square root of this quantity is ill conditioned near its zeros; a
    residue of 1e-16 would otherwise turn into an error of 1e-8 in phi.
    """
    if isinstance(xi, CuspParameter):
        xi = xi.xi
    xi = complex(xi)
    if _near_branch_point(xi):
        return 0j
    return _raw_radicand(xi)


def phi_of(xi: complex) -> complex:
    """The solution of cosh(phi) = cosh(xi) - 1/2 used throughout."""
    xi = complex(xi)
    ch = cmath.cosh(xi)
    return principal_log(ch - 0.5 + 0.5 * principal_sqrt(radicand(xi)))


def in_xi_region(xi: complex) -> bool:
    """a > 0, 0 < b < pi/2 and cosh(a) cos(b) > 1/2."""
    a, b = xi.real, xi.imag
    return a > 0 and 0 < b < math.pi / 2 and math.cosh(a) * math.cos(b) > 0.5


@dataclass(frozen=True)
class CuspParameter:
    xi: complex
    a: float
    b: float
    alpha: float
    beta: float
    phi: complex
    sigma: complex
    in_xi: bool
    branch_point: str | None = field(default=None)

    @property
    def c(self) -> float:
        return self.phi.real

    @property
    def d(self) -> float:
        return self.phi.imag


def make_cusp(xi) -> CuspParameter:
    """Validate xi and cache its derived scalars.

    branch_point is "torsion_pole" when cosh xi = 3/2 and "affine_point"
    when cosh xi = -1/2; phi is still computed in both cases.
    """
    if isinstance(xi, CuspParameter):
        return xi
    xi = complex(xi)
    if not (math.isfinite(xi.real) and math.isfinite(xi.imag)):
        raise DomainError("xi must be finite")
    a, b = xi.real, xi.imag
    phi = phi_of(xi)
    sigma = phi / xi if xi != 0 else complex("nan")
    tag = None
    if _near_branch_point(xi):
        tag = "torsion_pole" if abs(cmath.cosh(xi) - 1.5) < 0.5 else "affine_point"
    return CuspParameter(
        xi=xi,
        a=a,
        b=b,
        alpha=math.cosh(a) * math.cos(b),
        beta=math.sinh(a) * math.sin(b),
        phi=phi,
        sigma=sigma,
        in_xi=in_xi_region(xi),
        branch_point=tag,
    )


# ---------------------------------------------------------------------------
# colored Jones polynomial


def _log1mexp(w):
    """log(1 - e^w) up to a multiple of 2 pi i, without overflow for large Re w."""
    w = np.asarray(w, dtype=complex)
    big = w.real > 0
    # 1 - e^w = -e^w (1 - e^-w)
    flip = np.where(big, -w, w)
    out = principal_log(-np.expm1(flip))
    return np.where(big, out + w + 1j * np.pi, out)


def _jones_float(n: int, xi: complex):
    """Double precision log-space evaluation.

    Returns (value, estimated relative error, log of sum of |terms|).
    """
    k = np.arange(1, n)
    w1 = xi * (n - k) / n
    w2 = xi * (n + k) / n
    zero = (np.expm1(-np.abs(w1.real) + 1j * w1.imag) == 0) | (np.expm1(-np.abs(w2.real) + 1j * w2.imag) == 0)
    if np.any(zero):
        cut = int(np.argmax(zero))
        k, w1, w2 = k[:cut], w1[:cut], w2[:cut]
    steps = -xi + _log1mexp(w1) + _log1mexp(w2) if k.size else np.zeros(0, complex)
    logs = np.concatenate([[0j], np.cumsum(steps)])
    m = float(np.max(logs.real))
    terms = np.exp(logs - m)
    s = complex(np.sum(terms))
    abs_sum = float(np.sum(np.abs(terms)))
    log_abs_sum = m + math.log(abs_sum)
    drift = float(np.sum(np.abs(steps))) + n
    if s == 0:
        return LogComplex(-math.inf), math.inf, log_abs_sum
    est = 4 * _EPS * drift * abs_sum / abs(s)
    return LogComplex(m + math.log(abs(s)), cmath.phase(s)), est, log_abs_sum


def _jones_mp(n: int, xi: complex, dps: int) -> mpmath.mpc:
    with mpmath.workdps(dps):
        x = mpmath.mpc(xi.real, xi.imag)
        q = mpmath.exp(x / n)
        e = mpmath.exp(-x)
        lo = mpmath.exp(x)  # q^(N-k), starts at k = 0
        hi = lo
        term = mpmath.mpc(1)
        total = mpmath.mpc(1)
        for _ in range(1, n):
            lo = lo / q
            hi = hi * q
            term = term * e * (1 - lo) * (1 - hi)
            total += term
        return +total


def colored_jones(n: int, xi, rtol: float = 1e-12) -> LogComplex:
    """J_N of the figure-eight knot at q = exp(xi / N), as a LogComplex.

    Uses the cyclotomic sum
        J_N = sum_{k=0}^{N-1} q^{-kN} prod_{l=1}^{k} (1 - q^{N-l})(1 - q^{N+l}).
    A double precision pass runs first; when its terms cancel too much for
    rtol the sum is redone in extended precision sized from the cancellation.
    """
    if isinstance(xi, CuspParameter):
        xi = xi.xi
    n = int(n)
    if n < 1:
        raise DomainError("N must be a positive integer")
    xi = complex(xi)
    if n == 1 or xi == 0:
        return LogComplex(0.0, 0.0)
    val, est, log_abs_sum = _jones_float(n, xi)
    if est <= rtol:
        return val
    digits = -math.log10(rtol) + math.log10(n) + 10
    dps = int(digits + max(0.0, log_abs_sum) / math.log(10)) + 10
    for _ in range(6):
        tot = _jones_mp(n, xi, dps)
        if tot == 0:
            dps *= 2
            continue
        log_tot = float(mpmath.log(abs(tot)))
        lost = (log_abs_sum - log_tot) / math.log(10)
        if dps >= lost + digits:
            return LogComplex(log_tot, float(mpmath.arg(tot)))
        dps = int(lost + digits) + 10
    return LogComplex(log_tot, float(mpmath.arg(tot)))


def alexander(t) -> complex:
    """Normalized Alexander polynomial -t + 3 - 1/t."""
    t = complex(t)
    if t == 0:
        raise DomainError("Alexander polynomial undefined at t = 0")
    return -t + 3 - 1 / t


# ---------------------------------------------------------------------------
# action, torsion, longitude


def action_s(cp) -> complex:
    """S(xi) = Li2(e^{-xi-phi}) - Li2(e^{-xi+phi}) + xi*phi."""
    cp = make_cusp(cp)
    xi, phi = cp.xi, cp.phi
    return dilog(cmath.exp(-xi - phi)) - dilog(cmath.exp(-xi + phi)) + xi * phi


def action_s_minus(cp) -> complex:
    cp = make_cusp(cp)
    return action_s(cp) + 2j * math.pi * cp.xi


def action_s_plus(cp) -> complex:
    cp = make_cusp(cp)
    return -action_s(cp) + 2j * math.pi * cp.xi


def action_s_derivative(cp) -> complex:
    """dS/dxi = log(2 cosh(xi + phi) - 2)."""
    cp = make_cusp(cp)
    return principal_log(2 * cmath.cosh(cp.xi + cp.phi) - 2)


def torsion(xi) -> complex:
    """T(xi) = 2 / sqrt((2cosh xi + 1)(2cosh xi - 3))."""
    if isinstance(xi, CuspParameter):
        xi = xi.xi
    xi = complex(xi)
    if _near_branch_point(xi):
        raise PoleError("torsion has a pole where cosh xi is 3/2 or -1/2")
    return 2 / principal_sqrt(_raw_radicand(xi))


def v_of(xi) -> complex:
    """v(xi) = 2 dS/dxi - 2 pi i; the ell identity holds when xi is in Xi."""
    return 2 * action_s_derivative(xi) - 2j * math.pi


def v_plus(xi) -> complex:
    return -v_of(xi)


def v_minus(xi) -> complex:
    return v_of(xi) + 4j * math.pi


def longitude_eigenvalue(xi) -> complex:
    """cosh 2xi - cosh xi - 1 - sinh xi * sqrt((2cosh xi - 3)(2cosh xi + 1))."""
    if isinstance(xi, CuspParameter):
        xi = xi.xi
    xi = complex(xi)
    return (
        cmath.cosh(2 * xi)
        - cmath.cosh(xi)
        - 1
        - cmath.sinh(xi) * principal_sqrt(radicand(xi))
    )


def saddle_hessian(cp) -> complex:
    """Second derivative of the limit potential at its saddle.

    Equals -xi*w with w^2 = (2cosh xi + 1)(2cosh xi - 3) and w = 2 sinh(phi)
    in the first quadrant.
    """
    cp = make_cusp(cp)
    if cp.branch_point is not None:
        raise DegenerateSaddleError("phi = 0: the saddle is degenerate")
    if not cp.in_xi:
        raise DomainError("saddle Hessian is only defined for xi in Xi")
    w = principal_sqrt(radicand(cp.xi))
    return -cp.xi * w
