"""Representations of the knot group, longitude holonomy, Chern-Simons value.

The group is <x, y | x y^-1 x^-1 y x = y x y^-1 x^-1 y>.  Words are written
with lower case letters for generators and upper case for their inverses,
so the relation reads "xYXyx" = "yxYXy".
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError
from .figure_eight_core import action_s, make_cusp, radicand, v_of
from .special_functions import principal_sqrt

RELATION_LHS = "xYXyx"
RELATION_RHS = "yxYXy"
LONGITUDE_WORD = "xYxyXXyxYX"


@dataclass(frozen=True)
class Matrix2C:
    m11: complex
    m12: complex
    m21: complex
    m22: complex

    def __matmul__(self, o: "Matrix2C") -> "Matrix2C":
        return Matrix2C(
            self.m11 * o.m11 + self.m12 * o.m21,
            self.m11 * o.m12 + self.m12 * o.m22,
            self.m21 * o.m11 + self.m22 * o.m21,
            self.m21 * o.m12 + self.m22 * o.m22,
        )

    def det(self) -> complex:
        return self.m11 * self.m22 - self.m12 * self.m21

    def trace(self) -> complex:
        return self.m11 + self.m22

    def inverse(self) -> "Matrix2C":
        """Adjugate divided by the determinant (exactly the adjugate when det = 1)."""
        d = self.det()
        return Matrix2C(self.m22 / d, -self.m12 / d, -self.m21 / d, self.m11 / d)

    def scaled(self, s: complex) -> "Matrix2C":
        return Matrix2C(s * self.m11, s * self.m12, s * self.m21, s * self.m22)

    def entries(self) -> tuple[complex, complex, complex, complex]:
        return (self.m11, self.m12, self.m21, self.m22)

    def max_abs_diff(self, o: "Matrix2C") -> float:
        return max(abs(p - q) for p, q in zip(self.entries(), o.entries()))


IDENTITY = Matrix2C(1, 0, 0, 1)


@dataclass(frozen=True)
class RileyRep:
    xi: complex
    sign: int
    rho_x: Matrix2C
    rho_y: Matrix2C
    d_val: complex


def riley_parameter(xi, sign: int) -> complex:
    """(-2cosh xi + 3 +- sqrt((2cosh xi - 3)(2cosh xi + 1))) / 2."""
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    xi = complex(xi)
    return 0.5 * (-2 * cmath.cosh(xi) + 3 + sign * principal_sqrt(radicand(xi)))


def riley_rep(xi, sign: int) -> RileyRep:
    xi = complex(xi)
    d = riley_parameter(xi, sign)
    e = cmath.exp(xi / 2)
    einv = cmath.exp(-xi / 2)
    return RileyRep(
        xi=xi,
        sign=sign,
        rho_x=Matrix2C(e, 1, 0, einv),
        rho_y=Matrix2C(e, 0, d, einv),
        d_val=d,
    )


def evaluate_word(rep: RileyRep, word: str) -> Matrix2C:
    """Image of a word; letters x, y and their inverses X, Y."""
    images = {
        "x": rep.rho_x,
        "y": rep.rho_y,
        "X": rep.rho_x.inverse(),
        "Y": rep.rho_y.inverse(),
    }
    out = IDENTITY
    for letter in reversed(word):
        try:
            out = images[letter] @ out
        except KeyError as exc:
            raise DomainError(f"bad letter {letter!r} in word") from exc
    return out


def check_relation(rep: RileyRep) -> float:
    """Distance between the two sides of the relation, up to a global sign."""
    lhs = evaluate_word(rep, RELATION_LHS)
    rhs = evaluate_word(rep, RELATION_RHS)
    return min(lhs.max_abs_diff(rhs), lhs.max_abs_diff(rhs.scaled(-1)))


def longitude_matrix(rep: RileyRep) -> Matrix2C:
    return evaluate_word(rep, LONGITUDE_WORD)


def longitude_corner(xi, sign: int) -> complex:
    """Expected top-right entry -+ 2cosh(xi/2) sqrt((2cosh xi - 3)(2cosh xi + 1))."""
    xi = complex(xi)
    return -sign * 2 * cmath.cosh(xi / 2) * principal_sqrt(radicand(xi))


def _in_closed_xi(cp) -> bool:
    return cp.a > 0 and 0 <= cp.b < math.pi / 2 and cp.alpha > 0.5


def cs_invariant(cp) -> complex:
    """S - xi pi i - xi v / 4, with the real part reduced into (-pi^2/2, pi^2/2].

    Defined for xi in Xi and on its edge b = 0 (which contains kappa).
    """
    cp = make_cusp(cp)
    if not _in_closed_xi(cp):
        raise DomainError("Chern-Simons value needs a > 0, 0 <= b < pi/2, alpha > 1/2")
    raw = action_s(cp) - cp.xi * math.pi * 1j - cp.xi * v_of(cp) / 4
    p2 = math.pi ** 2
    re = -math.remainder(-raw.real, p2)
    if re <= -p2 / 2:
        re += p2
    return complex(re, raw.imag)
