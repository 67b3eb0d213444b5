import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import sample_xi
from fig8.errors import DomainError
from fig8.figure_eight_core import action_s, colored_jones, make_cusp
from fig8.quantum_dilog import (
    PotentialContext,
    QuadratureSpec,
    big_f,
    big_f_closed,
    big_f_prime,
    big_g,
    big_g_prime,
    f_n,
    in_potential_domain,
    in_strip,
    jones_via_potential,
    make_context,
    t_n,
)
from fig8.special_functions import l1, l2

XI = 1 + 0.5j
INTERIOR = [0.3 + 0.1j, 0.5, 0.7 - 0.1j, 0.2 - 0.05j, 0.85 + 0.05j]


def test_quadrature_spec_validation():
    with pytest.raises(DomainError):
        QuadratureSpec(tol=0)
    with pytest.raises(DomainError):
        QuadratureSpec(max_panels=4)
    with pytest.raises(DomainError):
        QuadratureSpec(tail_safety=0.5)


def test_context_requires_positive_gamma():
    ctx = make_context(XI, 10)
    assert abs(ctx.gamma.real - 0.5 / (2 * math.pi)) < 1e-15
    with pytest.raises(DomainError):
        make_context(1 - 0.5j, 10)
    with pytest.raises(DomainError):
        make_context(XI, 0)


def test_strip_bounds():
    ctx = make_context(XI, 20)
    half = ctx.gamma.real / 40
    assert in_strip(0.5, ctx)
    assert in_strip(-0.5 * half, ctx)
    assert not in_strip(-2 * half, ctx)
    assert not in_strip(1 + 2 * half, ctx)
    with pytest.raises(DomainError):
        t_n(1.5, ctx)


def test_functional_equation_example():
    n = 20
    ctx = make_context(XI, n)
    g = ctx.gamma
    z = 0.4 + 0.1j
    lhs = cmath.exp(t_n(z - g / (2 * n), ctx) - t_n(z + g / (2 * n), ctx))
    assert abs(lhs - (1 - cmath.exp(2j * math.pi * z))) < 1e-8


def test_functional_equation_all_j():
    n = 15
    ctx = make_context(XI, n)
    g = ctx.gamma
    worst = 0.0
    for j in range(1, 2 * n):
        ratio = cmath.exp(t_n((j - 0.5) * g / n, ctx) - t_n((j + 0.5) * g / n, ctx))
        worst = max(worst, abs(ratio - (1 - cmath.exp(j * XI / n))))
    assert worst < 1e-7


def test_tail_rotation_does_not_change_value():
    ctx = make_context(XI, 15)
    z = ctx.gamma / 30
    a = t_n(z, ctx)
    b = t_n(z, ctx, QuadratureSpec(rotate_tails=False))
    assert abs(a - b) < 1e-9


def test_vectorized_t_n_matches_scalar():
    ctx = make_context(XI, 12)
    z = np.array([0.3, 0.5 + 0.1j])
    out = t_n(z, ctx)
    assert out.shape == (2,)
    assert abs(out[1] - t_n(0.5 + 0.1j, ctx)) == 0


@pytest.mark.parametrize("z", INTERIOR)
def test_t_n_limit_rate(z):
    errs = []
    for n in (50, 100, 200):
        errs.append(abs(t_n(z, make_context(XI, n)) - n / XI * l2(z)))
    for n, e in zip((50, 100, 200), errs):
        assert e * n < 1.0
    assert 0.4 <= errs[1] / errs[0] <= 0.6
    assert 0.4 <= errs[2] / errs[1] <= 0.6


@pytest.mark.parametrize("z", INTERIOR)
def test_t_n_derivative_rate(z):
    h = 1e-4
    errs = []
    for n in (50, 100, 200):
        ctx = make_context(XI, n)
        fd = (t_n(z + h, ctx) - t_n(z - h, ctx)) / (2 * h)
        errs.append(abs(fd + n / ctx.gamma * l1(z)))
    assert 0.4 <= errs[1] / errs[0] <= 0.6
    assert 0.4 <= errs[2] / errs[1] <= 0.6


@pytest.mark.parametrize("z", [w * 0.5 for w in INTERIOR])
def test_f_n_to_big_f_rate(z):
    errs = [abs(f_n(z, make_context(XI, n)) - big_f(z, XI)) for n in (50, 100, 200)]
    assert 0.2 <= errs[1] / errs[0] <= 0.3
    assert 0.2 <= errs[2] / errs[1] <= 0.3


def test_f_n_domain():
    ctx = make_context(XI, 10)
    assert in_potential_domain(0.5, ctx)
    assert not in_potential_domain(1.5, ctx)
    with pytest.raises(DomainError):
        f_n(1.5, ctx)


# --- J_N through the potential ------------------------------------------


def test_jones_via_potential_examples():
    for xi in (1 + 0.5j, 0.8 + 0.4j):
        a = jones_via_potential(10, xi)
        assert abs(a.ratio_to(colored_jones(10, xi)) - 1) < 1e-6
    assert abs(jones_via_potential(1, XI).to_complex() - 1) < 1e-10


def test_jones_via_potential_all_small_n(rng):
    for xi in [1 + 0.5j, 0.8 + 0.4j] + sample_xi(rng, 3):
        for n in range(2, 13):
            a = jones_via_potential(n, xi)
            assert abs(a.ratio_to(colored_jones(n, xi)) - 1) < 1e-6


# --- limit potential ------------------------------------------------------


def test_big_f_examples():
    cp = make_cusp(XI)
    assert abs(big_f(0, cp)) < 1e-15
    assert abs(big_f(cp.sigma, cp) - action_s(cp) / XI) < 1e-12
    assert abs(big_f_prime(cp.sigma, cp)) < 1e-12
    assert abs(big_f_prime(0, cp) - cmath.log(2 * cmath.cosh(XI) - 2)) < 1e-14


def test_big_f_closed_form_agrees(rng):
    for xi in sample_xi(rng, 20):
        cp = make_cusp(xi)
        for _ in range(5):
            z = complex(rng.uniform(-0.9, 0.9), rng.uniform(-0.3, 0.3))
            if abs((xi * z).real) >= cp.a:
                continue
            try:
                direct = big_f(z, cp)
            except DomainError:
                continue
            assert abs(big_f_closed(z, cp) - direct) < 1e-11 * (1 + abs(direct))


def test_big_f_prime_against_finite_difference(rng):
    cp = make_cusp(1.5 + 0.5j)
    h = 1e-5
    count = 0
    while count < 20:
        z = complex(rng.uniform(-0.5, 1.4), rng.uniform(-0.4, 0.4))
        if abs(z - 1) < 0.1:
            continue  # log singularity of F' at z = 1 spoils the difference quotient
        try:
            fd = (big_f(z + h, cp) - big_f(z - h, cp)) / (2 * h)
            exact = big_f_prime(z, cp)
        except DomainError:
            continue
        assert abs(fd - exact) < 1e-8 * (1 + abs(exact))
        count += 1


@settings(max_examples=100, deadline=None)
@given(st.floats(-0.9, 0.9), st.floats(-0.3, 0.3))
def test_big_f_is_odd(x, y):
    cp = make_cusp(XI)
    z = complex(x, y)
    try:
        a, b = big_f(z, cp), big_f(-z, cp)
    except DomainError:
        return
    assert abs(a + b) < 1e-12 * (1 + abs(a))


def test_big_g_identities(rng):
    cp = make_cusp(XI)
    assert abs(big_g(0, cp)) < 1e-15
    assert abs(big_g_prime(cp.phi, cp)) < 1e-14
    for _ in range(20):
        z = complex(rng.uniform(-1.2, 1.2), rng.uniform(-0.3, 0.3))
        try:
            want = big_f(z, cp)
        except DomainError:
            continue
        assert abs(big_g(XI * z, cp) - want) < 1e-13 * (1 + abs(want))


def test_context_object_shape():
    ctx = PotentialContext(make_cusp(XI), 7)
    assert ctx.n == 7
