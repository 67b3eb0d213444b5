"""The quantum dilogarithm T_N and what it turns into as N grows.

    python3 demos/quantum_dilog_identities.py
"""
import cmath

from fig8 import colored_jones, jones_via_potential, l2, make_context, t_n

xi = 1 + 0.5j

# difference equation: T_N(z - g/2N) - T_N(z + g/2N) = log(1 - e^{2 pi i z})
n = 15
ctx = make_context(xi, n)
g = ctx.gamma
worst = max(
    abs(cmath.exp(t_n((j - 0.5) * g / n, ctx) - t_n((j + 0.5) * g / n, ctx)) - (1 - cmath.exp(j * xi / n)))
    for j in range(1, 2 * n)
)
print(f"difference equation at N = {n}: worst residual {worst:.2e}")

# T_N(z) ~ (N / xi) L2(z)
for m in (25, 50, 100, 200):
    err = abs(t_n(0.5, make_context(xi, m)) - m / xi * l2(0.5))
    print(f"N = {m:3d}: |T_N(1/2) - N L2(1/2)/xi| = {err:.3e}")

# J_N rebuilt from T_N agrees with the finite sum
for m in (3, 7, 12):
    a, b = jones_via_potential(m, xi), colored_jones(m, xi)
    print(f"N = {m:2d}: via T_N {a.to_complex():.10f}   direct {b.to_complex():.10f}")
