"""Watch J_N approach its predicted asymptotics in three regimes.

    python3 demos/jones_convergence.py
"""
from fig8 import convergence_study

cases = [
    (1 + 0.5j, "J_N tends to 1/Delta(e^xi), error ~ N^-2"),
    (1.5 + 0.5j, "J_N grows like exp(N S/xi), relative error ~ N^-1"),
    (0.3 + 0.3j, "inside Omega, again 1/Delta with error ~ N^-2"),
]

for xi, story in cases:
    rep = convergence_study(xi, [50, 100, 200, 400])
    print(f"xi = {xi}  [{rep.regime.value}]  {story}")
    for n, ex, err in zip(rep.n_values, rep.exact, rep.errors):
        print(f"   N = {n:4d}   log|J_N| = {ex.log_mag:10.5f}   {rep.error_kind} error = {err:.3e}")
    print(f"   fitted order {rep.fitted_order:+.3f}")
    print()
