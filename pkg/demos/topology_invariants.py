"""Riley representations of the knot group and the invariants read off them.

    python3 demos/topology_invariants.py
"""
import cmath
import math

from fig8 import KAPPA, check_relation, cs_invariant, longitude_eigenvalue, longitude_matrix, make_cusp, riley_rep, v_of

xi = 1 + 0.5j
for sign in (1, -1):
    rep = riley_rep(xi, sign)
    m = longitude_matrix(rep)
    print(f"sign {sign:+d}: relation residual {check_relation(rep):.1e}")
    print(f"   longitude  [[{m.m11:.6f}, {m.m12:.6f}],")
    print(f"               [{m.m21:.1e}, {m.m22:.6f}]]")
ell = longitude_eigenvalue(xi)
print(f"ell(xi) = {ell:.6f}, -exp(-v/2) = {-cmath.exp(-v_of(xi) / 2):.6f}")
print()

print(f"CS(1+0.5i) = {cs_invariant(make_cusp(xi)):.8f}")
print(f"CS(kappa)  = {cs_invariant(make_cusp(KAPPA)):.8f}   (-kappa pi i / 2 = {-KAPPA * math.pi / 2:.8f}i)")
print(f"v(kappa)   = {v_of(KAPPA):.8f}")
