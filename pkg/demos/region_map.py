"""Text map of the parameter plane, coloured by asymptotic regime.

Each character is one xi = a + bi.  Rows run from b near pi/2 (top) down to
b near 0, columns from a = 0 to a = 2.5.

    python3 demos/region_map.py
"""
import math

import numpy as np

from fig8 import KAPPA, classify

GLYPH = {
    "OutsideXi": " ",
    "OmegaCapXi": ".",
    "OmegaBoundary": ":",
    "GammaMinus": "-",
    "GammaZero": "0",
    "GammaPlus": "+",
    "GammaTildeMinus": "m",
    "GammaTildeZero": "o",
    "GammaTildePlus": "p",
}

cols, rows = 72, 24
a_vals = np.linspace(0.02, 2.5, cols)
b_vals = np.linspace(math.pi / 2 - 0.02, 0.02, rows)

for b in b_vals:
    line = "".join(GLYPH[classify(complex(a, b), zero_tol=2e-3)[0].value] for a in a_vals)
    print(f"{b:5.2f} |{line}|")
print(" " * 7 + f"a from {a_vals[0]:.2f} to {a_vals[-1]:.2f}; kappa = {KAPPA:.6f} sits on the bottom edge")
print()
for name, g in GLYPH.items():
    print(f"  {g!r}  {name}")
# lower-case letters mark the part of the plane where the technical
# hypothesis fails and the statement is only conjectural
