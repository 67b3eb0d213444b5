"""Recompute the auxiliary constants behind the region boundary argument.

Every line shows the computed value next to the published one.  One of
them disagrees in the second decimal; an independent high precision
derivative sides with the computed value.

    python3 demos/appendix_constants.py
"""
from fig8.region_atlas import appendix_numeric_oracles

rep = appendix_numeric_oracles()
for name, item in rep["values"].items():
    mark = "ok " if item["ok"] else "BAD"
    print(f"{mark} {name:18s} computed {float(item['computed']):+.7f}   printed {item['printed']:+}")
print()
bad = [k for k, ok in rep["signs"].items() if not ok]
print(f"{len(rep['signs'])} polynomial sign checks, {len(bad)} failures")
