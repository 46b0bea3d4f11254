"""
Four kinds of cuspidal edge
===========================

Small changes in where the curve meets the screw axis, and in how fast
beta vanishes, give the four cusp types the classifier knows about.
Every bundled curve is swept and classified here, and the profile curves
are drawn if matplotlib happens to be installed.
"""
import numpy as np

from frontal_helicoid import load_surface
from frontal_helicoid.curvespec import bundled_names
from frontal_helicoid.singularity import classify_surface, profile_curve_jet

rows = []
for name in bundled_names():
    s = load_surface(name)
    for r in classify_surface(s)[0]:
        rows.append((name, r.u0, r.scope, r.fast.edge_label, r.oracle.edge_label))

width = max(len(r[0]) for r in rows)
for name, u0, scope, fast, oracle in rows:
    flag = "" if fast == oracle else "  <-- disagree"
    print(f"{name:<{width}}  u0={u0: .1e}  {oracle:<22s} {scope}{flag}")

# A small Taylor picture of each profile curve near its singular point.
try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    names = ["type1-cusp23", "example-5.1", "type1-cusp34", "type1-cusp35"]
    fig, axes = plt.subplots(1, 4, figsize=(12, 3))
    t = np.linspace(-0.6, 0.6, 201)
    for ax, name in zip(axes, names):
        gx, gy = profile_curve_jet(load_surface(name), 0.0, order=5)
        ax.plot(np.polyval(gx.coeffs[::-1], t), np.polyval(gy.coeffs[::-1], t))
        ax.set_title(name)
    fig.tight_layout()
    fig.savefig("cusp_zoo.png", dpi=120)
    print("wrote cusp_zoo.png")
