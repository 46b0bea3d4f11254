"""
A (2,5)-cuspidal edge on a screw surface
========================================

The bundled curve ``example-5.1`` is a spacelike Legendre curve whose
speed function beta vanishes at u = 0 while the curve sits on the screw
axis.  Sweeping it along the axis gives a surface whose singular set is
the axis itself.
"""
import numpy as np

from frontal_helicoid import load_surface
from frontal_helicoid.singularity import classify_surface, profile_curve_jet

s = load_surface("example-5.1")
print(s)

# beta = u, so the sweep finds exactly one singular parameter
reports, suspects = classify_surface(s)
(r,) = reports
print("singular at u0 =", r.u0, "because of", sorted(x.value for x in r.reasons))

# The condition record: which quantities vanish at u0
for key, value in sorted(r.conditions.items()):
    print(f"  {key:>14s} = {value: .3e}")

# Two independent routes reach the same answer: the case analysis on
# (beta, l, a, x2) and a direct look at the profile curve's jets.
print("fast path :", r.fast.edge_label)
print("oracle    :", r.oracle.edge_label)

# The profile curve gamma_1 near u0 = 0 has a vanishing first derivative:
gx, gy = profile_curve_jet(s, 0.0, order=5)
print("gamma_1 derivatives at 0:")
print(np.array([gx.derivatives(), gy.derivatives()]).T.round(6))
