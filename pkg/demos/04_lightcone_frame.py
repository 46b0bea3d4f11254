"""
The lightcone frame along a screw surface
=========================================

For a spacelike Legendre curve (delta = 1) the surface carries a moving
frame of two null vectors and one unit spacelike vector.  Here the frame
equations and the twelve basic invariants are checked at random points,
and the timelike example shows the delta = 1 requirement being enforced.
"""
import numpy as np

from frontal_helicoid import load_surface
from frontal_helicoid.errors import DeltaNotOneError

rng = np.random.default_rng(7)
s = load_surface("example-5.1")

f = s.lightcone_frame(0.0, 0.0)
print("l+ =", f.lplus, " l- =", f.lminus, " t =", f.t)

worst = 0.0
for u, v in zip(rng.uniform(-2, 2, 200), rng.uniform(-np.pi, np.pi, 200)):
    worst = max(worst, max(s.frame_residuals(u, v)),
                max(map(abs, s.frame_invariants(u, v).values())))
print(f"largest frame residual over 200 points: {worst:.1e}")

inv = s.basic_invariants(0.7, 1.3)
closed = s.basic_invariants_closed_form(0.7, 1.3)
for (k, x), y in zip(inv.as_dict().items(), closed.as_array()):
    print(f"  {k}: {x: .6f}   closed form {y: .6f}")

try:
    load_surface("example-5.2").lightcone_frame(0.1, 0.0)
except DeltaNotOneError as exc:
    print("timelike curve:", exc)
