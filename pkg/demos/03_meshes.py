"""
Meshes and singular loci
========================

Sample both bundled examples on a grid, write OBJ files with a causal-tag
sidecar, and write the singular curve as a CSV polyline.  Open the OBJ
files in any mesh viewer; the locus of the first example is the x-axis,
the locus of the second is the time axis.
"""
import collections
import os
import sys

from frontal_helicoid import load_surface
from frontal_helicoid.meshio import (export_causal_csv, export_csv, export_obj,
                                     sample_mesh, singular_locus)

out = sys.argv[1] if len(sys.argv) > 1 else "demo_output"
os.makedirs(out, exist_ok=True)

for name in ("example-5.1", "example-5.2"):
    s = load_surface(name)
    mesh = sample_mesh(s, nu=81, nv=60)
    mesh.check()
    export_obj(mesh, os.path.join(out, f"{name}.obj"))
    export_causal_csv(mesh, os.path.join(out, f"{name}.causal.csv"))

    # u = 0 is a grid row (odd nu on a symmetric domain), so it shows up as degenerate
    counts = collections.Counter(t.value for t in mesh.causal)
    print(name, len(mesh.vertices), "vertices,", len(mesh.faces), "faces,", dict(counts))

    locus = singular_locus(s, 0.0, n=21)
    export_csv(locus, os.path.join(out, f"{name}.locus.csv"))
    print("  locus", locus.cusp_type, "from", locus.points[0].round(3) + 0.0, "to", locus.points[-1].round(3) + 0.0)

print("files in", os.path.abspath(out))
