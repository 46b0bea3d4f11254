"""Triangle meshes of helicoidal surfaces and singular-locus polylines.

Files are plain Wavefront OBJ (``v`` and ``f`` records only) and CSV with a
header row; everything is written atomically through a temporary file in
the destination directory.
"""
import csv
import io
import os
import tempfile
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DomainError, NotSingularError
from .helicoid import HelicoidalSurface, Kind
from .minkowski import CausalCharacter
from .tolerance import DEFAULT_TOL

COORD_FMT = "{:.17g}"


def default_v_range(kind):
    """One full turn for circular screws, [-2, 2] for hyperbolic ones."""
    return (-np.pi, np.pi) if Kind(kind) is Kind.TYPE1 else (-2.0, 2.0)


@dataclass
class SurfaceMesh:
    vertices: np.ndarray  # (nu*nv, 3), row-major in (u, v)
    causal: list          # CausalCharacter per vertex
    faces: np.ndarray     # (F, 3) zero-based vertex indices
    nu: int
    nv: int
    u: np.ndarray
    v: np.ndarray

    def check(self):
        n = len(self.vertices)
        assert n == self.nu * self.nv == len(self.causal)
        assert len(self.faces) == 2 * (self.nu - 1) * (self.nv - 1)
        assert self.faces.min() >= 0 and self.faces.max() < n
        f = np.sort(self.faces, axis=1)
        assert np.all(f[:, 0] != f[:, 1]) and np.all(f[:, 1] != f[:, 2])

    def vertex_index(self, i, j):
        return i * self.nv + j


@dataclass
class SingularLocus:
    u0: float
    v: np.ndarray
    points: np.ndarray  # (n, 3)
    cusp_type: str


def grid_faces(nu, nv):
    """Two triangles per grid cell for a row-major nu x nv vertex grid."""
    i, j = np.meshgrid(np.arange(nu - 1), np.arange(nv - 1), indexing="ij")
    v00 = (i * nv + j).ravel()
    v01 = v00 + 1
    v10 = v00 + nv
    v11 = v10 + 1
    tri = np.stack([np.stack([v00, v10, v11], 1), np.stack([v00, v11, v01], 1)], 1)
    return tri.reshape(-1, 3)


def _check_range(rng, name):
    lo, hi = map(float, rng)
    if not (np.isfinite(lo) and np.isfinite(hi) and lo < hi):
        raise ValueError(f"{name} must satisfy min < max, got {rng}")
    return lo, hi


def sample_mesh(s: HelicoidalSurface, u_range=None, v_range=None, nu=64, nv=64,
                tol=DEFAULT_TOL):
    """Sample ``s`` on a uniform nu x nv grid with per-vertex causal tags."""
    if nu < 2 or nv < 2:
        raise ValueError("nu and nv must both be >= 2")
    u_lo, u_hi = _check_range(u_range or s.curve.domain, "u_range")
    v_lo, v_hi = _check_range(v_range or default_v_range(s.kind), "v_range")
    us = np.linspace(u_lo, u_hi, nu)
    vs = np.linspace(v_lo, v_hi, nv)
    rows, tags = [], []
    for u in us:
        try:
            rows.append(s.evaluate(u, vs))
            tag = s.causal_character(u, tol=tol)
        except DomainError as exc:
            raise DomainError(f"cannot evaluate surface at (u={u!r}, v={vs[0]!r}..{vs[-1]!r}): {exc}",
                              path=exc.path) from exc
        tags.extend([tag] * nv)
    mesh = SurfaceMesh(np.concatenate(rows), tags, grid_faces(nu, nv), nu, nv, us, vs)
    return mesh


def singular_locus(s: HelicoidalSurface, u0, v_range=None, n=64, cusp_type=None,
                   tol=DEFAULT_TOL):
    """Polyline of the singular curve {u = u0} sampled at ``n`` values of v.

    ``cusp_type`` defaults to the classification of (u0, v).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not s.is_singular(u0, tol)[0]:
        raise NotSingularError(f"the surface is regular at u={u0}")
    if cusp_type is None:
        from .singularity import classify_cuspidal_edge
        cusp_type = classify_cuspidal_edge(s, u0, tol).edge_type.edge_label
    v_lo, v_hi = _check_range(v_range or default_v_range(s.kind), "v_range")
    vs = np.linspace(v_lo, v_hi, n)
    return SingularLocus(float(u0), vs, s.evaluate(u0, vs), cusp_type)


# -- file output --------------------------------------------------------------

def write_text_atomic(path, text):
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except OSError as exc:
        raise OSError(exc.errno, f"cannot write {path}: {exc.strerror}") from exc


def _fmt(x):
    return COORD_FMT.format(float(x) + 0.0)  # no "-0" in files


def obj_text(vertices, faces=None, polyline=False):
    out = io.StringIO()
    for x, y, z in vertices:
        out.write(f"v {_fmt(x)} {_fmt(y)} {_fmt(z)}\n")
    if faces is not None:
        for a, b, c in np.asarray(faces) + 1:
            out.write(f"f {a} {b} {c}\n")
    if polyline and len(vertices) > 1:
        out.write("l " + " ".join(str(i + 1) for i in range(len(vertices))) + "\n")
    return out.getvalue()


def export_obj(obj, path):
    """Write a :class:`SurfaceMesh` (triangles) or :class:`SingularLocus` (polyline)."""
    if isinstance(obj, SurfaceMesh):
        write_text_atomic(path, obj_text(obj.vertices, obj.faces))
    elif isinstance(obj, SingularLocus):
        write_text_atomic(path, obj_text(obj.points, polyline=True))
    else:
        raise TypeError(f"cannot export {type(obj).__name__} as OBJ")


def causal_csv_text(mesh):
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["vertex_index", "tag"])
    for i, tag in enumerate(mesh.causal):
        w.writerow([i, tag.value])
    return out.getvalue()


def export_causal_csv(mesh, path):
    write_text_atomic(path, causal_csv_text(mesh))


def locus_csv_text(locus):
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["u", "v", "x", "y", "z", "type"])
    for v, (x, y, z) in zip(locus.v, locus.points):
        w.writerow([_fmt(locus.u0), _fmt(v), _fmt(x), _fmt(y), _fmt(z), locus.cusp_type])
    return out.getvalue()


def export_csv(locus, path):
    write_text_atomic(path, locus_csv_text(locus))


def read_obj(path):
    """Vertices (n, 3) and zero-based triangle faces (m, 3) of an OBJ file."""
    verts, faces = [], []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            parts = line.split()
            if not parts:
                continue
            if parts[0] == "v":
                verts.append([float(t) for t in parts[1:4]])
            elif parts[0] == "f":
                faces.append([int(t.split("/")[0]) - 1 for t in parts[1:4]])
    return np.array(verts, dtype=float).reshape(-1, 3), np.array(faces, dtype=int).reshape(-1, 3)
