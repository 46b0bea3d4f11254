"""Singular points of helicoidal surfaces and their cuspidal-edge types.

A surface point (u0, v) is classified through the planar profile curve
obtained by untwisting the screw motion:

    type 1:  g1(u) = (x2 cos(x1/lam), x2 sin(x1/lam))
    type 2:  g2(u) = (x1 cosh(x2/lam), x1 sinh(x2/lam))

The surface is an (i, j)-cuspidal edge along {u = u0} exactly when the
profile curve has an (i, j)-cusp at u0.  Two routes are computed for every
singular point:

* the *fast* route reads the type off (beta, beta', l, l', a or b) by the
  closed-form case analysis valid when x2(u0) = 0 (type 1) / x1(u0) = 0
  (type 2), and otherwise classifies gamma itself;
* the *oracle* route differentiates the profile curve with jets and runs the
  generic determinant criteria in :func:`classify_cusp`.
"""
import enum
from dataclasses import dataclass, field
from typing import List, NamedTuple, Optional

import numpy as np
from scipy.optimize import bisect

from . import jet as J
from ._tables import type1_coeffs, type2_coeffs
from .errors import NotSingularError
from .helicoid import HelicoidalSurface, Kind, SingularReason
from .tolerance import DEFAULT_TOL

DEFAULT_GRID = 256
ROOT_XTOL = 1e-12
DEDUP_TOL = 1e-9


class CuspType(enum.Enum):
    CUSP_23 = (2, 3)
    CUSP_25 = (2, 5)
    CUSP_34 = (3, 4)
    CUSP_35 = (3, 5)
    REGULAR = "regular"
    UNCLASSIFIED = "unclassified"

    @property
    def edge_label(self):
        """Name of the corresponding surface singularity, e.g. '(2,5)-cuspidal-edge'."""
        if isinstance(self.value, tuple):
            return f"({self.value[0]},{self.value[1]})-cuspidal-edge"
        return self.value

    @property
    def cusp_label(self):
        if isinstance(self.value, tuple):
            return f"({self.value[0]},{self.value[1]})-cusp"
        return self.value


# -- generic cusp criteria ----------------------------------------------------

def _det(p, q):
    return p[0] * q[1] - p[1] * q[0]


def classify_cusp(derivs, tol=DEFAULT_TOL):
    """Cusp type of a plane curve germ from its derivatives g', ..., g^(5).

    ``derivs`` is a (5, 2) array-like.  Vectors are compared with zero
    relative to the largest derivative norm S, determinants relative to S^2,
    so a germ sampled a hair away from its cusp still classifies cleanly.
    """
    d = np.asarray(derivs, dtype=float)
    if d.shape != (5, 2):
        raise ValueError(f"expected 5 derivative vectors, got shape {d.shape}")
    norms = np.linalg.norm(d, axis=1)
    scale = float(norms.max())
    sq = scale * scale
    if not tol.is_zero(norms[0], scale):
        return CuspType.REGULAR
    g2, g3, g4, g5 = d[1], d[2], d[3], d[4]

    if not tol.is_zero(norms[1], scale):
        if not tol.is_zero(_det(g2, g3), sq):
            return CuspType.CUSP_23
        k = float(g3 @ g2) / float(g2 @ g2)
        if not tol.is_zero(np.linalg.norm(g3 - k * g2), scale * (1.0 + abs(k))):
            return CuspType.UNCLASSIFIED
        w = 3.0 * g5 - 10.0 * k * g4
        if not tol.is_zero(_det(g2, w), sq * (3.0 + 10.0 * abs(k))):
            return CuspType.CUSP_25
        return CuspType.UNCLASSIFIED

    if not tol.is_zero(_det(g3, g4), sq):
        return CuspType.CUSP_34
    if not tol.is_zero(_det(g3, g5), sq):
        return CuspType.CUSP_35
    return CuspType.UNCLASSIFIED


# -- profile curves -----------------------------------------------------------

def profile_curve_jet(s: HelicoidalSurface, u0, order=5):
    """Jets of the untwisted profile curve at ``u0`` by direct jet arithmetic."""
    s.curve.check_domain(u0)
    x1 = s.curve.x1.jet(u0, order)
    x2 = s.curve.x2.jet(u0, order)
    if s.kind is Kind.TYPE1:
        sn, cs = J.sincos(x1 / s.lam)
        return x2 * cs, x2 * sn
    sh, ch = J.sinhcosh(x2 / s.lam)
    return x1 * ch, x1 * sh


def _derivative_vectors(gx, gy, n=5):
    return np.array([[gx.derivative(i), gy.derivative(i)] for i in range(1, n + 1)])


def profile_derivatives(s, u0):
    """g^(1..5) of the profile curve at ``u0`` (oracle route), shape (5, 2)."""
    return _derivative_vectors(*profile_curve_jet(s, u0, 5))


@dataclass(frozen=True)
class ProfileCoeffs:
    """A_1..A_5, B_1..B_5 (type 1) or C_1..C_5, D_1..D_5 (type 2) at one point."""

    kind: Kind
    first: tuple
    second: tuple
    angle: float  # x1/lam (type 1) or x2/lam (type 2)

    def as_matrix(self):
        return np.column_stack([self.first, self.second])

    def reconstruct(self):
        """Profile derivatives g^(1..5) rebuilt from the coefficients."""
        p = np.asarray(self.first)
        q = np.asarray(self.second)
        if self.kind is Kind.TYPE1:
            c, s = np.cos(self.angle), np.sin(self.angle)
            return np.column_stack([p * c + q * s, -q * c + p * s])
        ch, sh = np.cosh(self.angle), np.sinh(self.angle)
        return np.column_stack([p * ch + q * sh, q * ch + p * sh])

    @property
    def det_sign(self):
        """det(g^(i), g^(j)) = det_sign * det[[P_i, Q_i], [P_j, Q_j]]."""
        return -1.0 if self.kind is Kind.TYPE1 else 1.0


def profile_coeffs(s: HelicoidalSurface, u0):
    """Evaluate the closed-form coefficient tables at ``u0``."""
    x1, x2, a, b = s.curve.values(u0)
    l_j, beta_j = s.curve.curvature(u0, 4)
    bt = [beta_j.derivative(i) for i in range(5)]
    ls = [l_j.derivative(i) for i in range(4)]
    if s.kind is Kind.TYPE1:
        first, second = type1_coeffs(a, b, x2, s.lam, bt, ls)
        angle = x1 / s.lam
    else:
        first, second = type2_coeffs(a, b, x1, s.lam, bt, ls)
        angle = x2 / s.lam
    return ProfileCoeffs(s.kind, tuple(map(float, first)), tuple(map(float, second)), float(angle))


def det_identity_check(s: HelicoidalSurface, u0):
    """Largest relative mismatch between det(g^(i), g^(j)) from jets and the
    signed 2x2 coefficient determinant, over all i, j in 1..5."""
    d = profile_derivatives(s, u0)
    pc = profile_coeffs(s, u0)
    m = pc.as_matrix()
    worst = 0.0
    for i in range(5):
        for j in range(5):
            lhs = _det(d[i], d[j])
            rhs = pc.det_sign * _det(m[i], m[j])
            scale = max(np.linalg.norm(d[i]) * np.linalg.norm(d[j]),
                        np.linalg.norm(m[i]) * np.linalg.norm(m[j]))
            if scale > 0:
                worst = max(worst, abs(lhs - rhs) / scale)
    return worst


def table_oracle_residual(s: HelicoidalSurface, u0):
    """Per-order relative error of the reconstructed derivatives, shape (5,)."""
    d = profile_derivatives(s, u0)
    r = profile_coeffs(s, u0).reconstruct()
    err = np.linalg.norm(r - d, axis=1)
    den = np.maximum(np.linalg.norm(d, axis=1), np.finfo(float).tiny)
    return err / den


# -- locating singular points -------------------------------------------------

class SingularPoint(NamedTuple):
    u0: float
    reasons: frozenset


class SuspectedTangentRoot(NamedTuple):
    u: float
    abs_beta: float


class SweepResult(NamedTuple):
    points: List[SingularPoint]
    suspects: List[SuspectedTangentRoot]


def _axis_functions(s):
    """(nu component, profile coordinate) vanishing together on the axis."""
    c = s.curve
    return (c.a, c.x2) if s.kind is Kind.TYPE1 else (c.b, c.x1)


def _sign_change_roots(values, skip, grid, refine):
    """Bisection-refined roots inside every strict sign change of ``values``."""
    sign = np.sign(values)
    out = []
    for i in range(len(grid) - 1):
        if skip[i] or skip[i + 1]:
            continue
        if sign[i] * sign[i + 1] < 0:
            out.append(float(bisect(refine, grid[i], grid[i + 1], xtol=ROOT_XTOL)))
    return out


def _roots(f, df, grid, is_zero):
    """Roots of ``f`` on the grid as ``(simple, tangential)`` lists.

    Simple roots are zero nodes and refined sign changes of f; tangential
    roots are refined sign changes of f' at which f itself tests zero.
    ``f`` and ``df`` map arrays to arrays; ``is_zero(u)`` is the vectorized
    zero test for f.
    """
    fv = f(grid)
    zero = is_zero(grid)
    found = [float(grid[i]) for i in np.flatnonzero(zero)]
    found += _sign_change_roots(fv, zero, grid, lambda t: float(f(t)))
    dv = df(grid)
    dzero = np.zeros(len(grid), dtype=bool)
    tangential = [u for u in _sign_change_roots(dv, dzero, grid, lambda t: float(df(t)))
                  if bool(is_zero(u)) and all(abs(u - r) > DEDUP_TOL for r in found)]
    return found, tangential


def find_singular_points(s: HelicoidalSurface, grid_n=DEFAULT_GRID, tol=DEFAULT_TOL):
    """All u0 in the domain where the surface is singular (for every v).

    Tangential roots of beta are not classified: they come back as
    :class:`SuspectedTangentRoot` entries together with grid nodes where
    |beta| has a local minimum below sqrt(abs_tol) without changing sign.
    Tangential roots of the axis component are kept, since a(u0) = l(u0) = 0
    (type 1) forces one and that is where (3,4)-cuspidal edges live.
    """
    if grid_n < 16:
        raise ValueError("grid_n must be >= 16")
    curve = s.curve
    grid = np.linspace(*curve.domain, grid_n)
    candidates = []

    def beta(u):
        return curve.beta_terms(u)[0]

    def dbeta(u):
        return curve.curvature(u, 1).beta.derivative(1)

    def beta_zero(u):
        val, scale = curve.beta_terms(u)
        return np.abs(val) <= tol.abs_tol + tol.rel_tol * scale

    beta_simple, beta_tangential = _roots(beta, dbeta, grid, beta_zero)
    for u in beta_simple:
        candidates.append((u, SingularReason.BETA_ZERO))

    nu_c, x_c = _axis_functions(s)

    def dnu(u):
        return nu_c.jet(u, 1).derivative(1)

    def nu_zero(u):
        scale = np.maximum(np.abs(curve.a(u)), np.abs(curve.b(u)))
        return np.abs(nu_c(u)) <= tol.abs_tol + tol.rel_tol * scale

    for u in sum(_roots(nu_c, dnu, grid, nu_zero), []):
        if tol.is_zero(x_c(u), s.length_scale(s.point_data(u))):
            candidates.append((u, SingularReason.PROFILE_AXIS_ZERO))

    candidates.sort(key=lambda c: c[0])
    merged = []
    for u, reason in candidates:
        if merged and abs(u - merged[-1][0]) <= DEDUP_TOL:
            merged[-1][1].add(reason)
        else:
            merged.append((u, {reason}))
    points = []
    for u, reasons in merged:
        _, extra = s.is_singular(u, tol)
        points.append(SingularPoint(u, frozenset(reasons | extra)))

    bv = beta(grid)
    mag = np.abs(bv)
    bz = beta_zero(grid)
    h = grid[1] - grid[0]
    suspects = [SuspectedTangentRoot(u, abs(float(beta(u)))) for u in beta_tangential
                if all(abs(u - p.u0) > DEDUP_TOL for p in points)]
    for i in range(1, grid_n - 1):
        if bz[i] or np.sign(bv[i - 1]) * np.sign(bv[i + 1]) < 0:
            continue
        if mag[i] <= mag[i - 1] and mag[i] <= mag[i + 1] and mag[i] < np.sqrt(tol.abs_tol):
            known = [p.u0 for p in points] + [t.u for t in suspects]
            if all(abs(grid[i] - u) > h for u in known):
                suspects.append(SuspectedTangentRoot(float(grid[i]), float(mag[i])))
    suspects.sort()
    return SweepResult(points, suspects)


# -- classification -----------------------------------------------------------

_ALLOWED = {
    "beta=0,axis=0": {CuspType.CUSP_35, CuspType.UNCLASSIFIED},
    "beta=0,axis!=0": {CuspType.CUSP_25, CuspType.UNCLASSIFIED},
    "beta!=0,axis=0": {CuspType.CUSP_23, CuspType.CUSP_34, CuspType.UNCLASSIFIED},
}


@dataclass
class SingularityReport:
    u0: float
    kind: Kind
    reasons: frozenset
    conditions: dict
    scope: str  # "theorem" or "outside_theorem_scope"
    case: Optional[str]
    fast: CuspType
    oracle: CuspType
    notes: list = field(default_factory=list)

    @property
    def agree(self):
        return self.fast is self.oracle

    @property
    def verified(self):
        return self.agree

    @property
    def edge_type(self):
        """Type reported for the surface: the oracle decides on disagreement."""
        return self.oracle

    def to_dict(self):
        return {
            "u0": float(self.u0),
            "reasons": sorted(r.value for r in self.reasons),
            "conditions": {k: float(v) for k, v in sorted(self.conditions.items())},
            "scope": self.scope,
            "case": self.case,
            "type": self.edge_type.edge_label,
            "classification_fast": self.fast.edge_label,
            "classification_oracle": self.oracle.edge_label,
            "agree": self.agree,
            "verified": self.verified,
        }


def _condition_values(s, u0):
    """Condition scalars at u0 with the magnitudes used for their zero tests.

    beta and l are judged against their largest Taylor derivative at u0, so a
    root located to within xtol still reads as zero.
    """
    l_j, beta_j = s.curve.curvature(u0, 3)
    bd = beta_j.derivatives()
    ld = l_j.derivatives()
    beta_scale = float(np.max(np.abs(bd)))
    l_scale = float(np.max(np.abs(ld)))
    x1, x2, a, b = s.curve.values(u0)
    nu_scale = max(abs(a), abs(b))
    length = max(abs(x1), abs(x2), abs(s.lam))
    if s.kind is Kind.TYPE1:
        axis_name, axis, x_name, x = "a", a, "x2", x2
    else:
        axis_name, axis, x_name, x = "b", b, "x1", x1
    values = {"beta": bd[0], "beta_prime": bd[1], "l": ld[0], "l_prime": ld[1],
              "beta_prime_l": bd[1] * ld[0], axis_name: axis, x_name: x}
    scales = {"beta": beta_scale, "beta_prime": beta_scale,
              "l": l_scale, "l_prime": l_scale,
              "beta_prime_l": beta_scale * l_scale,
              axis_name: nu_scale, x_name: length}
    values = {k: float(v) for k, v in values.items()}
    return values, scales, axis_name, x_name


def _theorem_case(values, scales, axis_name, tol):
    def zero(name):
        return tol.is_zero(values[name], scales[name])

    beta0, axis0 = zero("beta"), zero(axis_name)
    if beta0 and axis0:
        case = "beta=0,axis=0"
        result = CuspType.CUSP_35 if not zero("beta_prime_l") else CuspType.UNCLASSIFIED
    elif beta0:
        case = "beta=0,axis!=0"
        result = CuspType.CUSP_25 if not zero("beta_prime_l") else CuspType.UNCLASSIFIED
    elif axis0:
        case = "beta!=0,axis=0"
        if not zero("l"):
            result = CuspType.CUSP_23
        elif not zero("l_prime"):
            result = CuspType.CUSP_34
        else:
            result = CuspType.UNCLASSIFIED
    else:
        raise NotSingularError("neither beta nor the axis component vanishes")
    assert result in _ALLOWED[case], (case, result)
    return case, result


def classify_cuspidal_edge(s: HelicoidalSurface, u0, tol=DEFAULT_TOL):
    """Classify the singular point (u0, v); the answer holds for every v."""
    singular, reasons = s.is_singular(u0, tol)
    if not singular:
        raise NotSingularError(f"the surface is regular at u={u0}")
    values, scales, axis_name, x_name = _condition_values(s, u0)
    notes = []
    if tol.is_zero(values[x_name], scales[x_name]):
        scope = "theorem"
        case, fast = _theorem_case(values, scales, axis_name, tol)
    else:
        # Off the axis the untwisting map is a local diffeomorphism, so the
        # profile curve gamma has the same cusp type as the surface.
        scope = "outside_theorem_scope"
        case = None
        x1 = s.curve.x1.jet(u0, 5)
        x2 = s.curve.x2.jet(u0, 5)
        fast = classify_cusp(_derivative_vectors(x1, x2), tol)
    oracle = classify_cusp(profile_derivatives(s, u0), tol)
    if fast is not oracle:
        notes.append(f"fast route gave {fast.edge_label}, oracle gave {oracle.edge_label}")
    return SingularityReport(u0=float(u0), kind=s.kind, reasons=reasons,
                             conditions=values, scope=scope, case=case,
                             fast=fast, oracle=oracle, notes=notes)


def classify_surface(s: HelicoidalSurface, grid_n=DEFAULT_GRID, tol=DEFAULT_TOL):
    """Sweep the domain and classify every singular point found."""
    sweep = find_singular_points(s, grid_n, tol)
    reports = [classify_cuspidal_edge(s, p.u0, tol) for p in sweep.points]
    return reports, sweep.suspects
