"""1-type and 2-type helicoidal surfaces of a Legendre curve.

    type 1:  r(u, v) = (x1 + lam v, x2 sin v, x2 cos v)
    type 2:  r(u, v) = (x1 cosh v, x1 sinh v, x2 + lam v)

u-derivatives come from jets of the profile expressions; v enters only
through sin/cos (cosh/sinh), and is differentiated with a one-variable jet
in v at fixed u.
"""
import enum
from dataclasses import dataclass, fields
from typing import NamedTuple

import numpy as np

from . import jet as J
from .errors import DeltaNotOneError
from .legendre import LegendreCurve
from .minkowski import CausalCharacter, pseudo_dot3, pseudo_wedge
from .tolerance import DEFAULT_TOL


class Kind(enum.IntEnum):
    TYPE1 = 1
    TYPE2 = 2


class SingularReason(enum.Enum):
    BETA_ZERO = "beta_zero"
    PROFILE_AXIS_ZERO = "profile_axis_zero"


class LightconeFrame(NamedTuple):
    lplus: np.ndarray
    lminus: np.ndarray
    t: np.ndarray


class PointData(NamedTuple):
    x1: float
    x2: float
    a: float
    b: float
    beta: float
    l: float


@dataclass(frozen=True)
class BasicInvariants:
    a1: float
    b1: float
    c1: float
    a2: float
    b2: float
    c2: float
    e1: float
    f1: float
    g1: float
    e2: float
    f2: float
    g2: float

    def as_dict(self):
        return {f.name: float(getattr(self, f.name)) for f in fields(self)}

    def as_array(self):
        return np.array([getattr(self, f.name) for f in fields(self)], dtype=float)


def _rotation(v):
    """(sin v, cos v) for type 1; works on floats and jets."""
    if isinstance(v, J.Jet):
        return J.sincos(v)
    return np.sin(v), np.cos(v)


def _boost(v):
    if isinstance(v, J.Jet):
        return J.sinhcosh(v)
    return np.sinh(v), np.cosh(v)


def _as_vec(comps):
    return np.array([float(c) for c in comps])


class HelicoidalSurface:
    """Helicoidal surface swept by a Legendre curve with pitch ``lam``."""

    def __init__(self, curve: LegendreCurve, lam, kind=Kind.TYPE1, name=None):
        lam = float(lam)
        if lam == 0.0 or not np.isfinite(lam):
            raise ValueError("the pitch lambda must be a non-zero finite number")
        self.curve = curve
        self.lam = lam
        self.kind = Kind(kind)
        self.name = name if name is not None else curve.name

    def __repr__(self):
        return f"HelicoidalSurface({self.name!r}, lam={self.lam}, kind={int(self.kind)})"

    @property
    def delta(self):
        return self.curve.delta

    # -- generic formulas (floats or jets) --------------------------------

    def _position(self, x1, x2, v):
        lam = self.lam
        if self.kind is Kind.TYPE1:
            s, c = _rotation(v)
            return [x1 + v * lam, x2 * s, x2 * c]
        sh, ch = _boost(v)
        return [x1 * ch, x1 * sh, x2 + v * lam]

    def _frame(self, a, b, v):
        if self.kind is Kind.TYPE1:
            s, c = _rotation(v)
            lp = [a + 0.0 * s, b * s + c, b * c - s]
            lm = [a + 0.0 * s, b * s - c, b * c + s]
            t = [b + 0.0 * s, a * s, a * c]
        else:
            sh, ch = _boost(v)
            lp = [a * ch + sh, a * sh + ch, b + 0.0 * sh]
            lm = [a * ch - sh, a * sh - ch, b + 0.0 * sh]
            t = [b * ch, b * sh, a + 0.0 * sh]
        return lp, lm, t

    # -- evaluation --------------------------------------------------------

    def point_data(self, u):
        """Plain values of x1, x2, a, b, beta, l at ``u``."""
        x1, x2, a, b = self.curve.values(u)
        l, beta = self.curve.curvature(u, 0)
        return PointData(x1, x2, a, b, beta.value, l.value)

    def evaluate(self, u, v):
        """Surface point(s); ``u`` and ``v`` broadcast, result has a trailing axis of 3."""
        self.curve.check_domain(u)
        x1, x2 = self.curve.x1(u), self.curve.x2(u)
        u, v = np.broadcast_arrays(np.asarray(u, float), np.asarray(v, float))
        x1 = np.broadcast_to(x1, u.shape)
        x2 = np.broadcast_to(x2, u.shape)
        return np.stack(np.broadcast_arrays(*self._position(x1, x2, v)), axis=-1)

    __call__ = evaluate

    def partials(self, u, v, method="closed"):
        """``(r_u, r_v)`` at one point.

        ``method="closed"`` uses the expressions in (beta, a, b, x1, x2);
        ``method="jet"`` differentiates the surface map itself and needs only
        x1, x2 (so it also works where nu blows up).
        """
        if method == "jet":
            self.curve.check_domain(u)
            x1 = self.curve.x1.jet(u, 1)
            x2 = self.curve.x2.jet(u, 1)
            ru = self._position(x1, x2, v)
            ru = [c.derivative(1) if isinstance(c, J.Jet) else 0.0 for c in ru]
            vj = J.Jet.variable(v, 1)
            rv = self._position(x1.value, x2.value, vj)
            rv = [c.derivative(1) for c in rv]
            return _as_vec(ru), _as_vec(rv)
        if method != "closed":
            raise ValueError(f"unknown method {method!r}")
        p = self.point_data(u)
        lam = self.lam
        if self.kind is Kind.TYPE1:
            s, c = np.sin(v), np.cos(v)
            ru = p.beta * np.array([p.b, p.a * s, p.a * c])
            rv = np.array([lam, p.x2 * c, -p.x2 * s])
        else:
            sh, ch = np.sinh(v), np.cosh(v)
            ru = p.beta * np.array([p.b * ch, p.b * sh, p.a])
            rv = np.array([p.x1 * sh, p.x1 * ch, lam])
        return ru, rv

    def normal(self, u, v, method="closed"):
        """r_u ^ r_v (pseudo wedge)."""
        return pseudo_wedge(*self.partials(u, v, method))

    def normal_closed_form(self, u, v):
        """The wedge r_u ^ r_v written out in terms of (beta, a, b, x1, x2)."""
        p = self.point_data(u)
        lam = self.lam
        if self.kind is Kind.TYPE1:
            s, c = np.sin(v), np.cos(v)
            return p.beta * np.array([p.a * p.x2,
                                      p.b * p.x2 * s + lam * p.a * c,
                                      p.b * p.x2 * c - lam * p.a * s])
        sh, ch = np.sinh(v), np.cosh(v)
        return p.beta * np.array([p.a * p.x1 * ch - lam * p.b * sh,
                                  p.a * p.x1 * sh - lam * p.b * ch,
                                  p.b * p.x1])

    def discriminant(self, u):
        """lam^2 a^2 - delta x2^2 (type 1) or lam^2 b^2 - delta x1^2 (type 2),
        returned with the magnitude of its larger term."""
        p = self.point_data(u)
        if self.kind is Kind.TYPE1:
            t1, t2 = self.lam**2 * p.a**2, p.x2**2
        else:
            t1, t2 = self.lam**2 * p.b**2, p.x1**2
        return t1 - self.delta * t2, max(t1, t2)

    def normal_norm_squared_closed(self, u):
        """<N, N> = beta^2 * discriminant."""
        p = self.point_data(u)
        return p.beta**2 * self.discriminant(u)[0]

    # -- singular points and causal type -----------------------------------

    def _axis_pair(self, p):
        """(nu component, profile coordinate) whose joint vanishing makes r singular."""
        if self.kind is Kind.TYPE1:
            return p.a, p.x2
        return p.b, p.x1

    def length_scale(self, p):
        return max(abs(p.x1), abs(p.x2), abs(self.lam))

    def is_singular(self, u0, tol=DEFAULT_TOL):
        """``(singular, reasons)``; singular iff beta = 0 or the axis pair vanishes."""
        p = self.point_data(u0)
        beta, beta_scale = self.curve.beta_terms(u0)
        # |beta'| joins the scale so a root located to ~xtol still reads as zero
        dbeta = self.curve.curvature(u0, 1).beta.derivative(1)
        reasons = set()
        if tol.is_zero(float(beta), max(float(beta_scale), abs(float(dbeta)))):
            reasons.add(SingularReason.BETA_ZERO)
        nu_c, x_c = self._axis_pair(p)
        if (tol.is_zero(nu_c, max(abs(p.a), abs(p.b)))
                and tol.is_zero(x_c, self.length_scale(p))):
            reasons.add(SingularReason.PROFILE_AXIS_ZERO)
        return bool(reasons), frozenset(reasons)

    def causal_character(self, u0, v=0.0, tol=DEFAULT_TOL):
        """Causal type of the surface at (u0, v); DEGENERATE at singular points.

        The type does not depend on v.
        """
        singular, _ = self.is_singular(u0, tol)
        if singular:
            return CausalCharacter.DEGENERATE
        d, scale = self.discriminant(u0)
        if tol.is_zero(d, scale):
            return CausalCharacter.LIGHTLIKE
        return CausalCharacter.SPACELIKE if d < 0 else CausalCharacter.TIMELIKE

    # -- lightcone frame (delta = +1 only) ---------------------------------

    def _require_delta_one(self):
        if self.delta != 1:
            raise DeltaNotOneError(
                f"curve {self.name!r} has delta = {self.delta}; lightcone frames "
                "are only defined when delta = 1")

    def lightcone_frame(self, u, v):
        self._require_delta_one()
        _, _, a, b = self.curve.values(u)
        lp, lm, t = self._frame(a, b, v)
        return LightconeFrame(_as_vec(lp), _as_vec(lm), _as_vec(t))

    def frame_invariants(self, u, v):
        """Deviations from <l+,l+> = <l-,l-> = 0, <l+,l-> = -2, <t,t> = 1 and
        t = -1/2 l+ ^ l-."""
        f = self.lightcone_frame(u, v)
        t_wedge = -0.5 * pseudo_wedge(f.lplus, f.lminus)
        return {
            "lplus_lplus": float(pseudo_dot3(f.lplus, f.lplus)),
            "lminus_lminus": float(pseudo_dot3(f.lminus, f.lminus)),
            "lplus_lminus_plus_2": float(pseudo_dot3(f.lplus, f.lminus) + 2.0),
            "t_t_minus_1": float(pseudo_dot3(f.t, f.t) - 1.0),
            "t_wedge_residual": float(np.linalg.norm(f.t - t_wedge)),
        }

    def wedge_decomposition(self, u, v):
        """Coefficients (alpha, beta~) with r_u ^ r_v = alpha l+ + beta~ l-."""
        self._require_delta_one()
        p = self.point_data(u)
        if self.kind is Kind.TYPE1:
            return (p.beta * (p.x2 + self.lam * p.a) / 2,
                    p.beta * (p.x2 - self.lam * p.a) / 2)
        return (p.beta * (p.x1 - self.lam * p.b) / 2,
                p.beta * (p.x1 + self.lam * p.b) / 2)

    def wedge_residual(self, u, v):
        alpha, beta_t = self.wedge_decomposition(u, v)
        f = self.lightcone_frame(u, v)
        return float(np.linalg.norm(self.normal(u, v) - alpha * f.lplus - beta_t * f.lminus))

    def _frame_derivatives(self, u, v, perturb=None):
        """Frame and its u- and v-derivatives as plain vectors."""
        self._require_delta_one()

        def frame(a, b, vv):
            lp, lm, t = self._frame(a, b, vv)
            return perturb(lp, lm, t) if perturb else (lp, lm, t)

        a_j = self.curve.a.jet(u, 1)
        b_j = self.curve.b.jet(u, 1)
        in_u = frame(a_j, b_j, v)
        in_v = frame(a_j.value, b_j.value, J.Jet.variable(v, 1))
        value = tuple(_as_vec([c.value for c in vec]) for vec in in_u)
        du = tuple(_as_vec([c.derivative(1) for c in vec]) for vec in in_u)
        dv = tuple(_as_vec([c.derivative(1) for c in vec]) for vec in in_v)
        return value, du, dv

    def basic_invariants(self, u, v):
        """The twelve basic invariants, computed from their inner-product definitions."""
        (lp, lm, t), (lp_u, _, t_u), (lp_v, _, t_v) = self._frame_derivatives(u, v)
        x_u, x_v = self.partials(u, v)
        h = -0.5
        return BasicInvariants(
            a1=h * pseudo_dot3(x_u, lm), b1=h * pseudo_dot3(x_u, lp), c1=pseudo_dot3(x_u, t),
            a2=h * pseudo_dot3(x_v, lm), b2=h * pseudo_dot3(x_v, lp), c2=pseudo_dot3(x_v, t),
            e1=h * pseudo_dot3(lp_u, lm), f1=h * pseudo_dot3(t_u, lm), g1=h * pseudo_dot3(t_u, lp),
            e2=h * pseudo_dot3(lp_v, lm), f2=h * pseudo_dot3(t_v, lm), g2=h * pseudo_dot3(t_v, lp),
        )

    def basic_invariants_closed_form(self, u, v):
        """The twelve basic invariants in closed form (independent of v)."""
        self._require_delta_one()
        p = self.point_data(u)
        lam = self.lam
        if self.kind is Kind.TYPE1:
            return BasicInvariants(
                a1=0.0, b1=0.0, c1=p.beta,
                a2=(lam * p.a + p.x2) / 2, b2=(lam * p.a - p.x2) / 2, c2=-lam * p.b,
                e1=0.0, f1=p.l / 2, g1=p.l / 2,
                e2=p.b, f2=p.a / 2, g2=-p.a / 2)
        return BasicInvariants(
            a1=0.0, b1=0.0, c1=p.beta,
            a2=(-lam * p.b + p.x1) / 2, b2=(-lam * p.b - p.x1) / 2, c2=lam * p.a,
            e1=0.0, f1=p.l / 2, g1=p.l / 2,
            e2=p.a, f2=p.b / 2, g2=-p.b / 2)

    def frame_residuals(self, u, v, perturb=None):
        """Norms of the six frame equations.

        u-direction: l+_u - l t, l-_u - l t, t_u - l/2 (l+ + l-).
        v-direction: l+_v - (e l+ - k t), l-_v - (-e l- + k t),
        t_v - k/2 (l+ - l-), with (e, k) = (b, a) for type 1 and (a, b) for type 2.

        ``perturb`` may rewrite the (jet valued) frame before differentiation;
        it exists for negative controls.
        """
        (lp, lm, t), (lp_u, lm_u, t_u), (lp_v, lm_v, t_v) = \
            self._frame_derivatives(u, v, perturb)
        p = self.point_data(u)
        e, k = (p.b, p.a) if self.kind is Kind.TYPE1 else (p.a, p.b)
        res = [
            lp_u - p.l * t,
            lm_u - p.l * t,
            t_u - 0.5 * p.l * (lp + lm),
            lp_v - (e * lp - k * t),
            lm_v - (-e * lm + k * t),
            t_v - 0.5 * k * (lp - lm),
        ]
        return tuple(float(np.linalg.norm(r)) for r in res)
