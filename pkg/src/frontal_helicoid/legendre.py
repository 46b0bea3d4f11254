"""Non-lightlike Legendre curves (gamma, nu) in R^2_1.

``gamma = (x1, x2)`` and ``nu = (a, b)`` are given as expressions in ``u``.
``delta = a^2 - b^2`` is +1 or -1 along the whole domain, ``mu = (b, a)``,
and the curvature pair is ``l = delta <nu', mu>``, ``beta = delta <gamma', mu>``,
so that ``nu' = l mu``, ``mu' = l nu`` and ``gamma' = beta mu``.
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Optional

import numpy as np

from .errors import (DomainError, NonConstantDeltaError, NotInDeltaError,
                     NotLegendreError)
from .exprdsl import compile_expr
from .jet import DEFAULT_ORDER, Jet
from .minkowski import pseudo_dot2
from .tolerance import DEFAULT_TOL

DEFAULT_SAMPLES = 257


class CurveJets(NamedTuple):
    x1: Jet
    x2: Jet
    a: Jet
    b: Jet


class CurvatureJets(NamedTuple):
    l: Jet
    beta: Jet


@dataclass(frozen=True)
class LegendreCurve:
    x1: object
    x2: object
    a: object
    b: object
    domain: tuple
    name: str = ""

    def __post_init__(self):
        for f in ("x1", "x2", "a", "b"):
            object.__setattr__(self, f, compile_expr(getattr(self, f)))
        lo, hi = (float(t) for t in self.domain)
        if not lo < hi:
            raise ValueError(f"empty domain [{lo}, {hi}]")
        object.__setattr__(self, "domain", (lo, hi))

    def check_domain(self, u):
        lo, hi = self.domain
        u = np.asarray(u, dtype=float)
        if np.any((u < lo) | (u > hi)) or not np.all(np.isfinite(u)):
            raise DomainError(f"u={u} outside the curve domain [{lo}, {hi}]")

    def jets(self, u0, order=DEFAULT_ORDER):
        self.check_domain(u0)
        return CurveJets(self.x1.jet(u0, order), self.x2.jet(u0, order),
                         self.a.jet(u0, order), self.b.jet(u0, order))

    def values(self, u):
        """Plain values ``(x1, x2, a, b)`` at ``u`` (scalar or array)."""
        self.check_domain(u)
        return self.x1(u), self.x2(u), self.a(u), self.b(u)

    @cached_property
    def delta(self):
        """Sign of a^2 - b^2, read off at the left end of the domain.

        Membership of nu in Delta is not re-checked here; see :func:`validate`.
        """
        u = self.domain[0]
        a, b = self.a(u), self.b(u)
        d = _infer_delta(a * a - b * b, max(a * a, b * b, 1.0), DEFAULT_TOL)
        if d is None:
            raise NotInDeltaError(f"a^2 - b^2 vanishes at u={u}: nu is lightlike")
        return d

    def mu(self, u0, order=DEFAULT_ORDER):
        self.check_domain(u0)
        return self.b.jet(u0, order), self.a.jet(u0, order)

    def curvature(self, u0, order=DEFAULT_ORDER):
        """Jets of (l, beta) at ``u0`` to the given order."""
        x1, x2, a, b = self.jets(u0, order + 1)
        d = self.delta
        nu_p = (a.deriv(), b.deriv())
        g_p = (x1.deriv(), x2.deriv())
        mu = (b.truncate(order), a.truncate(order))
        return CurvatureJets(l=pseudo_dot2(nu_p, mu) * d,
                             beta=pseudo_dot2(g_p, mu) * d)

    def beta_terms(self, u):
        """``beta`` at ``u`` plus the magnitude of its largest summand."""
        x1, x2, a, b = self.jets(u, 1)
        t1 = x1.coeffs[1] * b.coeffs[0]
        t2 = x2.coeffs[1] * a.coeffs[0]
        # beta = delta * (-x1' b + x2' a)
        return self.delta * (t2 - t1), np.maximum(np.abs(t1), np.abs(t2))

    def frenet_residual(self, u0):
        """Euclidean norms of nu' - l mu, mu' - l nu and gamma' - beta mu."""
        x1, x2, a, b = self.jets(u0, 1)
        l, beta = (j.value for j in self.curvature(u0, 0))
        nu = np.array([a.value, b.value])
        mu = np.array([b.value, a.value])
        nu_p = np.array([a.derivative(1), b.derivative(1)])
        mu_p = nu_p[::-1]
        g_p = np.array([x1.derivative(1), x2.derivative(1)])
        return (float(np.linalg.norm(nu_p - l * mu)),
                float(np.linalg.norm(mu_p - l * nu)),
                float(np.linalg.norm(g_p - beta * mu)))


def _infer_delta(q, scale, tol):
    if tol.is_zero(q, scale):
        return None
    return 1 if q > 0 else -1


@dataclass
class ValidationReport:
    ok: bool
    delta: Optional[int]
    max_tangency: float
    max_delta_residual: float
    n_points: int
    failure: Optional[str] = None
    message: str = ""
    _error: Optional[type] = field(default=None, repr=False)

    def raise_for_failure(self):
        if self._error is not None:
            raise self._error(self.message)

    def to_dict(self):
        return {
            "ok": self.ok,
            "delta": self.delta,
            "failure": self.failure,
            "message": self.message,
            "max_tangency": self.max_tangency,
            "max_delta_residual": self.max_delta_residual,
            "n_points": self.n_points,
        }


def sample_grid(domain, n_samples):
    """Uniform grid of ``n_samples`` points plus all cell midpoints, sorted."""
    lo, hi = domain
    grid = np.linspace(lo, hi, n_samples)
    mids = 0.5 * (grid[1:] + grid[:-1])
    return np.sort(np.concatenate([grid, mids]))


def validate(curve, n_samples=DEFAULT_SAMPLES, tol=DEFAULT_TOL):
    """Sample-based check that ``curve`` is a non-lightlike Legendre curve.

    The sign ``delta`` is taken from the first sample and then required to
    hold everywhere.  Returns a :class:`ValidationReport`; call its
    ``raise_for_failure`` to turn a failed check into an exception.
    """
    if n_samples < 2:
        raise ValueError("n_samples must be >= 2")
    u = sample_grid(curve.domain, n_samples)
    x1, x2, a, b = curve.jets(u, 1)
    av, bv = a.coeffs[0], b.coeffs[0]
    q = av * av - bv * bv
    qscale = np.maximum(np.maximum(av * av, bv * bv), 1.0)

    t1 = x1.coeffs[1] * av
    t2 = x2.coeffs[1] * bv
    tangency = np.abs(t2 - t1)  # |<gamma', nu>| = |-x1' a + x2' b|
    tan_ok = tangency <= tol.abs_tol + tol.rel_tol * np.maximum(np.abs(t1), np.abs(t2))

    def report(ok, delta, failure=None, error=None, message=""):
        resid = float(np.max(np.abs(q - delta))) if delta else float(np.max(np.abs(q)))
        return ValidationReport(ok=ok, delta=delta, max_tangency=float(np.max(tangency)),
                                max_delta_residual=resid, n_points=len(u),
                                failure=failure, message=message, _error=error)

    delta = _infer_delta(q[0], qscale[0], tol)
    if delta is None:
        return report(False, None, "not_in_delta", NotInDeltaError,
                      f"a^2 - b^2 = {q[0]:.6g} at u={u[0]:.6g}: nu is lightlike")
    if np.any(q * delta < 0):
        i = int(np.argmax(q * delta < 0))
        return report(False, delta, "non_constant_delta", NonConstantDeltaError,
                      f"a^2 - b^2 changes sign (value {q[i]:.6g} at u={u[i]:.6g})")
    bad = np.abs(q - delta) > tol.abs_tol + tol.rel_tol * qscale
    if np.any(bad):
        i = int(np.argmax(bad))
        return report(False, delta, "not_in_delta", NotInDeltaError,
                      f"a^2 - b^2 = {q[i]:.6g} at u={u[i]:.6g}, expected {delta}")
    if not np.all(tan_ok):
        i = int(np.argmin(tan_ok))
        return report(False, delta, "not_legendre", NotLegendreError,
                      f"<gamma', nu> = {tangency[i]:.6g} at u={u[i]:.6g}")
    return report(True, delta)
