import os
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class ToleranceSpec:
    """Scale-aware zero test.

    A scalar ``q`` counts as zero when ``|q| <= abs_tol + rel_tol * scale``,
    where ``scale`` is the largest magnitude among the terms that produced
    ``q``.
    """

    abs_tol: float = 1e-12
    rel_tol: float = 1e-9

    def bound(self, scale=0.0):
        return self.abs_tol + self.rel_tol * abs(scale)

    def is_zero(self, q, scale=0.0):
        return abs(q) <= self.bound(scale)

    def with_rel(self, rel_tol):
        return replace(self, rel_tol=float(rel_tol))


DEFAULT_TOL = ToleranceSpec()


def default_tolerance():
    """Default tolerance, with ``FRONTAL_TOL`` (a relative tolerance) honoured."""
    env = os.environ.get("FRONTAL_TOL")
    if env:
        return DEFAULT_TOL.with_rel(float(env))
    return DEFAULT_TOL
