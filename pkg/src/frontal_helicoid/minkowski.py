"""Lorentzian linear algebra in R^3_1 (signature -,+,+) and R^2_1 (-,+).

Vectors are plain numpy arrays; the functions below also accept any sequence
whose entries support ``+``, ``-`` and ``*`` (jets, sympy symbols), which is
how the frame code differentiates them.
"""
import enum

import numpy as np

from .tolerance import DEFAULT_TOL


class CausalCharacter(enum.Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"
    # Used only for surfaces: the point is singular and has no causal type.
    DEGENERATE = "degenerate"


class DeltaMembership(enum.Enum):
    S11 = "S11"
    H1 = "H1"
    NONE = "none"


def _finite(arr, n):
    arr = np.asarray(arr, dtype=float)
    if arr.shape != (n,):
        raise ValueError(f"expected {n} components, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"non-finite component in {arr}")
    return arr


def vec3(x1, x2, x3):
    """Validated point of R^3_1."""
    return _finite([x1, x2, x3], 3)


def vec2(x1, x2):
    """Validated point of R^2_1."""
    return _finite([x1, x2], 2)


def pseudo_dot3(x, y):
    return -x[0] * y[0] + x[1] * y[1] + x[2] * y[2]


def pseudo_dot2(x, y):
    return -x[0] * y[0] + x[1] * y[1]


def pseudo_dot(x, y):
    """Pseudo inner product in R^2_1 or R^3_1, chosen by length."""
    if len(x) != len(y) or len(x) not in (2, 3):
        raise ValueError(f"expected two vectors of length 2 or 3, got {len(x)} and {len(y)}")
    if len(x) == 2:
        return pseudo_dot2(x, y)
    return pseudo_dot3(x, y)


def pseudo_wedge(x, y):
    """Cofactor expansion of the determinant with first row (-e1, e2, e3)."""
    c1 = -(x[1] * y[2] - x[2] * y[1])
    c2 = -(x[0] * y[2] - x[2] * y[0])
    c3 = x[0] * y[1] - x[1] * y[0]
    if isinstance(c1, (float, int, np.floating, np.integer)):
        return np.array([c1, c2, c3], dtype=float)
    return [c1, c2, c3]


def _square_scale(x):
    return max((float(c) * float(c) for c in x), default=0.0)


def causal_character(x, tol=DEFAULT_TOL):
    """Causal character of a vector; the zero vector counts as spacelike."""
    x = np.asarray(x, dtype=float)
    if not np.any(x):
        return CausalCharacter.SPACELIKE
    q = pseudo_dot(x, x)
    if tol.is_zero(q, _square_scale(x)):
        return CausalCharacter.LIGHTLIKE
    return CausalCharacter.SPACELIKE if q > 0 else CausalCharacter.TIMELIKE


def delta_membership(v, tol=DEFAULT_TOL):
    """Which unit pseudo-circle of R^2_1 contains ``v``, if any."""
    v = np.asarray(v, dtype=float)
    q = pseudo_dot2(v, v)
    scale = max(_square_scale(v), 1.0)
    if tol.is_zero(q - 1.0, scale):
        return DeltaMembership.S11
    if tol.is_zero(q + 1.0, scale):
        return DeltaMembership.H1
    return DeltaMembership.NONE
