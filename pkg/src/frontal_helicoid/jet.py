"""Truncated Taylor arithmetic.

A :class:`Jet` of order ``K`` stores the Taylor coefficients
``f(u0), f'(u0), f''(u0)/2!, ..., f^(K)(u0)/K!``.  The coefficient array may
carry trailing batch dimensions, so one jet can hold expansions at many
points at once (``coeffs.shape == (K + 1, *batch)``); all arithmetic
broadcasts over the batch.

Elementary functions use the usual coefficient recurrences obtained from
the ODE each function satisfies (e.g. ``g = exp(f)`` gives ``g' = f' g``).
"""
import math

import numpy as np

from .errors import DivisionBySingularJet, DomainError

DEFAULT_ORDER = 6
# Divisors and sqrt/log arguments whose value is this close to zero are rejected.
SINGULAR_TOL = 1e-12


def _factorials(n):
    return np.array([math.factorial(i) for i in range(n)], dtype=float)


class Jet:
    __slots__ = ("coeffs",)
    __array_priority__ = 1000  # make ndarray * Jet defer to Jet.__rmul__

    def __init__(self, coeffs):
        c = np.array(coeffs, dtype=float)
        if c.ndim == 0 or c.shape[0] < 1:
            raise ValueError("a jet needs at least one coefficient")
        if not np.all(np.isfinite(c)):
            raise DomainError("non-finite Taylor coefficient")
        self.coeffs = c

    @classmethod
    def _wrap(cls, c):
        if not np.all(np.isfinite(c)):
            raise DomainError("non-finite Taylor coefficient (overflow?)")
        j = cls.__new__(cls)
        j.coeffs = c
        return j

    @classmethod
    def constant(cls, value, order=DEFAULT_ORDER):
        value = np.asarray(value, dtype=float)
        c = np.zeros((order + 1,) + value.shape)
        c[0] = value
        return cls(c)

    @classmethod
    def variable(cls, u0, order=DEFAULT_ORDER):
        """Jet of the identity function expanded at ``u0``."""
        if order < 1:
            raise ValueError("order must be >= 1")
        u0 = np.asarray(u0, dtype=float)
        c = np.zeros((order + 1,) + u0.shape)
        c[0] = u0
        c[1] = 1.0
        return cls(c)

    @property
    def order(self):
        return self.coeffs.shape[0] - 1

    @property
    def value(self):
        v = self.coeffs[0]
        return float(v) if v.ndim == 0 else v

    def derivative(self, i):
        """The i-th derivative at the expansion point."""
        if not 0 <= i <= self.order:
            raise ValueError(f"derivative order {i} outside 0..{self.order}")
        d = self.coeffs[i] * math.factorial(i)
        return float(d) if np.ndim(d) == 0 else d

    def derivatives(self):
        """Array of f, f', ..., f^(K) (leading axis is the derivative order)."""
        f = _factorials(self.order + 1).reshape((-1,) + (1,) * (self.coeffs.ndim - 1))
        return self.coeffs * f

    def deriv(self):
        """Jet of f', one order shorter."""
        if self.order < 1:
            raise ValueError("cannot differentiate an order-0 jet")
        k = np.arange(1, self.order + 1, dtype=float)
        k = k.reshape((-1,) + (1,) * (self.coeffs.ndim - 1))
        return Jet._wrap(self.coeffs[1:] * k)

    def truncate(self, order):
        return Jet._wrap(self.coeffs[: order + 1].copy())

    def __repr__(self):
        return f"Jet({self.coeffs.tolist()!r})"

    def __float__(self):
        return float(self.coeffs[0])

    # -- arithmetic ------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, Jet):
            if other.order != self.order:
                raise ValueError(f"jet orders differ: {self.order} vs {other.order}")
            return other.coeffs
        other = np.asarray(other, dtype=float)
        c = np.zeros(self.coeffs.shape[:1] + np.broadcast_shapes(self.coeffs.shape[1:], other.shape))
        c[0] = other
        return c

    def __neg__(self):
        return Jet._wrap(-self.coeffs)

    def __pos__(self):
        return self

    def __add__(self, other):
        return Jet._wrap(self.coeffs + self._lift(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Jet):
            return Jet._wrap(self.coeffs * np.asarray(other, dtype=float))
        return Jet._wrap(_cauchy(self.coeffs, self._lift(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Jet):
            other = np.asarray(other, dtype=float)
            if np.any(np.abs(other) <= SINGULAR_TOL):
                raise DivisionBySingularJet("division by zero constant")
            return Jet._wrap(self.coeffs / other)
        return self * reciprocal(other)

    def __rtruediv__(self, other):
        return reciprocal(self) * other

    def __pow__(self, n):
        return power(self, n)

    def __rpow__(self, base):
        if base <= 0:
            raise DomainError(f"non-positive base {base} with a non-constant exponent")
        return exp(self * math.log(base))


def _cauchy(a, b):
    n = a.shape[0]
    out = np.zeros(np.broadcast_shapes(a.shape, b.shape))
    for k in range(n):
        acc = a[0] * b[k]
        for j in range(1, k + 1):
            acc = acc + a[j] * b[k - j]
        out[k] = acc
    return out


def _check_positive(f, what):
    if np.any(f.coeffs[0] <= SINGULAR_TOL):
        raise DomainError(f"{what} needs a positive argument, got {f.coeffs[0]}")


def reciprocal(f):
    a = f.coeffs
    if np.any(np.abs(a[0]) <= SINGULAR_TOL):
        raise DivisionBySingularJet(f"division by a jet with value {a[0]}")
    q = np.zeros_like(a)
    q[0] = 1.0 / a[0]
    for k in range(1, a.shape[0]):
        acc = a[1] * q[k - 1]
        for j in range(2, k + 1):
            acc = acc + a[j] * q[k - j]
        q[k] = -acc / a[0]
    return Jet._wrap(q)


def exp(f):
    if not isinstance(f, Jet):
        return np.exp(f)
    a = f.coeffs
    g = np.zeros_like(a)
    g[0] = np.exp(a[0])
    for k in range(1, a.shape[0]):
        acc = 0.0
        for j in range(1, k + 1):
            acc = acc + j * a[j] * g[k - j]
        g[k] = acc / k
    return Jet._wrap(g)


def log(f):
    if not isinstance(f, Jet):
        if np.any(np.asarray(f) <= 0):
            raise DomainError(f"ln needs a positive argument, got {f}")
        return np.log(f)
    _check_positive(f, "ln")
    a = f.coeffs
    g = np.zeros_like(a)
    g[0] = np.log(a[0])
    for k in range(1, a.shape[0]):
        acc = k * a[k]
        for j in range(1, k):
            acc = acc - j * g[j] * a[k - j]
        g[k] = acc / (k * a[0])
    return Jet._wrap(g)


ln = log


def _trig_pair(f, sign):
    # s' = c f',  c' = sign * s f'   (sign=-1: sin/cos, +1: sinh/cosh)
    a = f.coeffs
    s = np.zeros_like(a)
    c = np.zeros_like(a)
    if sign < 0:
        s[0], c[0] = np.sin(a[0]), np.cos(a[0])
    else:
        s[0], c[0] = np.sinh(a[0]), np.cosh(a[0])
    for k in range(1, a.shape[0]):
        ds = 0.0
        dc = 0.0
        for j in range(1, k + 1):
            ds = ds + j * a[j] * c[k - j]
            dc = dc + j * a[j] * s[k - j]
        s[k] = ds / k
        c[k] = sign * dc / k
    return Jet._wrap(s), Jet._wrap(c)


def sin(f):
    return _trig_pair(f, -1)[0] if isinstance(f, Jet) else np.sin(f)


def cos(f):
    return _trig_pair(f, -1)[1] if isinstance(f, Jet) else np.cos(f)


def sinh(f):
    return _trig_pair(f, 1)[0] if isinstance(f, Jet) else np.sinh(f)


def cosh(f):
    return _trig_pair(f, 1)[1] if isinstance(f, Jet) else np.cosh(f)


def sincos(f):
    return _trig_pair(f, -1)


def sinhcosh(f):
    return _trig_pair(f, 1)


def tanh(f):
    if not isinstance(f, Jet):
        return np.tanh(f)
    s, c = _trig_pair(f, 1)
    return s / c


def sqrt(f):
    if not isinstance(f, Jet):
        if np.any(np.asarray(f) < 0):
            raise DomainError(f"sqrt needs a non-negative argument, got {f}")
        return np.sqrt(f)
    _check_positive(f, "sqrt")
    a = f.coeffs
    g = np.zeros_like(a)
    g[0] = np.sqrt(a[0])
    for k in range(1, a.shape[0]):
        acc = a[k]
        for j in range(1, k):
            acc = acc - g[j] * g[k - j]
        g[k] = acc / (2.0 * g[0])
    return Jet._wrap(g)


def absolute(f, tol=SINGULAR_TOL):
    """|f|; undefined (as a smooth jet) where f vanishes."""
    if not isinstance(f, Jet):
        return np.abs(f)
    v = f.coeffs[0]
    if np.any(np.abs(v) <= tol):
        raise DomainError("abs is not differentiable at 0")
    return Jet._wrap(f.coeffs * np.sign(v))


def _int_power(f, n):
    if n < 0:
        return reciprocal(_int_power(f, -n))
    result = None
    base = f
    while n:
        if n & 1:
            result = base if result is None else result * base
        n >>= 1
        if n:
            base = base * base
    if result is None:
        c = np.zeros_like(f.coeffs)
        c[0] = 1.0
        return Jet._wrap(c)
    return result


def power(f, p):
    """f ** p.

    Integer exponents go through repeated squaring and accept any base;
    anything else is ``exp(p * ln f)`` and needs a positive base.
    """
    if isinstance(p, Jet):
        if not np.any(p.coeffs[1:]) and np.ndim(p.coeffs[0]) == 0:
            p = float(p.coeffs[0])
        else:
            return exp(p * log(f))
    if float(p).is_integer():
        return _int_power(f, int(p))
    return exp(log(f) * float(p))


def variable(u0, order=DEFAULT_ORDER):
    return Jet.variable(u0, order)
