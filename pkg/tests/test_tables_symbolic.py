"""Re-derive the coefficient tables symbolically and compare term by term.

Differentiation along a Legendre curve is generated by
x1' = beta b, x2' = beta a, a' = l b, b' = l a, and the rotated-frame
recursion for the profile curve:

    A_{i+1} = A_i' + B_i theta',   B_{i+1} = B_i' - A_i theta'   (theta = x1/lam)
    C_{i+1} = C_i' + D_i theta',   D_{i+1} = D_i' + C_i theta'   (theta = x2/lam)
"""
import pytest
import sympy as sp

from frontal_helicoid._tables import type1_coeffs, type2_coeffs

a, b, x1, x2, lam = sp.symbols("a b x1 x2 lam")
BETA = sp.symbols("beta0:6")
L = sp.symbols("l0:5")


def along_curve(e):
    r = (sp.diff(e, x1) * BETA[0] * b + sp.diff(e, x2) * BETA[0] * a
         + sp.diff(e, a) * L[0] * b + sp.diff(e, b) * L[0] * a)
    r += sum(sp.diff(e, BETA[k]) * BETA[k + 1] for k in range(5))
    r += sum(sp.diff(e, L[k]) * L[k + 1] for k in range(4))
    return sp.expand(r)


def derive(p0, sign, theta_p):
    p, q = [p0], [sp.Integer(0)]
    for _ in range(5):
        p_next = along_curve(p[-1]) + q[-1] * theta_p
        q_next = along_curve(q[-1]) + sign * p[-1] * theta_p
        p.append(sp.expand(p_next))
        q.append(sp.expand(q_next))
    return p[1:], q[1:]


@pytest.fixture(scope="module")
def derived():
    return {
        1: derive(x2, -1, BETA[0] * b / lam),
        2: derive(x1, +1, BETA[0] * a / lam),
    }


@pytest.mark.parametrize("kind", [1, 2])
@pytest.mark.parametrize("i", range(5))
def test_table_entry(derived, kind, i):
    if kind == 1:
        got = type1_coeffs(a, b, x2, lam, BETA, L)
    else:
        got = type2_coeffs(a, b, x1, lam, BETA, L)
    want = derived[kind]
    for col in (0, 1):
        assert sp.expand(got[col][i] - want[col][i]) == 0


def test_recursion_reproduces_profile_derivative():
    # the recursion itself, checked once against brute-force differentiation
    u = sp.Symbol("u")
    X1, X2 = sp.Function("x1")(u), sp.Function("x2")(u)
    th = X1 / lam
    g = sp.Matrix([X2 * sp.cos(th), X2 * sp.sin(th)])
    A, B = X2, sp.Integer(0)
    for _ in range(3):
        g = g.diff(u)
        A, B = (sp.diff(A, u) + B * sp.diff(th, u), sp.diff(B, u) - A * sp.diff(th, u))
        rebuilt = sp.Matrix([A * sp.cos(th) + B * sp.sin(th), -B * sp.cos(th) + A * sp.sin(th)])
        assert sp.simplify(g - rebuilt) == sp.zeros(2, 1)


def test_hyperbolic_recursion_reproduces_profile_derivative():
    u = sp.Symbol("u")
    X1, X2 = sp.Function("x1")(u), sp.Function("x2")(u)
    th = X2 / lam
    g = sp.Matrix([X1 * sp.cosh(th), X1 * sp.sinh(th)])
    C, D = X1, sp.Integer(0)
    for _ in range(3):
        g = g.diff(u)
        C, D = (sp.diff(C, u) + D * sp.diff(th, u), sp.diff(D, u) + C * sp.diff(th, u))
        rebuilt = sp.Matrix([C * sp.cosh(th) + D * sp.sinh(th), D * sp.cosh(th) + C * sp.sinh(th)])
        assert sp.simplify(g - rebuilt) == sp.zeros(2, 1)
