"""Closed-form derivative coefficients of the untwisted profile curves.

For a 1-type surface the profile curve is

    g1(u) = (x2 cos(x1/lam), x2 sin(x1/lam))

and its i-th derivative is written in the frame rotated by x1/lam as

    g1^(i) = (A_i c + B_i s, -B_i c + A_i s),   c, s = cos, sin of x1/lam.

For a 2-type surface, g2(u) = (x1 cosh(x2/lam), x1 sinh(x2/lam)) and

    g2^(i) = (C_i ch + D_i sh, D_i ch + C_i sh).

The coefficients depend only on (a, b), one of x1/x2, lam and the jets of the
curvature pair: ``bt = [beta, beta', ..., beta'''']`` and
``l = [l, l', l'', l''']``.  Every term below is copied term-for-term from the
published tables, in the published order.  They are plain arithmetic, so they
also accept sympy symbols.
"""


def type1_coeffs(a, b, x2, lm, bt, l):
    """Return ``(A, B)``, two 5-lists holding A_1..A_5 and B_1..B_5."""
    b0, b1, b2, b3, b4 = bt[:5]
    l0, l1, l2, l3 = l[:4]

    A1 = a * b0
    B1 = -b * b0 * x2 / lm

    A2 = a * b1 + b * b0 * l0 - b**2 * b0**2 * x2 / lm**2
    B2 = -b * b1 * x2 / lm - 2 * a * b * b0**2 / lm - a * b0 * l0 * x2 / lm

    A3 = (a * b2 + 2 * b * b1 * l0 + b * b0 * l1 + a * b0 * l0**2
          - 3 * a * b**2 * b0**3 / lm**2
          - 3 * b**2 * b1 * b0 * x2 / lm**2
          - 3 * a * b * b0**2 * l0 * x2 / lm**2)
    B3 = (-3 * a**2 * b0**2 * l0 / lm
          - 3 * b**2 * b0**2 * l0 / lm
          + b**3 * b0**3 * x2 / lm**3
          - b * b2 * x2 / lm
          - 6 * a * b * b1 * b0 / lm
          - 2 * a * b1 * l0 * x2 / lm
          - a * b0 * l1 * x2 / lm
          - b * b0 * l0**2 * x2 / lm)

    A4 = (a * b3 + 3 * b * b1 * l1 + 3 * b * b2 * l0 + b * b0 * l2
          + 3 * a * b1 * l0**2 + b * b0 * l0**3
          - 3 * b**2 * b1**2 * x2 / lm**2
          + b**4 * b0**4 * x2 / lm**4
          + 3 * a * b0 * l0 * l1
          - 6 * b**3 * b0**3 * l0 / lm**2
          - 3 * a**2 * b0**2 * l0**2 * x2 / lm**2
          - 4 * b**2 * b0**2 * l0**2 * x2 / lm**2
          - 4 * b**2 * b2 * b0 * x2 / lm**2
          - 18 * a * b**2 * b1 * b0**2 / lm**2
          - 12 * a**2 * b * b0**3 * l0 / lm**2
          - 4 * a * b * b0**2 * l1 * x2 / lm**2
          - 14 * a * b * b1 * b0 * l0 * x2 / lm**2)
    B4 = (-4 * a**2 * b0**2 * l1 / lm
          - 4 * b**2 * b0**2 * l1 / lm
          - b * b3 * x2 / lm
          - 6 * a * b * b1**2 / lm
          + 4 * a * b**3 * b0**4 / lm**3
          - 8 * a * b * b2 * b0 / lm
          - 3 * a * b1 * l1 * x2 / lm
          - 3 * a * b2 * l0 * x2 / lm
          - a * b0 * l2 * x2 / lm
          - 14 * a**2 * b1 * b0 * l0 / lm
          - 14 * b**2 * b1 * b0 * l0 / lm
          - a * b0 * l0**3 * x2 / lm
          - 3 * b * b1 * l0**2 * x2 / lm
          - 14 * a * b * b0**2 * l0**2 / lm
          + 6 * b**3 * b1 * b0**2 * x2 / lm**3
          - 3 * b * b0 * l0 * l1 * x2 / lm
          + 6 * a * b**2 * b0**3 * l0 * x2 / lm**3)

    A5 = (a * b4 + 4 * b * b1 * l2 + 6 * b * b2 * l1 + 4 * b * b3 * l0
          + b * b0 * l3 + 6 * a * b2 * l0**2 + 3 * a * b0 * l1**2
          + a * b0 * l0**4 + 4 * b * b1 * l0**3 + 12 * a * b1 * l0 * l1
          + 4 * a * b0 * l0 * l2
          - 15 * a**3 * b0**3 * l0**2 / lm**2
          + 6 * b * b0 * l0**2 * l1
          + 5 * a * b**4 * b0**5 / lm**4
          - 10 * b**3 * b0**3 * l1 / lm**2
          - 60 * a * b**2 * b0**3 * l0**2 / lm**2
          - 10 * b**2 * b1 * b2 * x2 / lm**2
          - 5 * b**2 * b3 * b0 * x2 / lm**2
          - 45 * a * b**2 * b1**2 * b0 / lm**2
          - 30 * a * b**2 * b2 * b0**2 / lm**2
          - 20 * a**2 * b * b0**3 * l1 / lm**2
          - 50 * b**3 * b1 * b0**2 * l0 / lm**2
          + 10 * b**4 * b1 * b0**3 * x2 / lm**4
          - 20 * a * b * b1**2 * l0 * x2 / lm**2
          - 5 * a * b * b0**2 * l2 * x2 / lm**2
          - 100 * a**2 * b * b1 * b0**2 * l0 / lm**2
          - 15 * a * b * b0**2 * l0**3 * x2 / lm**2
          + 10 * a * b**3 * b0**4 * l0 * x2 / lm**4
          - 20 * a**2 * b1 * b0 * l0**2 * x2 / lm**2
          - 25 * b**2 * b1 * b0 * l0**2 * x2 / lm**2
          - 10 * a**2 * b0**2 * l0 * l1 * x2 / lm**2
          - 15 * b**2 * b0**2 * l0 * l1 * x2 / lm**2
          - 25 * a * b * b1 * b0 * l1 * x2 / lm**2
          - 25 * a * b * b2 * b0 * l0 * x2 / lm**2)
    B5 = (-20 * a**2 * b1**2 * l0 / lm
          - 5 * a**2 * b0**2 * l2 / lm
          - 20 * b**2 * b1**2 * l0 / lm
          - 5 * b**2 * b0**2 * l2 / lm
          + 10 * b**4 * b0**4 * l0 / lm**3
          - b**5 * b0**5 * x2 / lm**5
          - b * b4 * x2 / lm
          - 15 * a**2 * b0**2 * l0**3 / lm
          - 15 * b**2 * b0**2 * l0**3 / lm
          - 20 * a * b * b1 * b2 / lm
          - 10 * a * b * b3 * b0 / lm
          - 4 * a * b1 * l2 * x2 / lm
          - 6 * a * b2 * l1 * x2 / lm
          - 4 * a * b3 * l0 * x2 / lm
          - a * b0 * l3 * x2 / lm
          + 30 * a**2 * b**2 * b0**4 * l0 / lm**3
          + 10 * b**3 * b0**3 * l0**2 * x2 / lm**3
          - 25 * a**2 * b1 * b0 * l1 / lm
          - 25 * a**2 * b2 * b0 * l0 / lm
          - 25 * b**2 * b1 * b0 * l1 / lm
          - 25 * b**2 * b2 * b0 * l0 / lm
          - 4 * a * b1 * l0**3 * x2 / lm
          - 6 * b * b2 * l0**2 * x2 / lm
          - 3 * b * b0 * l1**2 * x2 / lm
          - b * b0 * l0**4 * x2 / lm
          + 40 * a * b**3 * b1 * b0**3 / lm**3
          + 15 * b**3 * b1**2 * b0 * x2 / lm**3
          + 10 * b**3 * b2 * b0**2 * x2 / lm**3
          - 12 * b * b1 * l0 * l1 * x2 / lm
          - 4 * b * b0 * l0 * l2 * x2 / lm
          + 15 * a**2 * b * b0**3 * l0**2 * x2 / lm**3
          - 90 * a * b * b1 * b0 * l0**2 / lm
          - 50 * a * b * b0**2 * l0 * l1 / lm
          - 6 * a * b0 * l0**2 * l1 * x2 / lm
          + 10 * a * b**2 * b0**3 * l1 * x2 / lm**3
          + 50 * a * b**2 * b1 * b0**2 * l0 * x2 / lm**3)

    return [A1, A2, A3, A4, A5], [B1, B2, B3, B4, B5]


def type2_coeffs(a, b, x1, lm, bt, l):
    """Return ``(C, D)``, two 5-lists holding C_1..C_5 and D_1..D_5."""
    b0, b1, b2, b3, b4 = bt[:5]
    l0, l1, l2, l3 = l[:4]

    C1 = b * b0
    D1 = a * b0 * x1 / lm

    C2 = b * b1 + a * b0 * l0 + a**2 * b0**2 * x1 / lm**2
    D2 = 2 * a * b * b0**2 / lm + a * b1 * x1 / lm + b * b0 * l0 * x1 / lm

    C3 = (b * b2 + b * b0 * l0**2 + 2 * a * b1 * l0 + a * b0 * l1
          + 3 * a**2 * b * b0**3 / lm**2
          + 3 * a**2 * b1 * b0 * x1 / lm**2
          + 3 * a * b * b0**2 * l0 * x1 / lm**2)
    D3 = (3 * a**2 * b0**2 * l0 / lm
          + 3 * b**2 * b0**2 * l0 / lm
          + a**3 * b0**3 * x1 / lm**3
          + a * b2 * x1 / lm
          + a * b0 * l0**2 * x1 / lm
          + 6 * a * b * b1 * b0 / lm
          + 2 * b * b1 * l0 * x1 / lm
          + b * b0 * l1 * x1 / lm)

    C4 = (b * b3 + a * b0 * l0**3 + 3 * b * b1 * l0**2 + 3 * a * b1 * l1
          + 3 * a * b2 * l0 + a * b0 * l2
          + 6 * a**3 * b0**3 * l0 / lm**2
          + 3 * a**2 * b1**2 * x1 / lm**2
          + a**4 * b0**4 * x1 / lm**4
          + 3 * b * b0 * l0 * l1
          + 18 * a**2 * b * b1 * b0**2 / lm**2
          + 12 * a * b**2 * b0**3 * l0 / lm**2
          + 4 * a**2 * b0**2 * l0**2 * x1 / lm**2
          + 3 * b**2 * b0**2 * l0**2 * x1 / lm**2
          + 4 * a**2 * b2 * b0 * x1 / lm**2
          + 4 * a * b * b0**2 * l1 * x1 / lm**2
          + 14 * a * b * b1 * b0 * l0 * x1 / lm**2)
    D4 = (6 * a * b * b1**2 / lm
          + 4 * a**3 * b * b0**4 / lm**3
          + 4 * a**2 * b0**2 * l1 / lm
          + 4 * b**2 * b0**2 * l1 / lm
          + a * b3 * x1 / lm
          + 3 * a * b1 * l0**2 * x1 / lm
          + b * b0 * l0**3 * x1 / lm
          + 14 * a * b * b0**2 * l0**2 / lm
          + 6 * a**3 * b1 * b0**2 * x1 / lm**3
          + 8 * a * b * b2 * b0 / lm
          + 3 * b * b1 * l1 * x1 / lm
          + 3 * b * b2 * l0 * x1 / lm
          + b * b0 * l2 * x1 / lm
          + 14 * a**2 * b1 * b0 * l0 / lm
          + 14 * b**2 * b1 * b0 * l0 / lm
          + 6 * a**2 * b * b0**3 * l0 * x1 / lm**3
          + 3 * a * b0 * l0 * l1 * x1 / lm)

    C5 = (b * b4 + 4 * a * b1 * l0**3 + 6 * b * b2 * l0**2 + 3 * b * b0 * l1**2
          + b * b0 * l0**4 + 4 * a * b1 * l2 + 6 * a * b2 * l1
          + 4 * a * b3 * l0 + a * b0 * l3 + 6 * a * b0 * l0**2 * l1
          + 5 * a**4 * b * b0**5 / lm**4
          + 10 * a**3 * b0**3 * l1 / lm**2
          + 12 * b * b1 * l0 * l1
          + 4 * b * b0 * l0 * l2
          + 15 * b**3 * b0**3 * l0**2 / lm**2
          + 45 * a**2 * b * b1**2 * b0 / lm**2
          + 30 * a**2 * b * b2 * b0**2 / lm**2
          + 20 * a * b**2 * b0**3 * l1 / lm**2
          + 50 * a**3 * b1 * b0**2 * l0 / lm**2
          + 10 * a**4 * b1 * b0**3 * x1 / lm**4
          + 60 * a**2 * b * b0**3 * l0**2 / lm**2
          + 10 * a**2 * b1 * b2 * x1 / lm**2
          + 5 * a**2 * b3 * b0 * x1 / lm**2
          + 100 * a * b**2 * b1 * b0**2 * l0 / lm**2
          + 15 * a * b * b0**2 * l0**3 * x1 / lm**2
          + 10 * a**3 * b * b0**4 * l0 * x1 / lm**4
          + 25 * a**2 * b1 * b0 * l0**2 * x1 / lm**2
          + 20 * b**2 * b1 * b0 * l0**2 * x1 / lm**2
          + 15 * a**2 * b0**2 * l0 * l1 * x1 / lm**2
          + 10 * b**2 * b0**2 * l0 * l1 * x1 / lm**2
          + 20 * a * b * b1**2 * l0 * x1 / lm**2
          + 5 * a * b * b0**2 * l2 * x1 / lm**2
          + 25 * a * b * b1 * b0 * l1 * x1 / lm**2
          + 25 * a * b * b2 * b0 * l0 * x1 / lm**2)
    D5 = (20 * a**2 * b1**2 * l0 / lm
          + 5 * a**2 * b0**2 * l2 / lm
          + 10 * a**4 * b0**4 * l0 / lm**3
          + 20 * b**2 * b1**2 * l0 / lm
          + 5 * b**2 * b0**2 * l2 / lm
          + a**5 * b0**5 * x1 / lm**5
          + a * b4 * x1 / lm
          + 15 * a**2 * b0**2 * l0**3 / lm
          + 15 * b**2 * b0**2 * l0**3 / lm
          + 6 * a * b2 * l0**2 * x1 / lm
          + 3 * a * b0 * l1**2 * x1 / lm
          + a * b0 * l0**4 * x1 / lm
          + 4 * b * b1 * l0**3 * x1 / lm
          + 40 * a**3 * b * b1 * b0**3 / lm**3
          + 15 * a**3 * b1**2 * b0 * x1 / lm**3
          + 10 * a**3 * b2 * b0**2 * x1 / lm**3
          + 20 * a * b * b1 * b2 / lm
          + 10 * a * b * b3 * b0 / lm
          + 4 * b * b1 * l2 * x1 / lm
          + 6 * b * b2 * l1 * x1 / lm
          + 4 * b * b3 * l0 * x1 / lm
          + b * b0 * l3 * x1 / lm
          + 30 * a**2 * b**2 * b0**4 * l0 / lm**3
          + 10 * a**3 * b0**3 * l0**2 * x1 / lm**3
          + 25 * a**2 * b1 * b0 * l1 / lm
          + 25 * a**2 * b2 * b0 * l0 / lm
          + 25 * b**2 * b1 * b0 * l1 / lm
          + 25 * b**2 * b2 * b0 * l0 / lm
          + 10 * a**2 * b * b0**3 * l1 * x1 / lm**3
          + 12 * a * b1 * l0 * l1 * x1 / lm
          + 4 * a * b0 * l0 * l2 * x1 / lm
          + 15 * a * b**2 * b0**3 * l0**2 * x1 / lm**3
          + 90 * a * b * b1 * b0 * l0**2 / lm
          + 50 * a * b * b0**2 * l0 * l1 / lm
          + 6 * b * b0 * l0**2 * l1 * x1 / lm
          + 50 * a**2 * b * b1 * b0**2 * l0 * x1 / lm**3)

    return [C1, C2, C3, C4, C5], [D1, D2, D3, D4, D5]
