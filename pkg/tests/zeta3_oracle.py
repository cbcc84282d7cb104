"""Straight-line reference arithmetic for p = 3, independent of the package.

Elements a + b*zeta are plain (a, b) tuples, multiplied through the
single rewrite zeta^2 = -1 - zeta, with norm(a + b*zeta) = a^2 - a*b + b^2.
Nothing here touches the coefficient-vector machinery under test.
"""


def add(x, y):
    return (x[0] + y[0], x[1] + y[1])


def mul(x, y):
    a, b = x
    c, d = y
    # (a + b z)(c + d z) = ac + (ad + bc) z + bd z^2,  z^2 = -1 - z
    return (a * c - b * d, a * d + b * c - b * d)


def conj(x):
    # zeta -> zeta^2 = -1 - zeta
    a, b = x
    return (a - b, -b)


def norm(x):
    a, b = x
    return a * a - a * b + b * b


def phi(x):
    """(x - 1)^3 + 2 - zeta."""
    y = (x[0] - 1, x[1])
    y3 = mul(mul(y, y), y)
    return (y3[0] + 2, y3[1] - 1)


def orbit_of_one(n):
    """[phi(1), phi^2(1), ..., phi^n(1)] as (a, b) pairs."""
    x = (1, 0)
    out = []
    for _ in range(n):
        x = phi(x)
        out.append(x)
    return out
