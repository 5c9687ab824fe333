"""Independent reference computations used to freeze expected values."""

from fractions import Fraction
from math import gcd


def prismatoid_volume(a, b, c, d, H):
    """Exact volume from the cross-sections at the bottom, middle and top.

    The section at height h is a rectangle whose sides shrink linearly, so
    its area is quadratic in h and Simpson's rule is exact.
    """
    mid = Fraction(a + c, 2) * Fraction(b + d, 2)
    return Fraction(H, 6) * (a * b + 4 * mid + c * d)


def apex_heights_short_side(b, d, H):
    """Apex heights via similar triangles on the short sides."""
    return Fraction(H * b, b - d), Fraction(H * d, b - d)


def three_squares_double_loop(t_max):
    """Canonical (x, y, z, t) with t <= t_max, scanning (t, z, y) and solving for x."""
    out = []
    for t in range(1, t_max + 1):
        for z in range(1, t):
            for y in range(1, z + 1):
                rest = t * t - z * z - y * y
                if rest < 1:
                    break
                x = int(rest**0.5 + 0.5)
                if x * x == rest and x <= y:
                    out.append((x, y, z, t))
    return out


def two_square_triple_loop(z_max):
    return [
        (X, Y, Z)
        for Z in range(1, z_max + 1)
        for Y in range(1, Z)
        for X in range(1, Z)
        if X * X + 2 * Y * Y == Z * Z
    ]


def lowest_terms(a, b):
    g = gcd(a, b)
    return g, a // g, b // g
