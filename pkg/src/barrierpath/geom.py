"""Disk geometry with exact predicates.

Coordinates and radii are exact rationals.  Distances between centers are
generally irrational, so every threshold decision is reduced to the sign of
a number of the form ``a + t*sqrt(q)`` with rational ``a, t, q`` and decided
exactly.  Floats appear only in :func:`place_on_two_circles` and in values
reported for humans.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .graph import Rational, as_rational

ROLES = ("D", "Dprime", "A", "B", "Aprime", "Bprime", "Corridor")


class NoIntersection(ValueError):
    pass


class NonIntegerOutput(ValueError):
    pass


class Point(NamedTuple):
    x: Rational
    y: Rational


@dataclass(frozen=True)
class Disk:
    """Open disk; boundary contact is not overlap."""

    center: Point
    radius: Rational
    id: str
    role: str = "D"

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("disk %s needs a positive radius" % self.id)
        if self.role not in ROLES:
            raise ValueError("unknown role %r" % self.role)
        if not isinstance(self.center, Point):
            object.__setattr__(self, "center", Point(*self.center))


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _floor(v) -> int:
    return math.floor(v)


def surd_sign(a, t, q) -> int:
    """Sign of ``a + t*sqrt(q)`` for rationals with ``q >= 0``."""
    if q < 0:
        raise ValueError("negative radicand")
    s = _sign(t) if q else 0
    sa = _sign(a)
    if s == 0:
        return sa
    if sa == 0 or sa == s:
        return s
    diff = a * a - t * t * q
    if diff > 0:
        return sa
    if diff < 0:
        return s
    return 0


def isqrt_floor(q) -> int:
    """``floor(sqrt(q))`` for a nonnegative rational."""
    if q < 0:
        raise ValueError("negative radicand")
    return math.isqrt(_floor(q))


def floor_surd(a, t, q) -> int:
    """``floor(a + t*sqrt(q))`` computed exactly."""
    bits = 64
    approx = Fraction(isqrt_floor(Fraction(q) * (1 << (2 * bits))), 1 << bits)
    k = _floor(a + t * approx)
    while surd_sign(a - k, t, q) < 0:
        k -= 1
    while surd_sign(a - (k + 1), t, q) >= 0:
        k += 1
    return k


@dataclass(frozen=True)
class SurdPoint:
    """Point ``(mx + tx*sqrt(q), my + ty*sqrt(q))`` with exact rational parts."""

    mx: Rational
    tx: Rational
    my: Rational
    ty: Rational
    q: Rational

    def approx(self) -> Point:
        r = math.sqrt(self.q)
        return Point(float(self.mx) + float(self.tx) * r, float(self.my) + float(self.ty) * r)


def dist2(p: Point, q: Point):
    dx = p[0] - q[0]
    dy = p[1] - q[1]
    return dx * dx + dy * dy


def overlaps(d1: Disk, d2: Disk) -> bool:
    rs = d1.radius + d2.radius
    return dist2(d1.center, d2.center) < rs * rs


def contains_point(d: Disk, p: Point) -> bool:
    """Whether ``p`` lies in the open disk."""
    return dist2(d.center, p) < d.radius * d.radius


def penetration_depth(d1: Disk, d2: Disk) -> float:
    """``r + r' - |c - c'|`` as a float, for reporting only."""
    return float(d1.radius + d2.radius) - math.sqrt(dist2(d1.center, d2.center))


def penetration_cmp(d1: Disk, d2: Disk, tau, shrink=0) -> int:
    """Exact sign of ``penetration(d1, d2) - shrink - tau``."""
    return surd_sign(d1.radius + d2.radius - shrink - tau, -1, dist2(d1.center, d2.center))


def penetration_ceil(d1: Disk, d2: Disk, bits: int = 40) -> Rational:
    """Smallest multiple of ``2**-bits`` that is at least the penetration depth."""
    scale = 1 << bits
    root = isqrt_floor(dist2(d1.center, d2.center) * scale * scale)
    return as_rational(Fraction((d1.radius + d2.radius) * scale - root, scale))


def _side(half: str) -> int:
    if half not in ("above", "below"):
        raise ValueError("half must be 'above' or 'below'")
    return 1 if half == "above" else -1


def intersect_circles(c1: Point, R1, c2: Point, R2, half: str = "above") -> SurdPoint:
    """Exact intersection of two circles on the chosen side of the line c1->c2.

    "above" is the left side when walking from ``c1`` to ``c2``.
    """
    ex, ey = c2[0] - c1[0], c2[1] - c1[1]
    d2 = ex * ex + ey * ey
    if d2 == 0:
        raise NoIntersection("concentric circles")
    lo, hi = (R1 - R2) ** 2, (R1 + R2) ** 2
    if not lo < d2 < hi:
        raise NoIntersection("circles do not properly intersect")
    along = Fraction(R1 * R1 - R2 * R2 + d2, 2 * d2)
    q = Fraction(R1 * R1, d2) - along * along
    s = _side(half)
    return SurdPoint(
        as_rational(c1[0] + along * ex), as_rational(-s * ey),
        as_rational(c1[1] + along * ey), as_rational(s * ex),
        as_rational(q),
    )


def intersect_circle_vertical(c: Point, R, x0, half: str = "above") -> SurdPoint:
    """Exact point at abscissa ``x0`` on the circle, above or below its center."""
    q = R * R - (x0 - c[0]) ** 2
    if q <= 0:
        raise NoIntersection("vertical line misses the circle")
    return SurdPoint(as_rational(x0), 0, as_rational(c[1]), _side(half), as_rational(q))


def place_on_two_circles(c1: Point, R1, c2: Point, R2, half: str = "above") -> Point:
    """Floating-point intersection point of two circles (see :func:`intersect_circles`)."""
    x1, y1, x2, y2 = float(c1[0]), float(c1[1]), float(c2[0]), float(c2[1])
    R1, R2 = float(R1), float(R2)
    ex, ey = x2 - x1, y2 - y1
    d = math.hypot(ex, ey)
    if not abs(R1 - R2) < d < R1 + R2:
        raise NoIntersection("circles do not properly intersect")
    along = (R1 * R1 - R2 * R2 + d * d) / (2 * d)
    h = math.sqrt(max(R1 * R1 - along * along, 0.0))
    s = _side(half)
    return Point(x1 + (along * ex - s * h * ey) / d, y1 + (along * ey + s * h * ex) / d)


def _round_surd(m, t, q, eps) -> Rational:
    m, t = Fraction(m) / eps, Fraction(t) / eps
    if surd_sign(m, t, q) >= 0:
        k = floor_surd(m + Fraction(1, 2), t, q)
    else:
        k = -floor_surd(-m + Fraction(1, 2), -t, q)
    return as_rational(k * eps)


def round_to_grid(p, eps) -> Point:
    """Round each coordinate to the nearest multiple of ``eps`` (ties away from zero).

    Accepts a :class:`Point` of floats or rationals, or a :class:`SurdPoint`;
    the rounding itself is exact in every case.
    """
    eps = as_rational(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if isinstance(p, SurdPoint):
        return Point(_round_surd(p.mx, p.tx, p.q, eps), _round_surd(p.my, p.ty, p.q, eps))
    return Point(*(_round_surd(Fraction(c), 0, 0, eps) for c in p))


def _scaled_int(v, factor, what):
    out = v * factor
    if isinstance(out, Fraction):
        if out.denominator != 1:
            raise NonIntegerOutput("%s is not integral after scaling: %s" % (what, out))
        out = out.numerator
    return out


def scale_instance(disks, points, budget, factor):
    """Multiply every coordinate, radius and the budget by ``factor``.

    Raises :class:`NonIntegerOutput` unless everything becomes an integer.
    """
    factor = as_rational(factor)
    if factor <= 0:
        raise ValueError("factor must be positive")
    out_disks = [
        Disk(
            Point(_scaled_int(d.center[0], factor, d.id), _scaled_int(d.center[1], factor, d.id)),
            _scaled_int(d.radius, factor, d.id),
            d.id,
            d.role,
        )
        for d in disks
    ]
    out_points = [Point(_scaled_int(p[0], factor, "point"), _scaled_int(p[1], factor, "point")) for p in points]
    return out_disks, out_points, _scaled_int(budget, factor, "budget")


def overlapping_pairs(disks) -> list:
    """Index pairs (i, j), i < j, of overlapping open disks (sweep along x)."""
    order = sorted(range(len(disks)), key=lambda k: disks[k].center[0] - disks[k].radius)
    rmax = max((d.radius for d in disks), default=0)
    out = []
    for pos, i in enumerate(order):
        di = disks[i]
        right = di.center[0] + di.radius
        for j in order[pos + 1:]:
            dj = disks[j]
            if dj.center[0] - dj.radius >= right:
                break
            if abs(dj.center[1] - di.center[1]) >= di.radius + rmax:
                continue
            if overlaps(di, dj):
                out.append((min(i, j), max(i, j)))
    return sorted(out)


def _contained(small: Disk, big: Disk) -> bool:
    gap = big.radius - small.radius
    return gap >= 0 and dist2(small.center, big.center) <= gap * gap


def _lens_vertex_inside(di: Disk, dj: Disk, dk: Disk) -> bool:
    ci, cj, ck = di.center, dj.center, dk.center
    ex, ey = cj[0] - ci[0], cj[1] - ci[1]
    d2 = ex * ex + ey * ey
    along = Fraction(di.radius ** 2 - dj.radius ** 2 + d2, 2 * d2)
    q = Fraction(di.radius ** 2, d2) - along * along
    mx, my = ci[0] + along * ex, ci[1] + along * ey
    # vertex = m + s*sqrt(q)*(-ey, ex); test |vertex - ck|^2 - rk^2 < 0
    wx, wy = mx - ck[0], my - ck[1]
    a = wx * wx + wy * wy + q * d2 - dk.radius ** 2
    b = 2 * (wx * -ey + wy * ex)
    return surd_sign(a, b, q) < 0 or surd_sign(a, -b, q) < 0


def triple_overlaps(disks) -> list:
    """Triples (i, j, k) of disks sharing a common point."""
    pairs = overlapping_pairs(disks)
    nbr = {}
    for i, j in pairs:
        nbr.setdefault(i, set()).add(j)
        nbr.setdefault(j, set()).add(i)
    bad = []
    for i, j in pairs:
        for k in sorted(nbr[i] & nbr[j]):
            if k <= j:
                continue
            trio = (disks[i], disks[j], disks[k])
            if any(_contained(p, r) for p in trio for r in trio if p is not r):
                bad.append((i, j, k))
                continue
            if (
                _lens_vertex_inside(trio[0], trio[1], trio[2])
                or _lens_vertex_inside(trio[0], trio[2], trio[1])
                or _lens_vertex_inside(trio[1], trio[2], trio[0])
            ):
                bad.append((i, j, k))
    return bad


def triple_overlap_free(disks) -> bool:
    return not triple_overlaps(disks)
