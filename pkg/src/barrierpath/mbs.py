"""Disk family encoding a Subset Sum instance as Minimum Barrier Shrinkage.

Layout, in units of lambda = 10C where C = nL + 2*sum(a) + b:

* ``D{i}``   radius 4λ at (8iλ, 0), i = 0..n; neighbours are tangent.
* ``Dp{i}``  radius λ at ((8i-4)λ, 0), plugging the tangency between D{i-1}, D{i}.
* ``A{i}``/``B{i}`` radius 3λ above/below the axis whose overlaps with the
  neighbouring D disks are the gadget weights; ``A{n+1}``/``B{n+1}`` sit on the
  vertical x = (8n+4)λ with overlap 2b against D{n}.
* ``Ap{i}``/``Bp{i}`` radius 3λ at ((8i-4)λ, ±8λ).
* ``P{i}_{k}`` corridor disks of radius 3λ joining Ap{i} to Bp{i} along
  up / right / down / left / up; corridor i nests outside corridor i+1.

A and B centers are irrational; they are rounded to a grid of spacing
eps = 1/(6(n+1)) and then the whole instance is scaled by 1/eps so every
number is an integer.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .geom import (
    Disk,
    Point,
    contains_point,
    dist2,
    intersect_circle_vertical,
    intersect_circles,
    overlapping_pairs,
    penetration_cmp,
    penetration_depth,
    round_to_grid,
    scale_instance,
    triple_overlaps,
)
from .graph import Rational, as_rational
from .subset_sum import SubsetSumInstance

# lens-width bound for a radius-3 disk resting on two tangent radius-4 disks
# at height 5, i.e. 7 - sqrt(41) rounded down
GAP_DEPTH_BOUND = Fraction(59687, 100000)

# corridor step lengths in units of lambda/2; end steps use the longest one
_STEP_MIN, _STEP_MAX = 7, 9

_ID = re.compile(r"^(D|Dp|A|B|Ap|Bp)(\d+)$|^P(\d+)_(\d+)$")


class ValidationFailure(AssertionError):
    pass


class LayoutError(RuntimeError):
    pass


def parse_id(disk_id: str):
    """``"A3" -> ("A", 3)``, ``"P2_5" -> ("P", (2, 5))``."""
    m = _ID.match(disk_id)
    if not m:
        return None
    if m.group(1):
        return m.group(1), int(m.group(2))
    return "P", (int(m.group(3)), int(m.group(4)))


@dataclass(frozen=True)
class MbsInstance:
    disks: tuple
    x: Point
    y: Point
    markers: tuple
    budget: Rational
    lam: Rational
    scale: Rational = 1
    L: int | None = None
    source: SubsetSumInstance | None = None
    _by_id: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "disks", tuple(self.disks))
        object.__setattr__(self, "markers", tuple(self.markers))
        by_id = {}
        for d in self.disks:
            if d.id in by_id:
                raise ValueError("duplicate disk id %s" % d.id)
            by_id[d.id] = d
        object.__setattr__(self, "_by_id", by_id)

    def __contains__(self, disk_id) -> bool:
        return disk_id in self._by_id

    def disk(self, disk_id: str) -> Disk:
        return self._by_id[disk_id]

    @property
    def n(self) -> int:
        return sum(1 for d in self.disks if d.role == "D") - 1

    @property
    def slack_budget(self) -> Rational:
        """Budget plus a third of a construction unit: (C + 1/3) * scale."""
        return as_rational(self.budget + Fraction(self.scale) / 3)

    def corridor(self, i: int) -> list:
        """Corridor disks of path i in order from Ap{i} to Bp{i}."""
        ks = []
        for d in self.disks:
            parsed = parse_id(d.id)
            if parsed and parsed[0] == "P" and parsed[1][0] == i:
                ks.append((parsed[1][1], d))
        return [d for _, d in sorted(ks, key=lambda t: t[0])]

    def scaled(self, factor) -> "MbsInstance":
        factor = as_rational(factor)
        pts = [self.x, self.y, *self.markers]
        disks, pts, budget = scale_instance(self.disks, pts, self.budget, factor)
        _, _, lam = scale_instance([], [], self.lam, factor)
        return MbsInstance(
            tuple(disks), pts[0], pts[1], tuple(pts[2:]), budget, lam,
            as_rational(self.scale * factor), self.L, self.source,
        )


def gap_targets(L: int, a, b: int) -> dict:
    """Intended overlap of every gap pair, in construction units."""
    n = len(a)
    out = {}
    for i, ai in enumerate(a, start=1):
        out[("D%d" % (i - 1), "A%d" % i)] = L + 2 * ai
        out[("A%d" % i, "D%d" % i)] = L + 2 * ai
        out[("D%d" % (i - 1), "B%d" % i)] = L + ai
        out[("B%d" % i, "D%d" % i)] = L + 3 * ai
    out[("D%d" % n, "A%d" % (n + 1))] = 2 * b
    out[("D%d" % n, "B%d" % (n + 1))] = 2 * b
    return out


def gap_pairs(n: int) -> list:
    out = []
    for i in range(1, n + 1):
        out += [("D%d" % (i - 1), "A%d" % i), ("A%d" % i, "D%d" % i),
                ("D%d" % (i - 1), "B%d" % i), ("B%d" % i, "D%d" % i)]
    out += [("D%d" % n, "A%d" % (n + 1)), ("D%d" % n, "B%d" % (n + 1))]
    return out


def thick_pairs(inst: MbsInstance) -> list:
    """Pairs that must overlap by at least lambda: walls no cheap curve crosses."""
    n = inst.n
    out = []
    for i in range(1, n + 1):
        out += [("D%d" % (i - 1), "Dp%d" % i), ("D%d" % i, "Dp%d" % i)]
    for i in range(1, n + 2):
        out += [("A%d" % i, "Ap%d" % i), ("B%d" % i, "Bp%d" % i)]
        chain = ["Ap%d" % i] + [d.id for d in inst.corridor(i)] + ["Bp%d" % i]
        out += list(zip(chain, chain[1:]))
    return out


def _split(units: int) -> list:
    """Step lengths for a polyline segment between two anchors (lambda/2 units)."""
    if units == _STEP_MAX:
        return [units]
    middle = units - 2 * _STEP_MAX
    if middle < 0:
        raise LayoutError("segment of %d half-lambdas is too short" % units)
    if middle == 0:
        return [_STEP_MAX, _STEP_MAX]
    k = -(-middle // _STEP_MAX)
    if k * _STEP_MIN > middle:
        raise LayoutError("segment of %d half-lambdas cannot be subdivided" % units)
    base, extra = divmod(middle, k)
    return [_STEP_MAX] + [base + 1] * extra + [base] * (k - extra) + [_STEP_MAX]


def corridor_centers(n: int, i: int, lam: int) -> list:
    """Corridor centers of path i strictly between Ap{i} and Bp{i}."""
    h = lam // 2
    x0 = 2 * (8 * i - 4)
    top = 2 * (8 + 9 * (n + 2 - i))
    right = 2 * ((8 * n + 13) + 9 * (n + 1 - i))
    corners = [(x0, 16), (x0, top), (right, top), (right, -top), (x0, -top), (x0, -16)]
    pts = []
    for (ax, ay), (bx, by) in zip(corners, corners[1:]):
        length = abs(bx - ax) + abs(by - ay)
        dx, dy = (bx > ax) - (bx < ax), (by > ay) - (by < ay)
        pos = 0
        for step in _split(length):
            pos += step
            pts.append((ax + dx * pos, ay + dy * pos))
    pts.pop()  # the last point is Bp{i} itself
    return [Point(px * h, py * h) for px, py in pts]


def build(inst: SubsetSumInstance, eps=None) -> MbsInstance:
    """Rounded and integer-scaled hard instance for ``inst``.

    ``eps`` is the rounding grid in construction units, 1/(6(n+1)) by default;
    the result is scaled by 1/eps.
    """
    n, a, b = inst.n, inst.a, inst.b
    L = 2 * sum(a) + 2
    C = n * L + 2 * sum(a) + b
    lam = 10 * C
    eps = Fraction(1, 6 * (n + 1)) if eps is None else Fraction(eps)
    if eps.numerator != 1:
        raise ValueError("eps must be the reciprocal of an integer")

    disks = []
    for i in range(n + 1):
        disks.append(Disk(Point(8 * i * lam, 0), 4 * lam, "D%d" % i, "D"))
    for i in range(1, n + 1):
        disks.append(Disk(Point((8 * i - 4) * lam, 0), lam, "Dp%d" % i, "Dprime"))
    for i, ai in enumerate(a, start=1):
        left, right = Point(8 * (i - 1) * lam, 0), Point(8 * i * lam, 0)
        r_a = 7 * lam - (L + 2 * ai)
        ca = intersect_circles(left, r_a, right, r_a, "above")
        cb = intersect_circles(left, 7 * lam - (L + ai), right, 7 * lam - (L + 3 * ai), "below")
        disks.append(Disk(round_to_grid(ca, eps), 3 * lam, "A%d" % i, "A"))
        disks.append(Disk(round_to_grid(cb, eps), 3 * lam, "B%d" % i, "B"))
    last = Point(8 * n * lam, 0)
    xe = (8 * n + 4) * lam
    for half, name in (("above", "A"), ("below", "B")):
        c = intersect_circle_vertical(last, 7 * lam - 2 * b, xe, half)
        disks.append(Disk(round_to_grid(c, eps), 3 * lam, "%s%d" % (name, n + 1), name))
    for i in range(1, n + 2):
        disks.append(Disk(Point((8 * i - 4) * lam, 8 * lam), 3 * lam, "Ap%d" % i, "Aprime"))
        disks.append(Disk(Point((8 * i - 4) * lam, -8 * lam), 3 * lam, "Bp%d" % i, "Bprime"))
    for i in range(1, n + 2):
        for k, c in enumerate(corridor_centers(n, i, lam), start=1):
            disks.append(Disk(c, 3 * lam, "P%d_%d" % (i, k), "Corridor"))

    walls = [(8 * n + 13) * lam + 9 * lam * (n + 1 - i) for i in range(1, n + 2)]
    markers = [Point(Fraction(walls[i - 1] + walls[i], 2), 0) for i in range(1, n + 1)]
    x = Point(-6 * lam, 0)
    y = Point((8 * n + 5) * lam, 0)
    raw = MbsInstance(tuple(disks), x, y, tuple(markers), C, lam, 1, L, inst)
    return raw.scaled(1 / eps)


@dataclass
class Check:
    name: str
    passed: bool
    margin: float | None = None
    detail: str = ""


@dataclass
class ValidationReport:
    checks: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self):
        return next((c for c in self.checks if not c.passed), None)

    def __iter__(self):
        return iter(self.checks)


def _integral(v) -> bool:
    return isinstance(v, int) or (isinstance(v, Fraction) and v.denominator == 1)


def validation_checks(inst: MbsInstance) -> ValidationReport:
    """Run every structural check and collect results without raising."""
    lam = inst.lam
    checks = []
    add = checks.append
    n = inst.n

    numbers = [inst.budget, inst.lam] + [v for p in (inst.x, inst.y, *inst.markers) for v in p]
    for d in inst.disks:
        numbers += [d.center[0], d.center[1], d.radius]
    add(Check("integral data", all(_integral(v) for v in numbers)))

    thick = thick_pairs(inst)
    gaps = gap_pairs(n)
    missing = [p for p in thick + gaps if p[0] not in inst or p[1] not in inst]
    add(Check("all constructed disks present", not missing, detail=str(missing[:3])))
    if missing:
        return ValidationReport(checks)

    for p, q in thick:
        d1, d2 = inst.disk(p), inst.disk(q)
        ok = penetration_cmp(d1, d2, lam) >= 0
        add(Check("thick %s:%s >= lambda" % (p, q), ok, penetration_depth(d1, d2) / float(lam)))
    for p, q in gaps:
        d1, d2 = inst.disk(p), inst.disk(q)
        ok = penetration_cmp(d1, d2, 0) > 0 and penetration_cmp(d1, d2, GAP_DEPTH_BOUND * lam) < 0
        add(Check("gap %s:%s in (0, 0.59687 lambda)" % (p, q), ok, penetration_depth(d1, d2) / float(lam)))

    if inst.source is not None and inst.L is not None:
        targets = gap_targets(inst.L, inst.source.a, inst.source.b)
        for (p, q), target in targets.items():
            d1, d2 = inst.disk(p), inst.disk(q)
            ideal = target * inst.scale
            ok = penetration_cmp(d1, d2, ideal + 2) <= 0 and penetration_cmp(d1, d2, ideal - 2) >= 0
            add(Check("gap %s:%s within 2 of target" % (p, q), ok, penetration_depth(d1, d2) - float(ideal)))

    for i in range(1, n + 2):
        for name in ("A", "B"):
            inner, outer = inst.disk("%s%d" % (name, i)), inst.disk("%sp%d" % (name, i))
            ok = contains_point(outer, inner.center)
            add(Check("%s contains center of %s" % (outer.id, inner.id), ok))
            ok = penetration_cmp(inner, outer, 3 * lam) >= 0
            add(Check("%s:%s >= 3 lambda" % (inner.id, outer.id), ok, penetration_depth(inner, outer) / float(lam)))

    expected = {frozenset(p) for p in thick + gaps}
    idx = {d.id: k for k, d in enumerate(inst.disks)}
    pairs = overlapping_pairs(inst.disks)
    extra = [
        (inst.disks[i].id, inst.disks[j].id)
        for i, j in pairs
        if frozenset((inst.disks[i].id, inst.disks[j].id)) not in expected
    ]
    for i in range(1, n + 1):
        trio = ["Dp%d" % i, "A%d" % i, "B%d" % i]
        ok = not any((min(idx[p], idx[q]), max(idx[p], idx[q])) in set(pairs) for p, q in
                     [(trio[0], trio[1]), (trio[0], trio[2]), (trio[1], trio[2])])
        add(Check("Dp%d, A%d, B%d pairwise disjoint" % (i, i, i), ok))
    ok = not any(
        (min(idx[p], idx[q]), max(idx[p], idx[q])) in set(pairs) for p, q in [("A%d" % (n + 1), "B%d" % (n + 1))]
    )
    add(Check("A%d, B%d disjoint" % (n + 1, n + 1), ok))
    add(Check("no unintended overlaps", not extra, detail=", ".join("%s:%s" % e for e in extra[:5])))

    triples = triple_overlaps(inst.disks)
    add(Check("no point in three disks", not triples,
              detail=", ".join("/".join(inst.disks[k].id for k in t) for t in triples[:3])))

    named = [("x", inst.x), ("y", inst.y)] + [("y%d" % i, m) for i, m in enumerate(inst.markers, start=1)]
    add(Check("one marker per tunnel", len(inst.markers) == n))
    for label, pt in named:
        clear = min(dist2(d.center, pt) - d.radius * d.radius for d in inst.disks)
        add(Check("%s outside every disk" % label, clear > 0))
    return ValidationReport(checks)


def validate(inst: MbsInstance) -> ValidationReport:
    """Check the construction; raise :class:`ValidationFailure` on the first violation."""
    report = validation_checks(inst)
    bad = report.first_failure()
    if bad is not None:
        raise ValidationFailure(("%s %s" % (bad.name, bad.detail)).strip())
    return report
