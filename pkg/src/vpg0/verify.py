"""Geometric and order-theoretic checks on a finished drawing.

Nothing here looks at decomposition data: every check works from the raw
segments, so a layout bug cannot hide behind the structure that produced it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import NamedTuple

from .core import Graph, Poset
from .layout import Drawing, Segment


class DRelation(NamedTuple):
    vh: bool
    hv: bool
    d: bool


def _meet(a, b) -> bool:
    return a[0] <= b[1] and b[0] <= a[1]


def segments_intersect(s1: Segment, s2: Segment) -> bool:
    """True iff the closed segments share a point."""
    return _meet(s1.xrange, s2.xrange) and _meet(s1.yrange, s2.yrange)


def intersection_graph(d: Drawing) -> Graph:
    return Graph(d.vertices, ((s.vertex, t.vertex) for s, t in combinations(d.segments, 2)
                              if segments_intersect(s, t)))


def _relation(sx: Segment, sy: Segment) -> DRelation:
    (x0, x1), (y0, y1) = sx.xrange, sx.yrange
    (u0, u1), (w0, w1) = sy.xrange, sy.yrange
    vh = y1 < w0 or (_meet((y0, y1), (w0, w1)) and x1 < u0)
    hv = x1 < u0 or (_meet((x0, x1), (u0, u1)) and y1 < w0)
    return DRelation(vh, hv, vh if sx.horizontal else hv)


def d_relation(d: Drawing, x, y) -> DRelation:
    """Below/left relations of ``x`` towards ``y`` as read off the drawing."""
    return _relation(d[x], d[y])


@dataclass
class CheckReport:
    name: str
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"check": self.name, "pass": self.ok, "checked": self.checked,
                "violations": self.violations}


def check_intersection_graph(d: Drawing, g: Graph) -> CheckReport:
    report = CheckReport("intersection-graph")
    if set(d.vertices) != set(g.vertices):
        missing = sorted(map(str, set(g.vertices) - set(d.vertices)))
        extra = sorted(map(str, set(d.vertices) - set(g.vertices)))
        report.violations.append({"kind": "vertex-mismatch", "missing": missing, "extra": extra})
        return report
    for s, t in combinations(d.segments, 2):
        report.checked += 1
        meets = segments_intersect(s, t)
        edge = g.adjacent(s.vertex, t.vertex)
        if meets and not edge:
            report.violations.append({"kind": "spurious-edge", "pair": [s.vertex, t.vertex]})
        elif edge and not meets:
            report.violations.append({"kind": "missing-edge", "pair": [s.vertex, t.vertex]})
    return report


def check_order(d: Drawing, p: Poset) -> CheckReport:
    """Compare the drawing's order with the poset over every ordered pair."""
    report = CheckReport("order")
    if set(d.vertices) != set(p.elements):
        report.violations.append({"kind": "vertex-mismatch"})
        return report
    bad = report.violations.append
    for x, y in permutations(d.vertices, 2):
        report.checked += 1
        sx, sy = d[x], d[y]
        if p.less(x, y):
            if segments_intersect(sx, sy):
                bad({"kind": "comparable-pair-intersects", "pair": [x, y]})
            elif not _relation(sx, sy).d:
                bad({"kind": "order-not-drawn", "pair": [x, y]})
        elif p.less(y, x):
            if _relation(sx, sy).d:
                bad({"kind": "reversed-order-drawn", "pair": [x, y]})
        elif not segments_intersect(sx, sy):
            bad({"kind": "incomparable-pair-disjoint", "pair": [x, y]})
    return report


def _bottom_right(b: Segment, t: Segment) -> bool:
    return b.yrange[1] < t.yrange[0] and b.xrange[0] > t.xrange[1]


def check_antisymmetry(d: Drawing) -> tuple | None:
    """First disjoint pair related both ways, or a segment bottom-right of a perpendicular one."""
    for s, t in combinations(d.segments, 2):
        if segments_intersect(s, t):
            continue
        if _relation(s, t).d and _relation(t, s).d:
            return (s.vertex, t.vertex)
        if s.dir != t.dir and (_bottom_right(s, t) or _bottom_right(t, s)):
            return (s.vertex, t.vertex)
    return None


@dataclass
class VerificationReport:
    checks: list

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {"pass": self.ok, "checks": [c.to_json() for c in self.checks]}


def verify_drawing(d: Drawing, g: Graph, p: Poset | None = None) -> VerificationReport:
    checks = [check_intersection_graph(d, g)]
    if p is not None:
        checks.append(check_order(d, p))
        anti = CheckReport("antisymmetry", checked=len(d) * (len(d) - 1) // 2)
        pair = check_antisymmetry(d)
        if pair is not None:
            anti.violations.append({"kind": "both-directions-or-bottom-right", "pair": list(pair)})
        checks.append(anti)
    return VerificationReport(checks)
