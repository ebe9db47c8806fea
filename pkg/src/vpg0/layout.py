"""Step 3: place every branch set on its own grid line and emit the drawing.

Odd branch sets become vertical segments on the column ``x = index`` and even
branch sets horizontal segments on the row ``y = index``.  Each anchor is
pinned to the grid point of the neighbouring branch set, so contact between
two branch sets happens exactly at ``(odd index, even index)``.
"""

from __future__ import annotations

import json
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction

from .characterization import Classification, classify_b0
from .core import Graph, Ordering, Poset
from .errors import ParseError, PinOrderMismatch
from .intervalrep import AnchoredIntervalRep, branch_representations
from .minor import LabeledDecomposition, label_branch_sets, reduced_dd_minor

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


@dataclass(frozen=True)
class Segment:
    """Closed axis-parallel segment ``at`` on the fixed axis, ``[lo, hi]`` along the other."""

    vertex: object
    dir: str  # "H" or "V"
    at: Fraction
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.dir not in ("H", "V"):
            raise ValueError(f"segment direction must be 'H' or 'V', got {self.dir!r}")
        if self.lo > self.hi:
            raise ValueError(f"segment for {self.vertex!r} has lo > hi")

    @property
    def horizontal(self) -> bool:
        return self.dir == "H"

    @property
    def xrange(self) -> tuple[Fraction, Fraction]:
        return (self.lo, self.hi) if self.horizontal else (self.at, self.at)

    @property
    def yrange(self) -> tuple[Fraction, Fraction]:
        return (self.at, self.at) if self.horizontal else (self.lo, self.hi)


@dataclass(frozen=True)
class Drawing:
    segments: tuple
    branch: dict = field(default_factory=dict)
    sigma: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "_by_vertex", {s.vertex: s for s in self.segments})
        if len(self._by_vertex) != len(self.segments):
            raise ValueError("drawing has two segments for one vertex")

    def __getitem__(self, v) -> Segment:
        return self._by_vertex[v]

    def __len__(self) -> int:
        return len(self.segments)

    @property
    def vertices(self) -> tuple:
        return tuple(s.vertex for s in self.segments)

    def replace(self, seg: Segment) -> "Drawing":
        segs = tuple(seg if s.vertex == seg.vertex else s for s in self.segments)
        return Drawing(segs, dict(self.branch), self.sigma)


@dataclass(frozen=True)
class B0Result:
    classification: Classification
    drawing: Drawing | None = None
    decomposition: LabeledDecomposition | None = None
    reps: dict | None = None

    @property
    def verdict(self) -> str:
        return self.classification.verdict

    @property
    def witness(self):
        return self.classification.witness


def monotone_rescale(arep: AnchoredIntervalRep, pins: dict, outer_span) -> dict:
    """Move every anchor onto its pin with a strictly increasing piecewise-linear map.

    Endpoints left of the first anchor are squeezed into ``[lo, first pin)``
    and those right of the last anchor into ``(last pin, hi]``; the smallest
    and largest endpoints land exactly on ``lo`` and ``hi``.
    """
    lo, hi = (Fraction(v) for v in outer_span)
    if set(pins) != set(arep.anchors):
        raise PinOrderMismatch(f"pins {sorted(pins)} do not match anchors {sorted(arep.anchors)}")
    keys = sorted(arep.anchors)
    src = [Fraction(arep.anchors[k]) for k in keys]
    dst = [Fraction(pins[k]) for k in keys]
    if any(a >= b for a, b in zip(src, src[1:])):
        raise PinOrderMismatch(f"anchors are not increasing with neighbour index: {src}")
    if any(a >= b for a, b in zip(dst, dst[1:])):
        raise PinOrderMismatch(f"pin targets are not strictly increasing: {dst}")
    if dst and not lo < dst[0] <= dst[-1] < hi:
        raise PinOrderMismatch(f"outer span [{lo}, {hi}] does not strictly contain the pins")
    if lo > hi:
        raise PinOrderMismatch("outer span is reversed")

    values = [Fraction(x) for iv in arep.intervals.values() for x in iv] + src
    if not values:
        return {}
    vmin, vmax = min(values), max(values)

    def f(v: Fraction) -> Fraction:
        if not src:
            if vmin == vmax:
                return (lo + hi) / 2
            return lo + (v - vmin) * (hi - lo) / (vmax - vmin)
        if v < src[0]:
            return lo + (v - vmin) * (dst[0] - lo) / (src[0] - vmin)
        if v > src[-1]:
            return dst[-1] + (v - src[-1]) * (hi - dst[-1]) / (vmax - src[-1])
        k = bisect_right(src, v) - 1
        if src[k] == v:
            return dst[k]
        return dst[k] + (v - src[k]) * (dst[k + 1] - dst[k]) / (src[k + 1] - src[k])

    return {v: (f(Fraction(a)), f(Fraction(b))) for v, (a, b) in arep.intervals.items()}


def _span(ld: LabeledDecomposition, i: int) -> tuple[Fraction, Fraction]:
    nbrs = ld.neighbor_indices(i)
    if nbrs:
        return nbrs[0] - HALF, nbrs[-1] + HALF
    # isolated branch: sit between row e* and row e*+1, clear of every row
    here = ld.sigma.position(ld.representative[i])
    earlier = [e for e in ld.even if ld.sigma.position(ld.representative[e]) < here]
    top = max(earlier, default=-1)
    return top + QUARTER, top + 3 * QUARTER


def place(ld: LabeledDecomposition, reps: dict) -> Drawing:
    segs = {}
    for i in ld.branch_sets:
        pins = {j: Fraction(j) for j in ld.neighbor_indices(i)}
        scaled = monotone_rescale(reps[i], pins, _span(ld, i))
        d = "V" if i % 2 else "H"
        for v, (a, b) in scaled.items():
            segs[v] = Segment(v, d, Fraction(i), a, b)
    order = ld.sigma.sequence
    return Drawing(tuple(segs[v] for v in order), dict(ld.branch_of), tuple(order))


def draw_b0(g: Graph, poset: Poset | None = None, sigma=None) -> B0Result:
    """Run recognition and, on yes-instances, the three drawing steps."""
    cls = classify_b0(g, poset, sigma)
    if not cls.accepted:
        return B0Result(cls)
    bd = reduced_dd_minor(g, cls.sigma)
    ld = label_branch_sets(bd, cls.sigma)
    reps = branch_representations(g, cls.poset, ld)
    placed = place(ld, reps)
    drawing = Drawing(tuple(placed[v] for v in g.vertices), placed.branch, placed.sigma)
    return B0Result(cls, drawing, ld, reps)


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def drawing_to_dict(d: Drawing) -> dict:
    segs = []
    for s in d.segments:
        item = {"v": s.vertex, "dir": s.dir, "at": format_rational(s.at),
                "span": [format_rational(s.lo), format_rational(s.hi)]}
        if s.vertex in d.branch:
            item["branch"] = d.branch[s.vertex]
        segs.append(item)
    out = {"segments": segs}
    if d.sigma is not None:
        out["sigma"] = list(d.sigma)
    return out


def drawing_to_json(d: Drawing) -> str:
    """Canonical serialisation: compact separators, fixed key order, trailing newline."""
    return json.dumps(drawing_to_dict(d), separators=(",", ":"), ensure_ascii=False) + "\n"


def _rational(text, where) -> Fraction:
    if not isinstance(text, str):
        raise ParseError(f"{where}: rationals must be 'num/den' strings, got {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{where}: bad rational {text!r}") from None


def drawing_from_dict(obj) -> Drawing:
    if not isinstance(obj, dict) or not isinstance(obj.get("segments"), list):
        raise ParseError("drawing must be an object with a 'segments' list")
    segs, branch = [], {}
    for k, item in enumerate(obj["segments"]):
        where = f"segments[{k}]"
        if not isinstance(item, dict) or not {"v", "dir", "at", "span"} <= item.keys():
            raise ParseError(f"{where}: needs keys v, dir, at, span")
        span = item["span"]
        if not isinstance(span, list) or len(span) != 2:
            raise ParseError(f"{where}: span must be a two-element list")
        if item["dir"] not in ("H", "V"):
            raise ParseError(f"{where}: dir must be 'H' or 'V'")
        lo, hi = _rational(span[0], where), _rational(span[1], where)
        if lo > hi:
            raise ParseError(f"{where}: span is reversed")
        segs.append(Segment(item["v"], item["dir"], _rational(item["at"], where), lo, hi))
        if "branch" in item:
            branch[item["v"]] = item["branch"]
    sigma = obj.get("sigma")
    try:
        return Drawing(tuple(segs), branch, tuple(sigma) if sigma is not None else None)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def drawing_from_json(text: str) -> Drawing:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    return drawing_from_dict(obj)
