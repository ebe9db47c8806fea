"""Step 2: anchored interval representations of each branch set."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Graph, Poset
from .errors import EmptyCliqueRegion, TwoPlusTwo
from .minor import BranchDecomposition, compute_bji

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class AnchoredIntervalRep:
    """Closed intervals for one branch set plus the anchor point for each neighbour index."""

    branch: int
    intervals: dict  # vertex -> (Fraction, Fraction)
    anchors: dict    # neighbour index -> Fraction

    def to_json(self) -> dict:
        return {
            "branch": self.branch,
            "intervals": {str(v): [str(a), str(b)] for v, (a, b) in self.intervals.items()},
            "anchors": {str(j): str(p) for j, p in sorted(self.anchors.items())},
        }


def closure(g: Graph, bd: BranchDecomposition, i) -> tuple:
    """The branch set together with every neighbouring branch's contact vertices."""
    out = list(bd.branch_sets[i])
    for j in sorted(bd.quotient.neighbors(i)):
        out.extend(compute_bji(g, bd, j, i))
    return tuple(out)


def interval_order_rep(p: Poset, s) -> dict:
    """Integer interval representation of the subposet of ``p`` on ``s``.

    The strict down-sets inside ``s`` form a chain ``D_0 < D_1 < ... < D_{k-1}``
    exactly when the subposet has no 2+2.  ``x`` gets ``[rank of its down-set,
    last index t with x not in D_t]``, so ``x < y`` iff ``r(x) < l(y)``.
    """
    members = set(s)
    elems = [x for x in p.elements if x in members]
    pred = {x: p.below(x) & members for x in elems}
    chain = sorted(set(pred.values()), key=len)
    for small, big in zip(chain, chain[1:]):
        if not small < big:
            x = next(x for x in elems if pred[x] == small)
            y = next(y for y in elems if pred[y] == big)
            a = min(small - big, key=p.elements.index)
            b = min(big - small, key=p.elements.index)
            raise TwoPlusTwo((a, x, b, y))
    rank = {d: t for t, d in enumerate(chain)}
    k = len(chain)
    rep = {}
    for x in elems:
        first_in = next((t for t, d in enumerate(chain) if x in d), k)
        rep[x] = (rank[pred[x]], first_in - 1)
    return rep


def shrink_to_anchors(rep: dict, g: Graph, bd: BranchDecomposition, i) -> AnchoredIntervalRep:
    """Collapse each neighbour's contact vertices to a single anchor point.

    Integer intervals are first widened to ``[2l - 1/2, 2r + 1/2]``.  This keeps
    the intersection pattern but gives every clique region positive length, so
    the anchor (the region's midpoint) never sits on an endpoint of an interval
    outside the clique.
    """
    wide = {v: (2 * l - HALF, 2 * r + HALF) for v, (l, r) in rep.items()}
    anchors = {}
    shrunk = {}
    for j in sorted(bd.quotient.neighbors(i)):
        outer = compute_bji(g, bd, j, i)
        members = outer + compute_bji(g, bd, i, j)
        lo = max(wide[v][0] for v in members)
        hi = min(wide[v][1] for v in members)
        if lo > hi:
            raise EmptyCliqueRegion(i, j, members)
        point = (lo + hi) / 2
        anchors[j] = point
        for v in outer:
            shrunk[v] = (point, point)
    wide.update(shrunk)
    return AnchoredIntervalRep(i, wide, anchors)


def restrict_to_branch(arep: AnchoredIntervalRep, bd: BranchDecomposition, i) -> AnchoredIntervalRep:
    keep = bd.branch_sets[i]
    return AnchoredIntervalRep(i, {v: arep.intervals[v] for v in keep}, dict(arep.anchors))


def anchored_closure_rep(g: Graph, p: Poset, bd: BranchDecomposition, i) -> AnchoredIntervalRep:
    """Anchored representation of the whole closure of branch ``i``."""
    return shrink_to_anchors(interval_order_rep(p, closure(g, bd, i)), g, bd, i)


def branch_representations(g: Graph, p: Poset, bd: BranchDecomposition) -> dict:
    return {i: restrict_to_branch(anchored_closure_rep(g, p, bd, i), bd, i)
            for i in bd.branch_sets}
