"""Step 1 of the drawing algorithm: contract the graph to a bipartite minor.

Branch sets are identified by small integers.  After :func:`label_branch_sets`
the integers are the final odd/even indices: odd branch sets become columns and
even branch sets become rows of the drawing.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, product

from .characterization import check_condition_i, diamond_classes
from .core import Graph, Ordering, induced_c4_list
from .errors import ConditionIViolated, NotAdjacent, NotBipartite


@dataclass(frozen=True)
class BranchDecomposition:
    branch_of: dict
    branch_sets: dict
    quotient: Graph
    representative: dict

    def to_json(self) -> dict:
        return {
            "branches": {str(i): list(vs) for i, vs in sorted(self.branch_sets.items())},
            "quotientEdges": [sorted(e) for e in self.quotient.edges()],
        }


@dataclass(frozen=True)
class LabeledDecomposition(BranchDecomposition):
    """Branch decomposition whose ids are the odd/even drawing indices."""

    sigma: Ordering
    original_id: dict = field(default_factory=dict)

    def neighbor_indices(self, i) -> list[int]:
        return sorted(self.quotient.neighbors(i))

    @property
    def odd(self) -> list[int]:
        return sorted(i for i in self.branch_sets if i % 2)

    @property
    def even(self) -> list[int]:
        return sorted(i for i in self.branch_sets if i % 2 == 0)


@dataclass
class ReducedReport:
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def failed(self, check: str) -> bool:
        return any(c == check for c, _ in self.failures)

    def to_json(self) -> dict:
        return {"ok": self.ok, "failures": [{"check": c, "detail": d} for c, d in self.failures]}


def decomposition_from_groups(g: Graph, groups, ord: Ordering) -> BranchDecomposition:
    """Decomposition with the given vertex groups, numbered by σ-order of their leftmost vertex."""
    groups = [sorted(grp, key=ord.position) for grp in groups]
    groups.sort(key=lambda grp: ord.position(grp[0]))
    branch_of = {v: i for i, grp in enumerate(groups) for v in grp}
    qedges = {(min(branch_of[u], branch_of[v]), max(branch_of[u], branch_of[v]))
              for u, v in g.edges() if branch_of[u] != branch_of[v]}
    return BranchDecomposition(
        branch_of=branch_of,
        branch_sets={i: tuple(grp) for i, grp in enumerate(groups)},
        quotient=Graph(range(len(groups)), sorted(qedges)),
        representative={i: grp[0] for i, grp in enumerate(groups)},
    )


def dd_minor(g: Graph, ord: Ordering | None = None) -> BranchDecomposition:
    """Contract every diamond diagonal; branch sets are the diagonal components."""
    ord = ord or Ordering(g.vertices)
    return decomposition_from_groups(g, diamond_classes(g).classes, ord)


def _c4_pairs(g: Graph) -> set[frozenset]:
    return {frozenset(p) for c4 in induced_c4_list(g) for p in combinations(c4, 2)}


def reduced_dd_minor(g: Graph, ord: Ordering) -> BranchDecomposition:
    """Greedily contract quotient edges of the dd-minor until none is admissible.

    An edge is admissible when merging its two branch sets would not put two
    vertices of one induced C4 together.  Edges are scanned by the σ-positions
    of their representatives (smaller first, then larger) and the merged set
    keeps the σ-leftmost representative.
    """
    witness = check_condition_i(g)
    if witness is not None:
        raise ConditionIViolated(witness)
    start = dd_minor(g, ord)
    members = {i: set(vs) for i, vs in start.branch_sets.items()}
    rep_pos = {i: ord.position(start.representative[i]) for i in members}
    adj = {i: set(start.quotient.neighbors(i)) for i in members}
    conflict = set()
    for pair in _c4_pairs(g):
        a, b = (start.branch_of[v] for v in pair)
        conflict.add(frozenset((a, b)))

    while True:
        edges = sorted(((i, j) for i in adj for j in adj[i] if rep_pos[i] < rep_pos[j]),
                       key=lambda e: (rep_pos[e[0]], rep_pos[e[1]]))
        edge = next((e for e in edges if frozenset(e) not in conflict), None)
        if edge is None:
            break
        keep, gone = edge
        members[keep] |= members.pop(gone)
        for x in adj.pop(gone):
            adj[x].discard(gone)
            if x != keep:
                adj[x].add(keep)
                adj[keep].add(x)
        conflict = {frozenset(keep if b == gone else b for b in pair) for pair in conflict}
        del rep_pos[gone]
    return decomposition_from_groups(g, members.values(), ord)


def compute_bji(g: Graph, bd: BranchDecomposition, j, i) -> tuple:
    """Vertices of branch ``j`` having a neighbour in branch ``i``."""
    if not bd.quotient.adjacent(j, i):
        raise NotAdjacent(j, i)
    target = set(bd.branch_sets[i])
    return tuple(v for v in bd.branch_sets[j] if g.neighbors(v) & target)


def _two_coloring(q: Graph):
    color = {}
    for s in q.vertices:
        if s in color:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for b in q.neighbors(a):
                if b not in color:
                    color[b] = 1 - color[a]
                    queue.append(b)
                elif color[b] == color[a]:
                    return None, (a, b)
    return color, None


def _cycle_order(q: Graph, quad) -> list:
    a = quad[0]
    nbrs = [v for v in quad[1:] if q.adjacent(a, v)]
    (opp,) = [v for v in quad[1:] if v not in nbrs]
    return [a, nbrs[0], opp, nbrs[1]]


def validate_reduced(g: Graph, bd: BranchDecomposition) -> ReducedReport:
    """Check a decomposition against the defining and derived properties of a reduced dd-minor."""
    report = ReducedReport()
    fail = report.failures.append
    sets = bd.branch_sets

    for i, vs in sets.items():
        if len(g.induced(vs).components()) != 1:
            fail(("connectivity", f"branch {i} induces a disconnected subgraph"))

    pairs = _c4_pairs(g)
    for pair in sorted(pairs, key=lambda p: sorted(g.index(v) for v in p)):
        a, b = g.sort_key(pair)
        if bd.branch_of[a] == bd.branch_of[b]:
            fail(("c4-pair", f"branch {bd.branch_of[a]} holds {a!r} and {b!r} of one induced C4"))

    conflict = {frozenset((bd.branch_of[a], bd.branch_of[b])) for a, b in map(tuple, pairs)}
    for i, j in bd.quotient.edges():
        if frozenset((i, j)) not in conflict:
            fail(("minimality", f"quotient edge {i}-{j} can still be contracted"))

    q = bd.quotient
    color, odd_edge = _two_coloring(q)
    if color is None:
        fail(("bipartite", f"odd cycle through quotient edge {odd_edge}"))
    for tri in combinations(q.vertices, 3):
        if all(q.adjacent(a, b) for a, b in combinations(tri, 2)):
            fail(("triangle-free", f"quotient triangle {tri}"))
            fail(("cycle-lift", f"quotient contains the C3 {tri}"))

    for i, j in q.edges():
        side = compute_bji(g, bd, i, j) + compute_bji(g, bd, j, i)
        if not all(g.adjacent(a, b) for a, b in combinations(side, 2)):
            fail(("clique", f"B_{i},{j} together with B_{j},{i} is not a clique"))

    for quad in induced_c4_list(q):
        cyc = _cycle_order(q, quad)
        cands = []
        for k, b in enumerate(cyc):
            prev, nxt = set(sets[cyc[k - 1]]), set(sets[cyc[(k + 1) % 4]])
            cands.append([v for v in sets[b] if g.neighbors(v) & prev and g.neighbors(v) & nxt])
        lifted = any(
            all(g.adjacent(pick[k], pick[(k + 1) % 4]) for k in range(4))
            and not g.adjacent(pick[0], pick[2]) and not g.adjacent(pick[1], pick[3])
            for pick in product(*cands))
        if not lifted:
            fail(("cycle-lift", f"quotient C4 {cyc} does not lift to an induced C4 of G"))
    return report


def label_branch_sets(bd: BranchDecomposition, ord: Ordering) -> LabeledDecomposition:
    """Relabel branch sets with odd (one side) and even (other side) indices.

    Within each quotient component the side holding the σ-earliest
    representative is odd.  Indices grow with the σ-position of the
    representative separately for each parity.
    """
    q = bd.quotient
    color, odd_edge = _two_coloring(q)
    if color is None:
        raise NotBipartite(odd_edge)
    pos = {i: ord.position(bd.representative[i]) for i in q.vertices}
    is_odd = {}
    for comp in q.components():
        first = min(comp, key=pos.__getitem__)
        for i in comp:
            is_odd[i] = color[i] == color[first]
    odds = sorted((i for i in q.vertices if is_odd[i]), key=pos.__getitem__)
    evens = sorted((i for i in q.vertices if not is_odd[i]), key=pos.__getitem__)
    new = {i: 2 * k + 1 for k, i in enumerate(odds)}
    new.update({i: 2 * k for k, i in enumerate(evens)})
    order = sorted(new.values())
    old = {v: k for k, v in new.items()}
    return LabeledDecomposition(
        branch_of={v: new[i] for v, i in bd.branch_of.items()},
        branch_sets={k: bd.branch_sets[old[k]] for k in order},
        quotient=Graph(order, ((new[a], new[b]) for a, b in q.edges())),
        representative={k: bd.representative[old[k]] for k in order},
        sigma=ord,
        original_id=old,
    )
