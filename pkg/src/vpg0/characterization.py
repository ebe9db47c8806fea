"""Recognition of B0-VPG cocomparability graphs.

A cocomparability graph has a 0-bend representation exactly when no two
vertices of an induced C4 are joined by a path of diamond diagonals and it has
no induced complement of C6 (the triangular prism).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .core import (Graph, Ordering, Poset, cocomparability_graph, induced_c4_list,
                   induced_diamonds, is_linear_extension, linear_extension)
from .errors import InvalidPoset, InvalidSigma
from .recognition import check_umbrella_free, poset_from_orientation, transitive_orientation


class DisjointSet:

    def __init__(self, items=()):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a == b:
            return False
        if self.rank[a] < self.rank[b]:
            a, b = b, a
        self.parent[b] = a
        if self.rank[a] == self.rank[b]:
            self.rank[a] += 1
        return True

    def groups(self):
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return list(out.values())


@dataclass(frozen=True)
class DiamondClasses:
    """Partition of the vertices into diamond-related classes."""

    graph: Graph
    classes: tuple
    class_of: dict
    diagonals: tuple
    _diag_adj: dict = field(repr=False)

    def related(self, u, v) -> bool:
        return self.class_of[u] == self.class_of[v]

    def path(self, u, v) -> list[tuple] | None:
        """Diagonal edges leading from ``u`` to ``v``; ``None`` if unrelated."""
        if not self.related(u, v):
            return None
        parent = {u: None}
        queue = deque([u])
        while queue:
            a = queue.popleft()
            if a == v:
                break
            for b in self._diag_adj[a]:
                if b not in parent:
                    parent[b] = a
                    queue.append(b)
        walk = [v]
        while parent[walk[-1]] is not None:
            walk.append(parent[walk[-1]])
        walk.reverse()
        return list(zip(walk, walk[1:]))


@dataclass(frozen=True)
class C4PairWitness:
    c4: tuple
    u: object
    v: object
    diagonal_path: tuple

    kind = "C4Pair"

    def to_json(self) -> dict:
        return {"type": self.kind, "c4": list(self.c4), "pair": [self.u, self.v],
                "diagonalPath": [list(e) for e in self.diagonal_path]}


@dataclass(frozen=True)
class CoC6Witness:
    six: tuple

    kind = "CoC6"

    def to_json(self) -> dict:
        return {"type": self.kind, "six": list(self.six)}


@dataclass(frozen=True)
class NotCocomparabilityWitness:
    reason: str = "complement has no transitive orientation"

    kind = "NotCocomparability"

    def to_json(self) -> dict:
        return {"type": self.kind, "reason": self.reason}


B0Witness = C4PairWitness | CoC6Witness | NotCocomparabilityWitness


@dataclass(frozen=True)
class Classification:
    verdict: str  # "yes" | "no" | "not-cocomparability"
    witness: B0Witness | None = None
    sigma: Ordering | None = None
    poset: Poset | None = None

    @property
    def accepted(self) -> bool:
        return self.verdict == "yes"

    def to_json(self) -> dict:
        out = {"verdict": self.verdict,
               "witness": self.witness.to_json() if self.witness else None}
        if self.sigma is not None:
            out["sigma"] = list(self.sigma)
        return out


def diamond_classes(g: Graph) -> DiamondClasses:
    ds = DisjointSet(g.vertices)
    diag_adj = {v: set() for v in g.vertices}
    diagonals = []
    for _, (u, v) in induced_diamonds(g):
        if v not in diag_adj[u]:
            diagonals.append((u, v))
        diag_adj[u].add(v)
        diag_adj[v].add(u)
        ds.union(u, v)
    groups = sorted((g.sort_key(grp) for grp in ds.groups()), key=lambda c: g.index(c[0]))
    class_of = {v: i for i, grp in enumerate(groups) for v in grp}
    return DiamondClasses(
        graph=g,
        classes=tuple(tuple(c) for c in groups),
        class_of=class_of,
        diagonals=tuple(diagonals),
        _diag_adj={v: tuple(g.sort_key(ns)) for v, ns in diag_adj.items()},
    )


def check_condition_i(g: Graph, classes: DiamondClasses | None = None) -> C4PairWitness | None:
    """``None`` when no induced C4 has two diamond related vertices.

    Each C4 is scanned opposite pairs first, then cycle-adjacent pairs.
    """
    dc = classes or diamond_classes(g)
    for c4 in induced_c4_list(g):
        pairs = [(a, b) for a, b in combinations(c4, 2) if not g.adjacent(a, b)]
        pairs += [(a, b) for a, b in combinations(c4, 2) if g.adjacent(a, b)]
        for a, b in pairs:
            if dc.related(a, b):
                return C4PairWitness(c4, a, b, tuple(dc.path(a, b)))
    return None


def find_induced_co_c6(g: Graph) -> tuple | None:
    """A vertex 6-set inducing the triangular prism, or ``None``.

    The prism is two disjoint triangles joined by a perfect matching and
    nothing else, so each triangle ``abc`` is extended by a private neighbour
    of every corner, with those three private neighbours forming a triangle.
    """
    for a, b, c in combinations(g.vertices, 3):
        if not (g.adjacent(a, b) and g.adjacent(b, c) and g.adjacent(a, c)):
            continue
        na, nb, nc = g.neighbors(a), g.neighbors(b), g.neighbors(c)
        tri = {a, b, c}
        pa = g.sort_key(na - nb - nc - tri)
        pb = nb - na - nc - tri
        pc = nc - na - nb - tri
        for a2 in pa:
            n2 = g.neighbors(a2)
            for b2 in g.sort_key(pb & n2):
                hits = pc & n2 & g.neighbors(b2)
                if hits:
                    c2 = g.sort_key(hits)[0]
                    return tuple(g.sort_key((a, b, c, a2, b2, c2)))
    return None


def _resolve_order(g: Graph, poset: Poset | None, sigma) -> tuple[Poset, Ordering] | None:
    if sigma is not None and not isinstance(sigma, Ordering):
        sigma = Ordering(sigma)
    if poset is not None:
        if set(poset.elements) != set(g.vertices) or \
                cocomparability_graph(poset).edge_set() != g.edge_set():
            raise InvalidPoset("poset's cocomparability graph differs from the input graph")
        if sigma is None:
            sigma = linear_extension(poset)
        elif not is_linear_extension(poset, sigma):
            raise InvalidSigma("sigma is not a linear extension of the poset")
        return poset, sigma
    if sigma is not None:
        if not sigma.covers_exactly(g.vertices):
            raise InvalidSigma("sigma must list every vertex exactly once")
        if check_umbrella_free(g, sigma) is not None:
            raise InvalidSigma("sigma is not an umbrella-free ordering of the graph")
        # orienting non-edges along an umbrella-free order is transitive
        rel = [(x, y) for x, y in combinations(sigma.sequence, 2) if not g.adjacent(x, y)]
        return Poset(g.vertices, rel), sigma
    o = transitive_orientation(g)
    if o is None:
        return None
    p = poset_from_orientation(g, o)
    return p, linear_extension(p)


def classify_b0(g: Graph, poset: Poset | None = None, sigma=None) -> Classification:
    """Decide membership of ``g`` in B0-VPG cocomparability graphs.

    A caller-supplied ``poset`` must have ``g`` as its cocomparability graph and
    ``sigma`` must be one of its linear extensions; otherwise both are
    fabricated deterministically.
    """
    resolved = _resolve_order(g, poset, sigma)
    if resolved is None:
        return Classification("not-cocomparability", NotCocomparabilityWitness())
    poset, sigma = resolved
    witness = check_condition_i(g)
    if witness is not None:
        return Classification("no", witness, sigma, poset)
    six = find_induced_co_c6(g)
    if six is not None:
        return Classification("no", CoC6Witness(six), sigma, poset)
    return Classification("yes", None, sigma, poset)


def _is_diamond_diagonal(g: Graph, u, v) -> bool:
    if not g.adjacent(u, v):
        return False
    common = list(g.neighbors(u) & g.neighbors(v))
    return any(not g.adjacent(x, y) for x, y in combinations(common, 2))


def witness_is_valid(g: Graph, w) -> bool:
    """Re-check a witness from scratch against the graph."""
    if isinstance(w, C4PairWitness):
        c4 = set(w.c4)
        if len(c4) != 4 or w.u not in c4 or w.v not in c4 or w.u == w.v:
            return False
        sub = [(a, b) for a, b in combinations(w.c4, 2) if g.adjacent(a, b)]
        if len(sub) != 4 or any(sum(v in e for e in sub) != 2 for v in c4):
            return False
        at = w.u
        for x, y in w.diagonal_path:
            if x != at or not _is_diamond_diagonal(g, x, y):
                return False
            at = y
        return at == w.v and len(w.diagonal_path) > 0
    if isinstance(w, CoC6Witness):
        six = list(w.six)
        if len(set(six)) != 6:
            return False
        sub = [(a, b) for a, b in combinations(six, 2) if g.adjacent(a, b)]
        if len(sub) != 9 or any(sum(v in e for e in sub) != 3 for v in six):
            return False
        tris = [t for t in combinations(six, 3)
                if all(g.adjacent(a, b) for a, b in combinations(t, 2))]
        return len(tris) == 2 and not set(tris[0]) & set(tris[1])
    if isinstance(w, NotCocomparabilityWitness):
        return transitive_orientation(g) is None
    return False
