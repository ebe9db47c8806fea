"""Cocomparability recognition, umbrella-free orderings and their witnesses."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .core import Graph, Ordering, Poset, linear_extension
from .errors import GraphError, NotTransitive


@dataclass(frozen=True)
class Orientation:
    """Directed version of the complement's edges; ``(u, v)`` means ``u -> v``."""

    arcs: frozenset

    def __contains__(self, arc) -> bool:
        return arc in self.arcs

    def __len__(self) -> int:
        return len(self.arcs)


@dataclass(frozen=True)
class UmbrellaWitness:
    x: object
    y: object
    z: object


@dataclass(frozen=True)
class ForbiddenTripleWitness:
    u: object
    v: object
    w: object
    path: tuple


def transitive_orientation(g: Graph) -> Orientation | None:
    """Transitively orient the complement of ``g``, or return ``None`` if impossible.

    Runs the implication-class decomposition: pick the first unoriented edge,
    orient it, propagate Gamma-forcing inside the still-unoriented edge set,
    then delete that class and repeat.  A class forced in both directions
    means the complement is not a comparability graph.
    """
    pos = {v: i for i, v in enumerate(g.vertices)}
    radj = {v: set() for v in g.vertices}
    for u, v in combinations(g.vertices, 2):
        if not g.adjacent(u, v):
            radj[u].add(v)
            radj[v].add(u)
    pending = sorted(((u, v) for u in g.vertices for v in radj[u] if pos[u] < pos[v]),
                     key=lambda e: (pos[e[0]], pos[e[1]]))
    arcs: set = set()
    for a, b in pending:
        if b not in radj[a]:
            continue
        cls = {(a, b)}
        queue = deque([(a, b)])
        while queue:
            x, y = queue.popleft()
            forced = [(x, z) for z in radj[x] if z != y and z not in radj[y]]
            forced += [(z, y) for z in radj[y] if z != x and z not in radj[x]]
            for arc in forced:
                if arc in cls:
                    continue
                if (arc[1], arc[0]) in cls:
                    return None
                cls.add(arc)
                queue.append(arc)
        for x, y in cls:
            radj[x].discard(y)
            radj[y].discard(x)
        arcs |= cls
    return Orientation(frozenset(arcs))


def poset_from_orientation(g: Graph, o: Orientation) -> Poset:
    succ = {v: set() for v in g.vertices}
    for u, v in o.arcs:
        if u not in succ or v not in succ or u == v or g.adjacent(u, v):
            raise GraphError(f"arc {u!r}->{v!r} is not a non-edge of the graph")
        succ[u].add(v)
    for u, v in combinations(g.vertices, 2):
        if not g.adjacent(u, v) and (v in succ[u]) == (u in succ[v]):
            raise GraphError(f"non-edge {u!r}{v!r} must be oriented exactly once")
    for u in g.vertices:
        for v in succ[u]:
            for w in succ[v]:
                if w not in succ[u]:
                    raise NotTransitive((u, v, w))
    return Poset(g.vertices, o.arcs)


def umbrella_free_ordering(g: Graph) -> Ordering | None:
    o = transitive_orientation(g)
    if o is None:
        return None
    return linear_extension(poset_from_orientation(g, o))


def check_umbrella_free(g: Graph, ord: Ordering) -> UmbrellaWitness | None:
    """``None`` when ``ord`` has no umbrella, else the lexicographically first one."""
    seq = ord.sequence
    n = len(seq)
    for i in range(n):
        x = seq[i]
        for j in range(i + 1, n):
            y = seq[j]
            if g.adjacent(x, y):
                continue
            for k in range(j + 1, n):
                z = seq[k]
                if g.adjacent(x, z) and not g.adjacent(y, z):
                    return UmbrellaWitness(x, y, z)
    return None


def _avoiding_components(g: Graph, v) -> dict:
    """Component id of every vertex of ``g - N[v]``."""
    blocked = g.closed_neighborhood(v)
    comp = {}
    for s in g.vertices:
        if s in blocked or s in comp:
            continue
        comp[s] = s
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for b in g.neighbors(a):
                if b not in blocked and b not in comp:
                    comp[b] = s
                    queue.append(b)
    return comp


def _path_avoiding(g: Graph, u, w, blocked) -> tuple:
    parent = {u: None}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        if a == w:
            break
        for b in g.sort_key(g.neighbors(a)):
            if b not in blocked and b not in parent:
                parent[b] = a
                queue.append(b)
    path = [w]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return tuple(reversed(path))


def find_forbidden_triple(g: Graph, ord: Ordering) -> ForbiddenTripleWitness | None:
    """First ``u < v < w`` (by positions) joined by a path avoiding ``N[v]``."""
    seq = ord.sequence
    n = len(seq)
    comps = {v: _avoiding_components(g, v) for v in seq}
    for i in range(n):
        u = seq[i]
        for j in range(i + 1, n):
            v = seq[j]
            cu = comps[v].get(u)
            if cu is None:
                continue
            for k in range(j + 1, n):
                w = seq[k]
                if comps[v].get(w) == cu:
                    path = _path_avoiding(g, u, w, g.closed_neighborhood(v))
                    return ForbiddenTripleWitness(u, v, w, path)
    return None
