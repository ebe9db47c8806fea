"""Graph, poset and ordering value types plus small-subgraph enumeration.

All three types are immutable once built.  Vertex labels are opaque hashables;
whenever a tie has to be broken the position of a label in the input vertex
list decides, never the label's own ordering.
"""

from __future__ import annotations

import graphlib
from collections import deque
from itertools import combinations
from typing import Hashable, Iterable, Iterator, Sequence

from .errors import CycleError, GraphError, ParseError

Label = Hashable


class Graph:
    """Finite simple undirected graph with an ordered, duplicate-free vertex list."""

    __slots__ = ("vertices", "_adj", "_pos")

    def __init__(self, vertices: Iterable[Label], edges: Iterable[tuple[Label, Label]] = ()):
        self.vertices = tuple(vertices)
        self._pos = {v: i for i, v in enumerate(self.vertices)}
        if len(self._pos) != len(self.vertices):
            raise GraphError("vertex labels must be unique")
        adj: dict[Label, set] = {v: set() for v in self.vertices}
        for u, v in edges:
            if u not in adj or v not in adj:
                raise GraphError(f"edge {u!r}-{v!r} uses an unknown vertex")
            if u == v:
                raise GraphError(f"self-loop at {u!r}")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[Label]:
        return iter(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self._pos

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.vertices, frozenset(self.edge_set())))

    def __repr__(self) -> str:
        return f"Graph(n={len(self)}, edges={self.edges()!r})"

    def index(self, v: Label) -> int:
        return self._pos[v]

    def adjacent(self, u: Label, v: Label) -> bool:
        return v in self._adj[u]

    def neighbors(self, v: Label) -> frozenset:
        return self._adj[v]

    def closed_neighborhood(self, v: Label) -> frozenset:
        return self._adj[v] | {v}

    def degree(self, v: Label) -> int:
        return len(self._adj[v])

    def edges(self) -> list[tuple[Label, Label]]:
        """Edges as ``(u, v)`` with ``u`` listed first, sorted by vertex position."""
        pos = self._pos
        out = [(u, v) for u in self.vertices for v in self._adj[u] if pos[u] < pos[v]]
        out.sort(key=lambda e: (pos[e[0]], pos[e[1]]))
        return out

    def edge_set(self) -> set[frozenset]:
        return {frozenset(e) for e in self.edges()}

    @property
    def num_edges(self) -> int:
        return sum(len(ns) for ns in self._adj.values()) // 2

    def sort_key(self, vs: Iterable[Label]) -> list[Label]:
        return sorted(vs, key=self._pos.__getitem__)

    def induced(self, vs: Iterable[Label]) -> "Graph":
        keep = self.sort_key(set(vs))
        kept = set(keep)
        return Graph(keep, ((u, v) for u, v in self.edges() if u in kept and v in kept))

    def components(self) -> list[list[Label]]:
        """Connected components, each sorted by position, ordered by first vertex."""
        seen: set = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            seen.add(s)
            comp, queue = [], deque([s])
            while queue:
                u = queue.popleft()
                comp.append(u)
                for w in self._adj[u]:
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
            comps.append(self.sort_key(comp))
        return comps


class Poset:
    """Strict partial order; the full transitive closure is stored."""

    __slots__ = ("elements", "_up", "_down", "_pos")

    def __init__(self, elements: Iterable[Label], relations: Iterable[tuple[Label, Label]] = ()):
        self.elements = tuple(elements)
        self._pos = {x: i for i, x in enumerate(self.elements)}
        if len(self._pos) != len(self.elements):
            raise GraphError("poset elements must be unique")
        succ: dict[Label, set] = {x: set() for x in self.elements}
        for x, y in relations:
            if x not in succ or y not in succ:
                raise GraphError(f"relation {x!r}<{y!r} uses an unknown element")
            if x == y:
                raise CycleError((x, x))
            succ[x].add(y)
        # graphlib wants predecessors of each node
        sorter = graphlib.TopologicalSorter({y: set() for y in self.elements})
        for x, ys in succ.items():
            for y in ys:
                sorter.add(y, x)
        try:
            order = list(sorter.static_order())
        except graphlib.CycleError as exc:
            raise CycleError(exc.args[1]) from None
        up: dict[Label, frozenset] = {}
        for x in reversed(order):
            acc = set(succ[x])
            for y in succ[x]:
                acc |= up[y]
            up[x] = frozenset(acc)
        self._up = up
        down: dict[Label, set] = {x: set() for x in self.elements}
        for x, ys in up.items():
            for y in ys:
                down[y].add(x)
        self._down = {x: frozenset(s) for x, s in down.items()}

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Label]:
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._pos

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and self._up == other._up

    def __hash__(self) -> int:
        return hash((self.elements, frozenset(self.relations())))

    def __repr__(self) -> str:
        return f"Poset(elements={self.elements!r}, covers={self.covers()!r})"

    def less(self, x: Label, y: Label) -> bool:
        return y in self._up[x]

    def comparable(self, x: Label, y: Label) -> bool:
        return y in self._up[x] or x in self._up[y]

    def above(self, x: Label) -> frozenset:
        """Strict up-set of ``x``."""
        return self._up[x]

    def below(self, x: Label) -> frozenset:
        """Strict down-set (predecessors) of ``x``."""
        return self._down[x]

    def relations(self) -> list[tuple[Label, Label]]:
        pos = self._pos
        out = [(x, y) for x in self.elements for y in self._up[x]]
        out.sort(key=lambda r: (pos[r[0]], pos[r[1]]))
        return out

    def covers(self) -> list[tuple[Label, Label]]:
        out = []
        for x, y in self.relations():
            if not any(y in self._up[z] for z in self._up[x]):
                out.append((x, y))
        return out

    def restrict(self, subset: Iterable[Label]) -> "Poset":
        keep = set(subset)
        elems = [x for x in self.elements if x in keep]
        return Poset(elems, ((x, y) for x, y in self.relations() if x in keep and y in keep))


class Ordering(Sequence):
    """A permutation of vertex labels with O(1) position lookup."""

    __slots__ = ("sequence", "_pos")

    def __init__(self, sequence: Iterable[Label]):
        self.sequence = tuple(sequence)
        self._pos = {v: i for i, v in enumerate(self.sequence)}
        if len(self._pos) != len(self.sequence):
            raise GraphError("ordering repeats a label")

    def __getitem__(self, i):
        return self.sequence[i]

    def __len__(self) -> int:
        return len(self.sequence)

    def __eq__(self, other) -> bool:
        if isinstance(other, Ordering):
            return self.sequence == other.sequence
        if isinstance(other, (tuple, list)):
            return self.sequence == tuple(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.sequence)

    def __repr__(self) -> str:
        return f"Ordering({self.sequence!r})"

    def position(self, v: Label) -> int:
        return self._pos[v]

    def before(self, u: Label, v: Label) -> bool:
        return self._pos[u] < self._pos[v]

    def covers_exactly(self, labels: Iterable[Label]) -> bool:
        labels = list(labels)
        return len(labels) == len(self.sequence) and set(labels) == set(self.sequence)


def complement(g: Graph) -> Graph:
    return Graph(g.vertices, ((u, v) for u, v in combinations(g.vertices, 2)
                              if not g.adjacent(u, v)))


def poset_from_covers(elements: Iterable[Label], covers: Iterable[tuple[Label, Label]]) -> Poset:
    return Poset(elements, covers)


def cocomparability_graph(p: Poset) -> Graph:
    return Graph(p.elements, ((x, y) for x, y in combinations(p.elements, 2)
                              if not p.comparable(x, y)))


def is_linear_extension(p: Poset, ord: Ordering) -> bool:
    if not ord.covers_exactly(p.elements):
        return False
    return all(ord.before(x, y) for x, y in p.relations())


def linear_extension(p: Poset) -> Ordering:
    """Deterministic linear extension: always take the earliest-listed minimal element."""
    remaining = {x: len(p.below(x)) for x in p.elements}
    out = []
    while remaining:
        x = next(x for x in p.elements if remaining.get(x) == 0)
        del remaining[x]
        out.append(x)
        for y in p.above(x):
            remaining[y] -= 1
    return Ordering(out)


def induced_c4_list(g: Graph) -> list[tuple]:
    """All vertex sets inducing a chordless 4-cycle, each once, as position-sorted tuples.

    Every induced C4 is found from one of its two non-adjacent diagonal pairs:
    two non-adjacent common neighbours of a non-adjacent pair close the cycle.
    """
    found = set()
    for a, c in combinations(g.vertices, 2):
        if g.adjacent(a, c):
            continue
        common = g.sort_key(g.neighbors(a) & g.neighbors(c))
        for b, d in combinations(common, 2):
            if not g.adjacent(b, d):
                found.add(tuple(g.sort_key((a, b, c, d))))
    return sorted(found, key=lambda q: [g.index(v) for v in q])


def induced_diamonds(g: Graph) -> list[tuple[tuple, tuple]]:
    """All induced diamonds as ``(four_set, diagonal)``.

    A diamond is determined by its diagonal ``uv`` together with two
    non-adjacent common neighbours of ``u`` and ``v``.
    """
    out = []
    for u, v in g.edges():
        common = g.sort_key(g.neighbors(u) & g.neighbors(v))
        for x, y in combinations(common, 2):
            if not g.adjacent(x, y):
                out.append((tuple(g.sort_key((u, v, x, y))), (u, v)))
    out.sort(key=lambda d: ([g.index(w) for w in d[0]], [g.index(w) for w in d[1]]))
    return out


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------

def _content_lines(text: str) -> list[tuple[int, str]]:
    return [(i, line.strip()) for i, line in enumerate(text.split("\n"), 1) if line.strip()]


def _parse_header(lines, kind):
    if not lines:
        raise ParseError(f"empty input, expected '{kind} <n>'", 1)
    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != kind:
        raise ParseError(f"expected '{kind} <n>', got {head!r}", lineno)
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(f"vertex count {parts[1]!r} is not an integer", lineno) from None
    if n < 0:
        raise ParseError("vertex count must be non-negative", lineno)
    if len(lines) < n + 2:
        raise ParseError(f"expected {n} labels followed by a section marker",
                         lines[-1][0])
    labels = []
    for lineno, label in lines[1:n + 1]:
        if len(label.split()) != 1:
            raise ParseError(f"label {label!r} contains whitespace", lineno)
        if label in labels:
            raise ParseError(f"duplicate label {label!r}", lineno)
        labels.append(label)
    return labels


def parse_graph(text: str) -> Graph:
    lines = _content_lines(text)
    labels = _parse_header(lines, "graph")
    n = len(labels)
    lineno, marker = lines[n + 1]
    if marker != "edges":
        raise ParseError(f"expected 'edges', got {marker!r}", lineno)
    known = set(labels)
    edges = []
    for lineno, line in lines[n + 2:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = parts
        for w in parts:
            if w not in known:
                raise ParseError(f"unknown vertex {w!r}", lineno)
        if u == v:
            raise ParseError(f"self-loop at {u!r}", lineno)
        edges.append((u, v))
    return Graph(labels, edges)


def parse_poset(text: str) -> Poset:
    lines = _content_lines(text)
    labels = _parse_header(lines, "poset")
    n = len(labels)
    lineno, marker = lines[n + 1]
    if marker != "covers":
        raise ParseError(f"expected 'covers', got {marker!r}", lineno)
    known = set(labels)
    covers = []
    for lineno, line in lines[n + 2:]:
        parts = line.split()
        if len(parts) != 3 or parts[1] != "<":
            raise ParseError(f"expected 'u < v', got {line!r}", lineno)
        u, _, v = parts
        for w in (u, v):
            if w not in known:
                raise ParseError(f"unknown element {w!r}", lineno)
        covers.append((u, v))
    try:
        return Poset(labels, covers)
    except CycleError as exc:
        raise ParseError(str(exc)) from None


def parse_instance(text: str) -> Graph | Poset:
    """Parse either text format, dispatching on the header keyword."""
    lines = _content_lines(text)
    head = lines[0][1].split()[0] if lines else ""
    if head == "poset":
        return parse_poset(text)
    return parse_graph(text)


def format_graph(g: Graph) -> str:
    out = [f"graph {len(g)}", *map(str, g.vertices), "edges"]
    out += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(out) + "\n"


def format_poset(p: Poset) -> str:
    out = [f"poset {len(p)}", *map(str, p.elements), "covers"]
    out += [f"{x} < {y}" for x, y in p.covers()]
    return "\n".join(out) + "\n"
