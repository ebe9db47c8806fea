"""Random instance generators and brute-force oracles.

Randomness comes from ``random.Random(seed)`` (the Mersenne Twister MT19937
seeded with the 64-bit integer from :class:`GenConfig`), so a configuration
always produces the same instance.

The oracles deliberately avoid the library's own enumeration and search
helpers; they only read ``g.vertices`` and ``g.adjacent`` so that they are
genuine cross-checks.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Iterator

from .core import Graph, Poset
from .errors import SizeLimit


@dataclass(frozen=True)
class GenConfig:
    n: int
    density: float = 0.5
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if not 0.0 <= self.density <= 1.0:
            raise ValueError("density must lie in [0, 1]")


def _labels(n: int) -> list[str]:
    return [f"v{i}" for i in range(n)]


def gen_random_poset(cfg: GenConfig) -> Poset:
    """Keep each forward pair of a random linear order with probability ``density``."""
    rng = random.Random(cfg.seed)
    labels = _labels(cfg.n)
    line = labels[:]
    rng.shuffle(line)
    rel = [(line[i], line[j]) for i, j in combinations(range(cfg.n), 2)
           if rng.random() < cfg.density]
    return Poset(labels, rel)


def interval_order(intervals: dict) -> Poset:
    """``x < y`` iff the closed interval of ``x`` ends before that of ``y`` starts."""
    labels = list(intervals)
    return Poset(labels, ((x, y) for x in labels for y in labels
                          if intervals[x][1] < intervals[y][0]))


def gen_interval_order(cfg: GenConfig) -> Poset:
    """Random interval order; interval lengths scale with ``density``."""
    rng = random.Random(cfg.seed)
    reach = 40 * cfg.n
    longest = int(cfg.density * reach)
    ivs = {}
    for v in _labels(cfg.n):
        left = Fraction(rng.randrange(reach), 4)
        ivs[v] = (left, left + Fraction(rng.randint(0, longest), 4))
    return interval_order(ivs)


def gen_bipartite_permutation(cfg: GenConfig) -> Graph:
    """Inversion graph of a random 321-avoiding permutation.

    The permutation is the merge of two increasing sequences, so it has no
    decreasing triple and its inversion graph is triangle-free; a
    triangle-free permutation graph is bipartite.
    """
    rng = random.Random(cfg.seed)
    n = cfg.n
    k = sum(rng.random() < cfg.density for _ in range(n))
    spots = sorted(rng.sample(range(n), k))
    vals = sorted(rng.sample(range(n), k))
    rest_spots = [i for i in range(n) if i not in set(spots)]
    rest_vals = [v for v in range(n) if v not in set(vals)]
    perm = [0] * n
    for i, v in zip(spots, vals):
        perm[i] = v
    for i, v in zip(rest_spots, rest_vals):
        perm[i] = v
    labels = _labels(n)
    return Graph(labels, ((labels[i], labels[j]) for i, j in combinations(range(n), 2)
                          if perm[i] > perm[j]))


# ---------------------------------------------------------------------------
# exhaustive graph enumeration
# ---------------------------------------------------------------------------

def _refine(n: int, adj: list[int]) -> list[int]:
    colors = [0] * n
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in range(n) if adj[v] >> u & 1)))
                for v in range(n)]
        ranks = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def canonical_form(n: int, adj: list[int]) -> tuple:
    """Isomorphism-invariant code: refined colour classes, then best relabelling inside them."""
    colors = _refine(n, adj)
    cells = [[v for v in range(n) if colors[v] == c] for c in sorted(set(colors))]
    best = None
    for choice in product(*(permutations(c) for c in cells)):
        order = [v for cell in choice for v in cell]
        code = tuple(adj[order[i]] >> order[j] & 1 for i, j in combinations(range(n), 2))
        if best is None or code > best:
            best = code
    return (tuple(sorted(colors)), best)


def _graph_classes(n: int) -> list[list[int]]:
    if n == 0:
        return [[]]
    out = {}
    for base in _graph_classes(n - 1):
        for mask in range(1 << (n - 1)):
            adj = [row | ((mask >> v) & 1) << (n - 1) for v, row in enumerate(base)] + [mask]
            out.setdefault(canonical_form(n, adj), adj)
    return list(out.values())


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """One graph per isomorphism class on ``n`` labelled vertices ``"0"..``.

    Classes are built by vertex extension and deduplicated with
    :func:`canonical_form`, which is exact, so no duplicates are produced.
    """
    if n > 8:
        raise SizeLimit("graph enumeration is limited to n <= 8")
    labels = [str(i) for i in range(n)]
    for adj in _graph_classes(n):
        yield Graph(labels, ((labels[u], labels[v]) for u, v in combinations(range(n), 2)
                             if adj[u] >> v & 1))


# ---------------------------------------------------------------------------
# oracles
# ---------------------------------------------------------------------------

def oracle_cocomparability(g: Graph) -> bool:
    """Backtracking search over every orientation of the complement for a transitive one."""
    vs = list(g.vertices)
    if len(vs) > 8:
        raise SizeLimit("orientation oracle is limited to n <= 8")
    pairs = [(u, v) for u, v in combinations(vs, 2) if not g.adjacent(u, v)]
    is_pair = {frozenset(p) for p in pairs}
    arcs: set = set()

    def consistent(a, b) -> bool:
        for c in vs:
            if c in (a, b):
                continue
            # a->b->c needs a->c ; c->a->b needs c->b
            if (b, c) in arcs and (frozenset((a, c)) not in is_pair or (c, a) in arcs):
                return False
            if (c, a) in arcs and (frozenset((c, b)) not in is_pair or (b, c) in arcs):
                return False
        return True

    def search(k: int) -> bool:
        if k == len(pairs):
            return all((a, c) in arcs for a, b in arcs for (b2, c) in arcs if b2 == b)
        u, v = pairs[k]
        for arc in ((u, v), (v, u)):
            if consistent(*arc):
                arcs.add(arc)
                if search(k + 1):
                    return True
                arcs.discard(arc)
        return False

    return search(0)


def _induced_edges(g: Graph, vs) -> list[tuple]:
    return [(a, b) for a, b in combinations(vs, 2) if g.adjacent(a, b)]


def brute_induced_c4(g: Graph) -> set[frozenset]:
    out = set()
    for quad in combinations(g.vertices, 4):
        es = _induced_edges(g, quad)
        if len(es) == 4 and all(sum(v in e for e in es) == 2 for v in quad):
            out.add(frozenset(quad))
    return out


def brute_diamonds(g: Graph) -> set[tuple[frozenset, frozenset]]:
    out = set()
    for quad in combinations(g.vertices, 4):
        es = _induced_edges(g, quad)
        if len(es) == 5:
            hubs = [v for v in quad if sum(v in e for e in es) == 3]
            out.add((frozenset(quad), frozenset(hubs)))
    return out


def brute_co_c6(g: Graph) -> list[frozenset]:
    """Every 6-set inducing the triangular prism (degree-pruned scan over 6-subsets)."""
    rich = [v for v in g.vertices if sum(g.adjacent(v, u) for u in g.vertices) >= 3]
    out = []
    for six in combinations(rich, 6):
        es = _induced_edges(g, six)
        if len(es) != 9 or any(sum(v in e for e in es) != 3 for v in six):
            continue
        tris = [t for t in combinations(six, 3)
                if all(g.adjacent(a, b) for a, b in combinations(t, 2))]
        if len(tris) == 2 and not set(tris[0]) & set(tris[1]):
            out.append(frozenset(six))
    return out


def bfs_classes(vertices, edges) -> set[frozenset]:
    """Connected components of ``(vertices, edges)`` by breadth-first search."""
    nbrs = {v: [] for v in vertices}
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    seen, out = set(), set()
    for s in vertices:
        if s in seen:
            continue
        comp, queue = {s}, deque([s])
        seen.add(s)
        while queue:
            for b in nbrs[queue.popleft()]:
                if b not in seen:
                    seen.add(b)
                    comp.add(b)
                    queue.append(b)
        out.add(frozenset(comp))
    return out


def brute_forbidden_triple(g: Graph, order) -> tuple | None:
    """First ``(u, v, w)`` by position with a ``u``-``w`` path avoiding ``N[v]``."""
    seq = list(order)
    for i, j, k in combinations(range(len(seq)), 3):
        u, v, w = seq[i], seq[j], seq[k]
        blocked = {v} | {x for x in seq if g.adjacent(v, x)}
        if u in blocked or w in blocked:
            continue
        seen, queue = {u}, deque([u])
        while queue:
            a = queue.popleft()
            for b in seq:
                if b not in seen and b not in blocked and g.adjacent(a, b):
                    seen.add(b)
                    queue.append(b)
        if w in seen:
            return (u, v, w)
    return None


def has_two_plus_two(p: Poset) -> bool:
    """Scan pairs of relations for two disjoint 2-chains with no relation between them."""
    rel = [(a, x) for a in p.elements for x in p.elements if p.less(a, x)]
    for (a, x), (b, y) in combinations(rel, 2):
        if len({a, x, b, y}) == 4 and not any(
                p.comparable(s, t) for s, t in ((a, b), (a, y), (x, b), (x, y))):
            return True
    return False


# ---------------------------------------------------------------------------
# structural laws, each returning the first counterexample or None
# ---------------------------------------------------------------------------

def same_parity_separation(ld) -> tuple | None:
    """Same-parity ``i < j``: all of ``B_i`` precedes all of ``B_j`` in sigma."""
    pos = ld.sigma.position
    for parity in (ld.odd, ld.even):
        for i, j in combinations(sorted(parity), 2):
            last = max(ld.branch_sets[i], key=pos)
            first = min(ld.branch_sets[j], key=pos)
            if pos(last) > pos(first):
                return (i, j, last, first)
    return None


def consecutive_neighbors(ld) -> tuple | None:
    """Each branch set's neighbour indices form a run with step 2."""
    for i in ld.branch_sets:
        nb = ld.neighbor_indices(i)
        if any(b - a != 2 for a, b in zip(nb, nb[1:])):
            return (i, tuple(nb))
    return None


def left_of_matches_order(rep: dict, p: Poset) -> tuple | None:
    """``x`` lies strictly left of ``y`` exactly when ``x < y`` in ``p``."""
    for x, y in permutations(rep, 2):
        if (rep[x][1] < rep[y][0]) != p.less(x, y):
            return (x, y)
    return None


def anchors_increasing(arep) -> tuple | None:
    keys = sorted(arep.anchors)
    for j, k in zip(keys, keys[1:]):
        if not arep.anchors[j] < arep.anchors[k]:
            return (j, k)
    return None


def earlier_is_bottom_left(ld, d) -> tuple | None:
    """Non-adjacent branch sets of opposite parity in one quotient component:
    every segment of the sigma-earlier one lies strictly below and left of
    every segment of the other."""
    q = ld.quotient
    comp = {i: k for k, c in enumerate(q.components()) for i in c}
    pos = ld.sigma.position
    for i, j in combinations(ld.branch_sets, 2):
        if (i - j) % 2 == 0 or q.adjacent(i, j) or comp[i] != comp[j]:
            continue
        a, b = sorted((i, j), key=lambda k: pos(ld.representative[k]))
        for x in ld.branch_sets[a]:
            for y in ld.branch_sets[b]:
                sx, sy = d[x], d[y]
                if not (sx.xrange[1] < sy.xrange[0] and sx.yrange[1] < sy.yrange[0]):
                    return (x, y)
    return None
