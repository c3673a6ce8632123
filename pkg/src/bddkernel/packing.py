"""Star packings: the greedy witness and the maximum-edge bipartite packing."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import DomainError
from .graph import Graph

_INF = float("inf")


@dataclass(frozen=True)
class Star:
    center: int
    leaves: tuple[int, ...]

    def __post_init__(self):
        if not self.leaves:
            raise DomainError("a star needs at least one leaf")
        if self.center in self.leaves:
            raise DomainError("star center cannot be its own leaf")

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.center,) + self.leaves

    def __len__(self):
        return len(self.leaves)


@dataclass
class StarPacking:
    """Vertex-disjoint stars. Stars are kept sorted by center id."""

    stars: list[Star] = field(default_factory=list)

    def __post_init__(self):
        self.stars = sorted(self.stars, key=lambda s: s.center)
        self._by_center = {s.center: s for s in self.stars}
        self._center_of = {leaf: s.center for s in self.stars for leaf in s.leaves}
        seen = set()
        for s in self.stars:
            for v in s.vertices:
                if v in seen:
                    raise DomainError(f"vertex {v} occurs in two stars")
                seen.add(v)
        self._vertices = frozenset(seen)

    def __len__(self):
        return len(self.stars)

    def __iter__(self):
        return iter(self.stars)

    @property
    def vertices(self) -> frozenset:
        return self._vertices

    @property
    def centers(self) -> frozenset:
        return frozenset(self._by_center)

    @property
    def edge_count(self) -> int:
        return len(self._center_of)

    def edges(self) -> list[tuple[int, int]]:
        return [(s.center, leaf) for s in self.stars for leaf in s.leaves]

    def star_at(self, center: int) -> Star | None:
        return self._by_center.get(center)

    def neighbors(self, v: int) -> tuple[int, ...]:
        """``N_P(v)``: the leaves if ``v`` is a center, the center if ``v`` is a leaf."""
        star = self._by_center.get(v)
        if star is not None:
            return star.leaves
        c = self._center_of.get(v)
        return () if c is None else (c,)

    def neighborhood(self, vs: Iterable[int]) -> set[int]:
        out = set()
        for v in vs:
            out.update(self.neighbors(v))
        return out

    def is_valid_in(self, g: Graph) -> bool:
        return all(s.center in g and all(g.has_edge(s.center, w) for w in s.leaves)
                   for s in self.stars)


@dataclass(frozen=True)
class WitnessPartition:
    """Witness ``X`` (approximate bdd-d-set) and residual ``Y = V \\ X``."""

    witness: frozenset
    residual: frozenset
    packing: StarPacking
    d: int


def greedy_maximal_star_packing(g: Graph, d: int) -> StarPacking:
    """Maximal packing of vertex-disjoint ``(d+1)``-stars.

    Vertices are scanned by ascending id; a vertex with at least ``d+1``
    unpacked neighbors becomes a center and takes the ``d+1`` lowest of them.
    Since availability only shrinks during the scan, the result is maximal.
    """
    if d < 0:
        raise DomainError("d must be non-negative")
    need = d + 1
    used = set()
    stars = []
    for v in g.vertices:
        if v in used or g.degree(v) < need:
            continue
        leaves = []
        for w in g.neighbors(v):
            if w not in used:
                leaves.append(w)
                if len(leaves) == need:
                    break
        if len(leaves) == need:
            used.add(v)
            used.update(leaves)
            stars.append(Star(v, tuple(leaves)))
    return StarPacking(stars)


def compute_witness(g: Graph, d: int) -> WitnessPartition:
    """Witness/residual split of ``g``.

    ``X`` starts as all vertices of the greedy packing; vertices are then
    dropped from ``X`` in ascending id whenever what is left stays a
    bdd-d-set. Runs in ``O(n + m)`` after the packing by tracking degrees
    into the residual.
    """
    packing = greedy_maximal_star_packing(g, d)
    x = set(packing.vertices)
    # out_deg[v] = number of neighbors of v currently outside X
    out_deg = {v: 0 for v in g.vertices}
    for v in g.vertices:
        if v not in x:
            for w in g.adjacency(v):
                out_deg[w] += 1
    for v in sorted(x):
        if out_deg[v] > d:
            continue
        if any(out_deg[w] >= d for w in g.adjacency(v) if w not in x):
            continue
        x.discard(v)
        for w in g.adjacency(v):
            out_deg[w] += 1
    witness = frozenset(x)
    return WitnessPartition(witness, frozenset(g.vertices) - witness, packing, d)


class BipartiteAux:
    """Bipartite graph ``J`` between ``left`` (X side) and ``right`` (Y side).

    Only graph edges with exactly one endpoint on each side are kept.
    """

    __slots__ = ("left", "right", "_adj")

    def __init__(self, left: Iterable[int], right: Iterable[int], adj: dict[int, tuple[int, ...]]):
        self.left = frozenset(left)
        self.right = frozenset(right)
        self._adj = adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj.get(v, ())

    def neighborhood(self, vs: Iterable[int]) -> set[int]:
        out = set()
        for v in vs:
            out.update(self._adj.get(v, ()))
        return out

    @property
    def cross_edges(self) -> set[tuple[int, int]]:
        """Edges as ``(left vertex, right vertex)`` pairs."""
        return {(u, w) for u in self.left for w in self._adj.get(u, ())}

    @property
    def edge_count(self) -> int:
        return sum(len(self._adj.get(u, ())) for u in self.left)

    def restrict(self, left: Iterable[int], right: Iterable[int]) -> BipartiteAux:
        """``J`` induced on the given sub-sides."""
        left, right = frozenset(left), frozenset(right)
        adj = {}
        for u in left:
            adj[u] = tuple(w for w in self._adj.get(u, ()) if w in right)
        for w in right:
            adj[w] = tuple(u for u in self._adj.get(w, ()) if u in left)
        return BipartiteAux(left, right, adj)

    @classmethod
    def from_edges(cls, left, right, edges) -> BipartiteAux:
        left, right = frozenset(left), frozenset(right)
        adj: dict[int, set] = {v: set() for v in left | right}
        for u, w in edges:
            if u not in left or w not in right:
                raise DomainError(f"edge ({u}, {w}) does not cross from left to right")
            adj[u].add(w)
            adj[w].add(u)
        return cls(left, right, {v: tuple(sorted(ns)) for v, ns in adj.items()})


def build_auxiliary(g: Graph, x: Iterable[int], y: Iterable[int]) -> BipartiteAux:
    x = g.check_subset(x, "witness")
    y = g.check_subset(y, "residual")
    if x & y or len(x) + len(y) != g.n:
        raise DomainError("witness and residual must partition the vertex set")
    adj = {}
    for v in g.vertices:
        other = y if v in x else x
        adj[v] = tuple(w for w in g.neighbors(v) if w in other)
    return BipartiteAux(x, y, adj)


def star_packing_max_edges(j: BipartiteAux, d: int) -> StarPacking:
    """Maximum-edge packing of ``<=(d+1)``-stars centered on the left side of ``j``.

    Equivalent to a maximum matching in which each left vertex may be matched
    ``d+1`` times and each right vertex once. Solved with Hopcroft-Karp
    phases on the capacity-annotated graph, ``O(sqrt(n) * m)``.
    """
    if d < 0:
        raise DomainError("d must be non-negative")
    cap = d + 1
    lefts = sorted(j.left)
    adj = {u: j.neighbors(u) for u in lefts}
    owner: dict[int, int] = {}
    held: dict[int, list[int]] = {u: [] for u in lefts}
    dist: dict[int, float] = {}

    def bfs():
        queue = []
        for u in lefts:
            if len(held[u]) < cap and adj[u]:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        found = False
        i = 0
        while i < len(queue):
            u = queue[i]
            i += 1
            du = dist[u] + 1
            for r in adj[u]:
                o = owner.get(r)
                if o is None:
                    found = True
                elif dist[o] == _INF:
                    dist[o] = du
                    queue.append(o)
        return found

    def augment(root, ptr):
        stack = [root]
        rights = []
        while stack:
            x = stack[-1]
            nbrs = adj[x]
            descended = False
            while ptr[x] < len(nbrs):
                r = nbrs[ptr[x]]
                ptr[x] += 1
                o = owner.get(r)
                if o is None:
                    rights.append(r)
                    for k, node in enumerate(stack):
                        if k > 0:
                            held[node].remove(rights[k - 1])
                        held[node].append(rights[k])
                        owner[rights[k]] = node
                    return True
                if o != x and dist[o] == dist[x] + 1:
                    rights.append(r)
                    stack.append(o)
                    descended = True
                    break
            if not descended:
                dist[x] = _INF
                stack.pop()
                if rights:
                    rights.pop()
        return False

    while bfs():
        ptr = {u: 0 for u in lefts}
        for u in lefts:
            while dist[u] == 0 and len(held[u]) < cap:
                if not augment(u, ptr):
                    break

    return StarPacking([Star(u, tuple(sorted(held[u]))) for u in lefts if held[u]])
