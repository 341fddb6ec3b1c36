"""Weighted undirected graphs and the structural operations everything else builds on.

Vertex identifiers are dense ``0..n-1`` at construction time and stay stable
under deletion and contraction: surviving vertices keep their identifiers, so
a vertex set computed in a derived graph is directly a vertex set of every
ancestor graph (no lifting step).  All values are immutable after
construction; every operation returns a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

# A VertexSet is a frozenset of vertex identifiers.  Wherever iteration order
# matters (traversals, tie-breaks, output) the code iterates in ascending
# order via sorted().
VertexSet = frozenset

EMPTY_SET: frozenset = frozenset()


class WeightedGraph:
    """Undirected simple graph with positive integer vertex weights."""

    __slots__ = ("n", "_adj", "_w", "_vertices")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), weights=None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if weights is None:
            weights = [1] * n
        else:
            weights = list(weights)
        if len(weights) != n:
            raise ValueError(f"expected {n} weights, got {len(weights)}")
        for v, w in enumerate(weights):
            if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                raise ValueError(f"weight of vertex {v} must be a positive integer, got {w!r}")
        adj = {v: set() for v in range(n)}
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in adj or v not in adj:
                raise ValueError(f"edge ({u},{v}) references an unknown vertex")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = {v: frozenset(nb) for v, nb in adj.items()}
        self._w = {v: weights[v] for v in range(n)}
        self._vertices = tuple(range(n))

    @classmethod
    def _from_parts(cls, n: int, adj: dict, w: dict) -> "WeightedGraph":
        """Internal constructor for derived graphs; inputs are trusted."""
        g = object.__new__(cls)
        g.n = n
        g._adj = adj
        g._w = w
        g._vertices = tuple(sorted(adj))
        return g

    # -- inspection --------------------------------------------------------

    @property
    def vertices(self) -> tuple:
        """Active vertex identifiers in ascending order."""
        return self._vertices

    @property
    def vertex_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return sum(len(nb) for nb in self._adj.values()) // 2

    def has_vertex(self, v) -> bool:
        return v in self._adj

    def has_edge(self, u, v) -> bool:
        return v in self._adj.get(u, EMPTY_SET)

    def neighbors(self, v) -> frozenset:
        try:
            return self._adj[v]
        except KeyError:
            raise ValueError(f"vertex {v} is not active") from None

    def weight(self, v) -> int:
        try:
            return self._w[v]
        except KeyError:
            raise ValueError(f"vertex {v} is not active") from None

    def weight_of(self, S: Iterable[int]) -> int:
        return sum(self.weight(v) for v in S)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in ascending order."""
        for u in self._vertices:
            for v in sorted(self._adj[u]):
                if u < v:
                    yield (u, v)

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj and self._w == other._w

    def __hash__(self):
        return hash((self.n, tuple(sorted((v, tuple(sorted(nb))) for v, nb in self._adj.items()))))

    def __repr__(self):
        return f"WeightedGraph(n={self.n}, active={len(self._adj)}, m={self.edge_count})"


@dataclass(frozen=True)
class ComponentPartition:
    """The partition C(G-X): connected components left after removing X.

    ``neighborhoods[i]`` is N_G(components[i]), which always lies inside the
    removed set X.
    """

    components: tuple
    neighborhoods: tuple
    _index: dict = field(repr=False)

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def index_of(self, v):
        """Position of v's component, or None if v was removed / inactive."""
        return self._index.get(v)

    def of(self, v) -> frozenset:
        i = self._index.get(v)
        if i is None:
            raise ValueError(f"vertex {v} is not in any component")
        return self.components[i]

    def neighborhood_of(self, v) -> frozenset:
        i = self._index.get(v)
        if i is None:
            raise ValueError(f"vertex {v} is not in any component")
        return self.neighborhoods[i]


def _check_subset(g: WeightedGraph, T: Iterable[int], what: str) -> frozenset:
    T = frozenset(T)
    for v in T:
        if not g.has_vertex(v):
            raise ValueError(f"{what} contains inactive vertex {v}")
    return T


def neighborhood(g: WeightedGraph, T: Iterable[int]) -> frozenset:
    """Open neighborhood N_G(T) = union of neighbors of T, minus T itself."""
    T = _check_subset(g, T, "T")
    out = set()
    for v in T:
        out.update(g.neighbors(v))
    return frozenset(out - T)


def closed_neighborhood(g: WeightedGraph, T: Iterable[int]) -> frozenset:
    """Closed neighborhood N_G[T] = N_G(T) | T."""
    T = _check_subset(g, T, "T")
    out = set(T)
    for v in T:
        out.update(g.neighbors(v))
    return frozenset(out)


def components(g: WeightedGraph, X: Iterable[int]) -> ComponentPartition:
    """Connected components of G-X with their neighborhoods N_G(C) <= X."""
    X = _check_subset(g, X, "X")
    comps = []
    nbrs = []
    index = {}
    seen = set(X)
    for start in g.vertices:
        if start in seen:
            continue
        comp = {start}
        boundary = set()
        stack = [start]
        seen.add(start)
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w in X:
                    boundary.add(w)
                elif w not in comp:
                    comp.add(w)
                    seen.add(w)
                    stack.append(w)
        pos = len(comps)
        comps.append(frozenset(comp))
        nbrs.append(frozenset(boundary))
        for v in comp:
            index[v] = pos
    return ComponentPartition(tuple(comps), tuple(nbrs), index)


def component_of(g: WeightedGraph, X: Iterable[int], v) -> frozenset:
    """The component C_v(G-X): all vertices reachable from v in G-X."""
    X = _check_subset(g, X, "X")
    if v in X:
        raise ValueError(f"vertex {v} is in the removed set")
    if not g.has_vertex(v):
        raise ValueError(f"vertex {v} is not active")
    comp = {v}
    stack = [v]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w not in X and w not in comp:
                comp.add(w)
                stack.append(w)
    return frozenset(comp)


def induced_delete(g: WeightedGraph, X: Iterable[int]) -> WeightedGraph:
    """G - X: the subgraph induced on the active vertices outside X."""
    X = _check_subset(g, X, "X")
    if not X:
        return g
    adj = {v: g._adj[v] - X for v in g._adj if v not in X}
    w = {v: g._w[v] for v in adj}
    return WeightedGraph._from_parts(g.n, adj, w)


def contract_edge(g: WeightedGraph, u, v) -> WeightedGraph:
    """Contract the edge (u, v) into u; u keeps its own weight."""
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    merged = (g.neighbors(u) | g.neighbors(v)) - {u, v}
    adj = {}
    for x in g._adj:
        if x == v:
            continue
        if x == u:
            adj[u] = merged
        elif v in g._adj[x]:
            adj[x] = (g._adj[x] - {v}) | {u}
        else:
            adj[x] = g._adj[x]
    w = {x: g._w[x] for x in adj}
    return WeightedGraph._from_parts(g.n, adj, w)


def contract_connected_set(g: WeightedGraph, u, A: Iterable[int]) -> WeightedGraph:
    """Contract the connected set {u} | A into u; equals iterated contract_edge."""
    A = _check_subset(g, A, "A")
    if not A:
        return g
    if u in A:
        raise ValueError("representative u must not be in A")
    if not g.has_vertex(u):
        raise ValueError(f"vertex {u} is not active")
    blob = A | {u}
    # connectivity of g[blob]
    seen = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            if y in blob and y not in seen:
                seen.add(y)
                stack.append(y)
    if seen != blob:
        raise ValueError("the set {u} | A does not induce a connected subgraph")
    merged = neighborhood(g, blob)
    adj = {}
    for x in g._adj:
        if x in A:
            continue
        if x == u:
            adj[u] = merged
        elif g._adj[x] & blob:
            adj[x] = (g._adj[x] - blob) | {u}
        else:
            adj[x] = g._adj[x]
    w = {x: g._w[x] for x in adj}
    return WeightedGraph._from_parts(g.n, adj, w)


def add_edges_from(g: WeightedGraph, s, Z: Iterable[int]) -> WeightedGraph:
    """Supergraph of g with every edge (s, z) for z in Z added."""
    Z = _check_subset(g, Z, "Z")
    if s in Z:
        raise ValueError("s must not be in Z")
    if not g.has_vertex(s):
        raise ValueError(f"vertex {s} is not active")
    if Z <= g._adj[s]:
        return g
    adj = dict(g._adj)
    adj[s] = adj[s] | Z
    for z in Z:
        adj[z] = adj[z] | {s}
    w = dict(g._w)
    return WeightedGraph._from_parts(g.n, adj, w)


def subdivide(g: WeightedGraph, subdivision_weight: int = 1):
    """Replace every edge (u, v) by u - e_uv - v with a fresh vertex e_uv.

    Returns (graph, placed) where placed maps each fresh identifier to the
    original edge it replaced.  Original identifiers are preserved; fresh
    identifiers start at g.n.
    """
    if not isinstance(subdivision_weight, int) or subdivision_weight < 1:
        raise ValueError("subdivision weight must be a positive integer")
    adj = {v: set() for v in g._adj}
    w = dict(g._w)
    placed = {}
    fresh = g.n
    for u, v in g.edges():
        adj[fresh] = {u, v}
        adj[u].add(fresh)
        adj[v].add(fresh)
        w[fresh] = subdivision_weight
        placed[fresh] = (u, v)
        fresh += 1
    frozen = {v: frozenset(nb) for v, nb in adj.items()}
    return WeightedGraph._from_parts(fresh, frozen, w), placed


def is_connected(g: WeightedGraph) -> bool:
    if not g._adj:
        return True
    return len(components(g, EMPTY_SET)) == 1


def bfs_path(g: WeightedGraph, src, dst, forbidden: frozenset = EMPTY_SET):
    """Shortest src-dst path avoiding `forbidden`, or None.

    Neighbor expansion in ascending order, so the returned path is
    deterministic.
    """
    if src in forbidden or dst in forbidden:
        return None
    if src == dst:
        return (src,)
    parent = {src: None}
    queue = [src]
    while queue:
        nxt = []
        for u in queue:
            for v in sorted(g.neighbors(u)):
                if v in forbidden or v in parent:
                    continue
                parent[v] = u
                if v == dst:
                    path = [v]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    return tuple(reversed(path))
                nxt.append(v)
        queue = nxt
    return None


def family_sorted(sets: Iterable[frozenset]) -> tuple:
    """Deduplicate and order a family of vertex sets lexicographically."""
    uniq = {frozenset(S) for S in sets}
    return tuple(sorted(uniq, key=lambda S: tuple(sorted(S))))
