"""Minimum-weight s,t vertex separator via vertex-capacitated maximum flow.

Every non-terminal vertex v is split into an arc v_in -> v_out of capacity
w(v); each undirected edge becomes a pair of arcs of effectively infinite
capacity (1 + total vertex weight, which no vertex cut can reach).  The
minimum cut of this network crosses only split arcs, and those arcs name the
separator.  Flow is computed with blocking-flow (level graph) augmentation;
the source-side residual-reachability cut gives a deterministic minimum-weight
separator, which is always minimal.
"""

from __future__ import annotations

from .errors import InternalConsistencyError, NoSeparatorError
from .graph_core import WeightedGraph
from .minimal_separators import is_minimal_st_separator


class FlowNetwork:
    """Directed network with integer capacities and Dinic's algorithm."""

    def __init__(self, node_count: int):
        self.node_count = node_count
        self.head = [[] for _ in range(node_count)]
        self.to = []
        self.cap = []

    def add_arc(self, u: int, v: int, capacity: int) -> int:
        """Add u->v with the given capacity plus a zero-capacity reverse arc;
        returns the forward arc index (reverse is index+1)."""
        idx = len(self.to)
        self.head[u].append(idx)
        self.to.append(v)
        self.cap.append(capacity)
        self.head[v].append(idx + 1)
        self.to.append(u)
        self.cap.append(0)
        return idx

    def _levels(self, s: int, t: int):
        level = [-1] * self.node_count
        level[s] = 0
        queue = [s]
        while queue:
            nxt = []
            for u in queue:
                for idx in self.head[u]:
                    v = self.to[idx]
                    if self.cap[idx] > 0 and level[v] < 0:
                        level[v] = level[u] + 1
                        nxt.append(v)
            queue = nxt
        return level if level[t] >= 0 else None

    def _blocking_flow(self, s: int, t: int, level) -> int:
        total = 0
        it = [0] * self.node_count
        while True:
            # iterative DFS for one augmenting path in the level graph
            path = []
            u = s
            while True:
                if u == t:
                    pushed = min(self.cap[idx] for idx in path)
                    for idx in path:
                        self.cap[idx] -= pushed
                        self.cap[idx ^ 1] += pushed
                    total += pushed
                    # restart from the lowest saturated arc
                    for k, idx in enumerate(path):
                        if self.cap[idx] == 0:
                            path = path[:k]
                            break
                    u = self.to[path[-1]] if path else s
                    continue
                advanced = False
                while it[u] < len(self.head[u]):
                    idx = self.head[u][it[u]]
                    v = self.to[idx]
                    if self.cap[idx] > 0 and level[v] == level[u] + 1:
                        path.append(idx)
                        u = v
                        advanced = True
                        break
                    it[u] += 1
                if advanced:
                    continue
                if u == s:
                    return total
                level[u] = -1  # dead end; prune
                u = self.to[path[-1] ^ 1]
                path.pop()
                it[u] += 1

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            level = self._levels(s, t)
            if level is None:
                return flow
            flow += self._blocking_flow(s, t, level)

    def residual_reachable(self, s: int) -> set:
        seen = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for idx in self.head[u]:
                v = self.to[idx]
                if self.cap[idx] > 0 and v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen


def _split_network(g: WeightedGraph, s, t):
    """Build the vertex-split network; returns (net, node_of_s, node_of_t,
    in_node, out_node) with in/out maps for non-terminal vertices."""
    inf = 1 + sum(g.weight(v) for v in g.vertices)
    node = 0
    in_node = {}
    out_node = {}
    for v in g.vertices:
        if v == s or v == t:
            in_node[v] = out_node[v] = node
            node += 1
        else:
            in_node[v] = node
            out_node[v] = node + 1
            node += 2
    net = FlowNetwork(node)
    split_arc = {}
    for v in g.vertices:
        if v != s and v != t:
            split_arc[v] = net.add_arc(in_node[v], out_node[v], g.weight(v))
    for u, v in g.edges():
        net.add_arc(out_node[u], in_node[v], inf)
        net.add_arc(out_node[v], in_node[u], inf)
    return net, in_node, out_node, split_arc


def min_weight_st_separator(g: WeightedGraph, s, t):
    """A minimum-weight s,t-separator and its weight.

    Returns (frozenset(), 0) when s and t are already disconnected; raises
    NoSeparatorError when (s, t) is an edge.  Among minimum cuts the
    source-side residual-reachability cut is returned; it is always a minimal
    separator (validated before returning).
    """
    if s == t:
        raise ValueError("terminals must be distinct")
    for x in (s, t):
        if not g.has_vertex(x):
            raise ValueError(f"terminal {x} is not an active vertex")
    if g.has_edge(s, t):
        raise NoSeparatorError("terminals are adjacent; no s,t-separator exists")
    net, in_node, out_node, split_arc = _split_network(g, s, t)
    flow = net.max_flow(out_node[s], in_node[t])
    if flow == 0:
        return frozenset(), 0
    reach = net.residual_reachable(out_node[s])
    sep = frozenset(
        v for v, idx in split_arc.items() if in_node[v] in reach and out_node[v] not in reach
    )
    if g.weight_of(sep) != flow:
        raise InternalConsistencyError(
            f"cut weight {g.weight_of(sep)} does not match flow value {flow}"
        )
    if not is_minimal_st_separator(g, s, t, sep):
        raise InternalConsistencyError("extracted minimum cut is not a minimal separator")
    return sep, flow


def vertex_connectivity_st(g: WeightedGraph, s, t) -> int:
    """Size of a minimum s,t vertex cut (all weights treated as 1)."""
    unit = WeightedGraph._from_parts(g.n, g._adj, {v: 1 for v in g._adj})
    _, value = min_weight_st_separator(unit, s, t)
    return value
