"""Exhaustive reference implementations and instance generators.

Everything here trades speed for obviousness: the oracles enumerate vertex
subsets and apply the definitions directly, so they are usable as ground
truth against the polynomial algorithms on small instances.  Subset scans
refuse to run once the ground set exceeds a cap (default 16 vertices,
overridable through the SAFESEP_SUBSET_CAP environment variable) instead of
silently taking forever.

The generators produce weighted test instances: interval graphs (AT-free by
construction, scalable), small random AT-free graphs by rejection, and a few
fixed shapes.  All are deterministic functions of their seed.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, Tuple

from .atfree import is_at_free
from .graph_core import (
    WeightedGraph,
    closed_neighborhood,
    component_of,
    family_sorted,
    induced_delete,
    is_connected,
)
from .min_safe_sep import SafeSeparatorAnswer
from .minimal_separators import is_minimal_st_separator, is_safe_AB_separator

DEFAULT_SUBSET_CAP = 16

GENERATOR_FAMILIES = (
    "interval",
    "random-atfree-rejection",
    "path",
    "cycle",
    "clique-minus-matching",
)


class SubsetCapError(RuntimeError):
    """Raised when an exhaustive scan would enumerate subsets of a ground set
    larger than the configured cap."""


def _subset_cap() -> int:
    raw = os.environ.get("SAFESEP_SUBSET_CAP")
    if raw is None:
        return DEFAULT_SUBSET_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"SAFESEP_SUBSET_CAP must be an integer, got {raw!r}") from exc
    return cap


def _check_cap(ground_size: int, what: str) -> None:
    cap = _subset_cap()
    if ground_size > cap:
        raise SubsetCapError(
            f"{what} would scan subsets of {ground_size} vertices "
            f"(cap {cap}; raise SAFESEP_SUBSET_CAP to override)"
        )


def _subsets_by_size(ground: Iterable[int]):
    ground = sorted(ground)
    for k in range(len(ground) + 1):
        for combo in combinations(ground, k):
            yield frozenset(combo)


def enumerate_minimal_st_separators(g: WeightedGraph, s, t) -> Tuple[FrozenSet[int], ...]:
    """All minimal s,t-separators, by exhaustive scan of vertex subsets.

    Includes the empty separator exactly when s and t are already
    disconnected.  Output is in lexicographic order.
    """
    if s == t or not g.has_vertex(s) or not g.has_vertex(t):
        raise ValueError("terminals must be distinct active vertices")
    ground = set(g.vertices) - {s, t}
    _check_cap(len(ground), "minimal-separator enumeration")
    found = [S for S in _subsets_by_size(ground) if is_minimal_st_separator(g, s, t, S)]
    return family_sorted(found)


def close_family_brute(g: WeightedGraph, s, t, A: Iterable[int]) -> Tuple[FrozenSet[int], ...]:
    """The close-to-sA family, straight from the definition: keep the minimal
    s,t-separators with A on the s-side, then drop every one whose s-side
    strictly contains another's."""
    A = frozenset(A)
    if A & {s, t}:
        raise ValueError("A must avoid the terminals")
    with_side = []
    for S in enumerate_minimal_st_separators(g, s, t):
        c_s = component_of(g, S, s)
        if A <= c_s:
            with_side.append((S, c_s))
    kept = [
        S
        for S, c_s in with_side
        if not any(other < c_s for T, other in with_side if T != S)
    ]
    return family_sorted(kept)


def min_safe_brute(g: WeightedGraph, A: Iterable[int], B: Iterable[int]) -> SafeSeparatorAnswer:
    """Minimum-weight safe A,B-separator by scanning every candidate subset.

    Ties break toward the lexicographically smallest vertex tuple, matching
    the fast implementation.
    """
    A = frozenset(A)
    B = frozenset(B)
    if not A or not B:
        raise ValueError("terminal sets must be non-empty")
    if A & closed_neighborhood(g, B):
        return SafeSeparatorAnswer.none()
    ground = set(g.vertices) - A - B
    _check_cap(len(ground), "safe-separator search")
    best = None
    for S in _subsets_by_size(ground):
        wt = g.weight_of(S)
        key = (wt, tuple(sorted(S)))
        if best is not None and key >= best[0]:
            continue
        if is_safe_AB_separator(g, A, B, S):
            best = (key, S)
    if best is None:
        return SafeSeparatorAnswer.none()
    (wt, _), S = best
    return SafeSeparatorAnswer(separator=S, weight=wt)


def two_dcs_brute(g: WeightedGraph, A: Iterable[int], B: Iterable[int]) -> bool:
    """Decide 2-disjoint-connected-subgraphs by exhaustive search: are there
    disjoint vertex sets V_A >= A and V_B >= B, each inducing a connected
    subgraph?  (A and B may be adjacent; only overlap is forbidden.)"""
    A = frozenset(A)
    B = frozenset(B)
    if not A or not B:
        raise ValueError("terminal sets must be non-empty")
    if A & B:
        raise ValueError("terminal sets must be disjoint")
    all_vertices = frozenset(g.vertices)
    ground = all_vertices - A - B
    _check_cap(len(ground), "two-disjoint-connected-subgraphs search")
    b0 = min(B)
    for X in _subsets_by_size(ground):
        v_a = A | X
        if not is_connected(induced_delete(g, all_vertices - v_a)):
            continue
        # A connected superset of B avoiding v_a exists iff B sits inside a
        # single component once v_a is gone.
        if B <= component_of(g, v_a, b0):
            return True
    return False


@dataclass(frozen=True)
class GeneratorSpec:
    """Recipe for one deterministic test instance."""

    family: str
    n: int
    wmax: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.family not in GENERATOR_FAMILIES:
            raise ValueError(
                f"unknown family {self.family!r}; choose from {GENERATOR_FAMILIES}"
            )
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.wmax < 1:
            raise ValueError("wmax must be at least 1")


def _random_weights(n: int, wmax: int, rng: random.Random) -> tuple:
    return tuple(rng.randint(1, wmax) for _ in range(n))


def gen_interval(n: int, wmax: int = 1, seed: int = 0) -> WeightedGraph:
    """Random connected interval graph (interval graphs are AT-free).

    Intervals get short random lengths so the expected degree stays modest at
    large n; coverage gaps are closed by shifting intervals left, which keeps
    the model an interval model and guarantees connectivity.
    """
    rng = random.Random(f"interval:{n}:{wmax}:{seed}")
    if n == 1:
        return WeightedGraph(1, (), _random_weights(1, wmax, rng))
    scale = 8.0 / n
    raw = sorted(
        (rng.random(), rng.random() * scale + 1e-9) for _ in range(n)
    )
    intervals = []
    covered = None
    for start, length in raw:
        if covered is not None and start > covered:
            start = covered
        intervals.append((start, start + length))
        covered = max(covered, start + length) if covered is not None else start + length
    edges = []
    # Sweep in start order; an earlier interval overlaps a later one exactly
    # when it ends after the later one starts.
    active = []  # (end, vertex) pairs still open
    for v, (start, end) in enumerate(intervals):
        active = [(e, u) for e, u in active if e >= start]
        edges.extend((u, v) for _, u in active)
        active.append((end, v))
    return WeightedGraph(n, edges, _random_weights(n, wmax, rng))


def _random_connected_graph(n: int, rng: random.Random, p: float = 0.35) -> list:
    """Edge list of a random connected graph: random spanning tree plus
    independent extra edges."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u = order[rng.randrange(i)]
        v = order[i]
        edges.add((min(u, v), max(u, v)))
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            edges.add((u, v))
    return sorted(edges)


def gen_atfree_rejection(n: int, wmax: int = 1, seed: int = 0) -> WeightedGraph:
    """Random connected AT-free graph, found by resampling random connected
    graphs until one passes the AT-free check.  Only sensible for small n."""
    if n > 12:
        raise ValueError("rejection sampling is only practical for n <= 12")
    rng = random.Random(f"atfree-reject:{n}:{wmax}:{seed}")
    while True:
        g = WeightedGraph(n, _random_connected_graph(n, rng), _random_weights(n, wmax, rng))
        if is_at_free(g):
            return g


def _gen_path(n: int, wmax: int, seed: int) -> WeightedGraph:
    rng = random.Random(f"path:{n}:{wmax}:{seed}")
    edges = [(i, i + 1) for i in range(n - 1)]
    return WeightedGraph(n, edges, _random_weights(n, wmax, rng))


def _gen_cycle(n: int, wmax: int, seed: int) -> WeightedGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    rng = random.Random(f"cycle:{n}:{wmax}:{seed}")
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return WeightedGraph(n, edges, _random_weights(n, wmax, rng))


def _gen_clique_minus_matching(n: int, wmax: int, seed: int) -> WeightedGraph:
    """Complete graph minus the matching (0,1), (2,3), ...: stays AT-free
    because no three vertices are pairwise non-adjacent."""
    rng = random.Random(f"clique-minus-matching:{n}:{wmax}:{seed}")
    matched = {(2 * i, 2 * i + 1) for i in range(n // 2)}
    edges = [(u, v) for u, v in combinations(range(n), 2) if (u, v) not in matched]
    return WeightedGraph(n, edges, _random_weights(n, wmax, rng))


def generate(spec: GeneratorSpec) -> WeightedGraph:
    """Build the instance a GeneratorSpec describes."""
    if spec.family == "interval":
        return gen_interval(spec.n, spec.wmax, spec.seed)
    if spec.family == "random-atfree-rejection":
        return gen_atfree_rejection(spec.n, spec.wmax, spec.seed)
    if spec.family == "path":
        return _gen_path(spec.n, spec.wmax, spec.seed)
    if spec.family == "cycle":
        return _gen_cycle(spec.n, spec.wmax, spec.seed)
    if spec.family == "clique-minus-matching":
        return _gen_clique_minus_matching(spec.n, spec.wmax, spec.seed)
    raise AssertionError(f"unhandled family {spec.family!r}")


def sample_terminals(g: WeightedGraph, rng: random.Random, max_size: int = 3, tries: int = 200):
    """Random terminal sets for a safe-separator query: disjoint, with A
    avoiding the closed neighborhood of B, both of size 1..max_size.
    Returns (A, B) or None when no such pair turns up."""
    verts = list(g.vertices)
    for _ in range(tries):
        size_a = rng.randint(1, max_size)
        size_b = rng.randint(1, max_size)
        if size_a + size_b > len(verts):
            continue
        chosen = rng.sample(verts, size_a + size_b)
        A = frozenset(chosen[:size_a])
        B = frozenset(chosen[size_a:])
        if A & closed_neighborhood(g, B):
            continue
        return A, B
    return None
