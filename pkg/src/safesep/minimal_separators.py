"""Predicates and constructions for minimal vertex separators.

Conventions used throughout:

* If the two terminals are already disconnected, the empty set is the unique
  minimal separator between them, and every predicate treats it that way.
  Derived graphs inside the higher-level procedures routinely become
  disconnected, and this convention keeps every characterization true
  vacuously.
* ``close_separator`` raises :class:`NoSeparatorError` (distinct from
  returning the empty set) when the source side reaches into the target's
  closed neighborhood — callers branch on exactly this condition.
"""

from __future__ import annotations

from typing import Iterable

from .errors import NoSeparatorError
from .graph_core import (
    WeightedGraph,
    add_edges_from,
    closed_neighborhood,
    component_of,
    components,
    neighborhood,
)


def _check_terminals(g: WeightedGraph, s, t, S: frozenset):
    if s == t:
        raise ValueError("terminals must be distinct")
    for x in (s, t):
        if not g.has_vertex(x):
            raise ValueError(f"terminal {x} is not an active vertex")
        if x in S:
            raise ValueError(f"terminal {x} lies inside the candidate separator")


def is_st_separator(g: WeightedGraph, s, t, S: Iterable[int]) -> bool:
    """True iff s and t are in different connected components of G-S."""
    S = frozenset(S)
    _check_terminals(g, s, t, S)
    return t not in component_of(g, S, s)


def is_minimal_st_separator(g: WeightedGraph, s, t, S: Iterable[int]) -> bool:
    """True iff S separates s from t and both terminal components are full,
    i.e. N(C_s(G-S)) = N(C_t(G-S)) = S."""
    S = frozenset(S)
    _check_terminals(g, s, t, S)
    c_s = component_of(g, S, s)
    if t in c_s:
        return False
    if neighborhood(g, c_s) != S:
        return False
    return neighborhood(g, component_of(g, S, t)) == S


def _check_ab(g: WeightedGraph, A: frozenset, B: frozenset, S: frozenset):
    if not A or not B:
        raise ValueError("A and B must be non-empty")
    for name, T in (("A", A), ("B", B), ("S", S)):
        for v in T:
            if not g.has_vertex(v):
                raise ValueError(f"{name} contains inactive vertex {v}")
    if A & B:
        raise ValueError("A and B must be disjoint")
    if A & closed_neighborhood(g, B):
        raise ValueError("A and B must be non-adjacent")
    if S & (A | B):
        raise ValueError("S must avoid A and B")


def is_AB_separator(g: WeightedGraph, A: Iterable[int], B: Iterable[int], S: Iterable[int]) -> bool:
    """True iff no path joins A and B in G-S."""
    A, B, S = frozenset(A), frozenset(B), frozenset(S)
    _check_ab(g, A, B, S)
    parts = components(g, S)
    return all(not (C & A and C & B) for C in parts)


def is_minimal_AB_separator(g: WeightedGraph, A: Iterable[int], B: Iterable[int], S: Iterable[int]) -> bool:
    """True iff S is an A,B-separator and every w in S touches both sides:
    there are components C_A (meeting A) and C_B (meeting B) of G-S with
    w in N(C_A) and w in N(C_B)."""
    A, B, S = frozenset(A), frozenset(B), frozenset(S)
    _check_ab(g, A, B, S)
    parts = components(g, S)
    near_a = set()
    near_b = set()
    for C, NC in zip(parts.components, parts.neighborhoods):
        if C & A and C & B:
            return False
        if C & A:
            near_a.update(NC)
        if C & B:
            near_b.update(NC)
    return S <= near_a and S <= near_b


def is_safe_AB_separator(g: WeightedGraph, A: Iterable[int], B: Iterable[int], S: Iterable[int]) -> bool:
    """True iff S separates A from B while A stays inside one component of
    G-S and B inside one (different) component."""
    A, B, S = frozenset(A), frozenset(B), frozenset(S)
    _check_ab(g, A, B, S)
    parts = components(g, S)
    ia = {parts.index_of(a) for a in A}
    ib = {parts.index_of(b) for b in B}
    return len(ia) == 1 and len(ib) == 1 and ia != ib


def close_separator(g: WeightedGraph, X: Iterable[int], t) -> frozenset:
    """The unique minimal separator between X and t contained in N(X).

    Requires g[X] connected and X disjoint from N[t]; computed as
    N(C_t(G - N(X))).  If t cannot reach X at all, the result is the empty
    separator.
    """
    X = frozenset(X)
    if not X:
        raise ValueError("X must be non-empty")
    for v in X:
        if not g.has_vertex(v):
            raise ValueError(f"X contains inactive vertex {v}")
    if not g.has_vertex(t):
        raise ValueError(f"terminal {t} is not an active vertex")
    if X & closed_neighborhood(g, (t,)):
        raise NoSeparatorError("X intersects the closed neighborhood of t")
    # connectivity of g[X]
    start = next(iter(X))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w in X and w not in seen:
                seen.add(w)
                stack.append(w)
    if seen != X:
        raise ValueError("g[X] is not connected")
    boundary = neighborhood(g, X)
    return neighborhood(g, component_of(g, boundary, t))


def merge_into_source(g: WeightedGraph, s, A: Iterable[int]) -> WeightedGraph:
    """The supergraph H = g plus all edges {(s, z) : z in N[A] - {s}}.

    Minimal s,t-separators of H are exactly the minimal separators between
    the set {s} | A and t in g.
    """
    A = frozenset(A)
    if s in A:
        raise ValueError("s must not be in A")
    if not A:
        return g
    return add_edges_from(g, s, closed_neighborhood(g, A) - {s})


def component_order_leq(g: WeightedGraph, s, t, S: Iterable[int], T: Iterable[int]) -> bool:
    """True iff C_s(G-S) is contained in C_s(G-T); for minimal separators this
    is equivalent to the cheaper subset test S <= T | C_s(G-T)."""
    S, T = frozenset(S), frozenset(T)
    if not is_minimal_st_separator(g, s, t, S) or not is_minimal_st_separator(g, s, t, T):
        raise ValueError("S and T must be minimal s,t-separators")
    return S <= T | component_of(g, T, s)
