"""Minimum-weight safe A,B-separators in AT-free graphs.

A separator S (disjoint from A and B) is *safe* when deleting it leaves all
of A inside a single component, all of B inside a single different component.
``min_safe_separator`` finds a minimum-weight safe separator, or reports that
none exists.

Outline: vertices adjacent to both A and B necessarily belong to every safe
separator, so they are collected (R) and deleted up front.  In the remainder,
the families of minimal s,t-separators close to the A-side and close to the
B-side are computed (s and t being representatives of A and B).  Every safe
separator is sandwiched between a qualifying pair (S_A, S_B) -- one from each
family with the A-side of S_A inside the A-side of S_B -- and conversely each
qualifying pair yields a candidate by contracting both settled sides and
taking a minimum-weight s,t-separator in between.  The best candidate over
all qualifying pairs, plus R, is the answer.

On graphs that are not AT-free the close families can be wrong, so only the
``verified`` mode (which checks AT-freeness and the structural invariants,
and is slower) guarantees an answer on arbitrary inputs; fast mode trusts the
caller.  Either way the winner is validated against the safety and minimality
definitions on the original graph before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Optional

from .atfree import is_at_free
from .close_to import close_to
from .errors import InternalConsistencyError
from .graph_core import (
    WeightedGraph,
    closed_neighborhood,
    component_of,
    contract_connected_set,
    induced_delete,
    is_connected,
    neighborhood,
)
from .min_weight_separator import min_weight_st_separator
from .minimal_separators import (
    is_minimal_AB_separator,
    is_minimal_st_separator,
    is_safe_AB_separator,
)


@dataclass(frozen=True)
class QueryInstance:
    """A safe-separator query: a weighted graph and the two terminal sets."""

    graph: WeightedGraph
    A: FrozenSet[int]
    B: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "A", frozenset(self.A))
        object.__setattr__(self, "B", frozenset(self.B))
        if not self.A or not self.B:
            raise ValueError("terminal sets must be non-empty")
        for v in self.A | self.B:
            if not self.graph.has_vertex(v):
                raise ValueError(f"terminal {v} is not an active vertex")


@dataclass(frozen=True)
class SafeSeparatorAnswer:
    """Either a minimum-weight safe separator with its weight, or NONE."""

    separator: Optional[FrozenSet[int]] = None
    weight: Optional[int] = None

    @property
    def exists(self) -> bool:
        return self.separator is not None

    @classmethod
    def none(cls) -> "SafeSeparatorAnswer":
        return cls(separator=None, weight=None)


def build_contracted_instance(g: WeightedGraph, s, t, S_A, S_B) -> WeightedGraph:
    """Contract the settled A-side C_s(G-S_A) into s and the settled B-side
    C_t(G-S_B) into t, for a qualifying pair of minimal s,t-separators.

    Qualifying means C_s(G-S_A) is contained in C_s(G-S_B), checked here via
    the equivalent subset test S_A <= S_B | C_s(G-S_B).  The two contracted
    sides are then disjoint and non-adjacent, so s and t stay non-adjacent in
    the result; any minimum-weight s,t-separator of the result, together with
    the vertices deleted beforehand, is a safe-separator candidate.
    """
    S_A = frozenset(S_A)
    S_B = frozenset(S_B)
    for S in (S_A, S_B):
        if not is_minimal_st_separator(g, s, t, S):
            raise ValueError("both pair members must be minimal s,t-separators")
    if not S_A <= S_B | component_of(g, S_B, s):
        raise ValueError("pair does not qualify: A-side of S_A exceeds A-side of S_B")
    c_sA = component_of(g, S_A, s)
    c_tB = component_of(g, S_B, t)
    h = contract_connected_set(g, s, c_sA - {s})
    h = contract_connected_set(h, t, c_tB - {t})
    if h.has_edge(s, t):
        raise InternalConsistencyError(
            "contracted terminals became adjacent for a qualifying pair"
        )
    return h


def min_safe_separator(q: QueryInstance, *, verified: bool = False) -> SafeSeparatorAnswer:
    """Minimum-weight safe A,B-separator of q.graph, or the NONE answer.

    Ties are broken toward the lexicographically smallest vertex tuple.
    ``verified=True`` checks that the graph is AT-free and keeps the
    structural invariant checks on during the close-family computations;
    fast mode assumes AT-freeness.  Raises InternalConsistencyError if the
    computed winner fails validation against the safety definition.
    """
    g, A, B = q.graph, q.A, q.B
    if not is_connected(g):
        raise ValueError("input graph must be connected")
    if verified and not is_at_free(g):
        raise ValueError("input graph is not AT-free")
    if A & closed_neighborhood(g, B):
        # A touches B or its neighborhood: any deletion avoiding both sets
        # leaves some a,b in one component.
        return SafeSeparatorAnswer.none()

    R = neighborhood(g, A) & neighborhood(g, B)
    g2 = induced_delete(g, R)
    s, t = min(A), min(B)

    family_A = close_to(g2, s, t, A - {s}, verified=verified)
    family_B = close_to(g2, t, s, B - {t}, verified=verified)

    best = None
    for S_B in family_B:
        a_side_bound = S_B | component_of(g2, S_B, s)
        for S_A in family_A:
            if not S_A <= a_side_bound:
                continue
            h = build_contracted_instance(g2, s, t, S_A, S_B)
            sep, wt = min_weight_st_separator(h, s, t)
            answer_set = sep | R
            key = (wt + g.weight_of(R), tuple(sorted(answer_set)))
            if best is None or key < best[0]:
                best = (key, answer_set)

    if best is None:
        return SafeSeparatorAnswer.none()

    (total, _), winner = best
    if not is_safe_AB_separator(g, A, B, winner) or not is_minimal_AB_separator(
        g, A, B, winner
    ):
        raise InternalConsistencyError(
            "computed winner failed validation against the safety definition"
        )
    if g.weight_of(winner) != total:
        raise InternalConsistencyError("winner weight disagrees with its vertex set")
    return SafeSeparatorAnswer(separator=winner, weight=total)
