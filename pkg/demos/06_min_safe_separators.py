"""
Minimum-weight safe separators, end to end
==========================================

A separator of two vertex sets A and B is *safe* when its removal leaves
all of A connected inside one component and all of B inside another.
This is the package's headline query: on AT-free graphs the optimizer
finds a minimum-weight safe A,B-separator (or reports that none exists)
in polynomial time, and the answer is cross-checked here against the
exhaustive oracle.
"""

from safesep.graph_core import WeightedGraph
from safesep.min_safe_sep import QueryInstance, min_safe_separator
from safesep.minimal_separators import is_minimal_AB_separator, is_safe_AB_separator
from safesep.oracle import gen_interval, min_safe_brute

###############################################################################
# The bow tie: two triangles sharing vertex 2.  Separating the left pair
# from the right pair has to pay for the shared vertex no matter how heavy
# it is.
bowtie = WeightedGraph(
    5,
    [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)],
    weights=[1, 1, 5, 1, 1],
)
answer = min_safe_separator(QueryInstance(bowtie, {0, 1}, {3, 4}))
print("bow tie:", sorted(answer.separator), "weight", answer.weight)
print("safe:", is_safe_AB_separator(bowtie, {0, 1}, {3, 4}, answer.separator))
print("minimal:", is_minimal_AB_separator(bowtie, {0, 1}, {3, 4}, answer.separator))

###############################################################################
# Keeping a side connected can force a detour.  On a path with a pricey
# middle, separating the endpoints still has cheap options; the optimizer
# weighs them all.
path = WeightedGraph(5, [(0, 1), (1, 2), (2, 3), (3, 4)], weights=[1, 5, 2, 9, 1])
answer = min_safe_separator(QueryInstance(path, {0}, {4}))
print("weighted path:", sorted(answer.separator), "weight", answer.weight)

###############################################################################
# Some queries have no safe answer at all: on a claw (star), both leaves
# of A can never stay together without the hub, so there is nothing to cut.
claw = WeightedGraph(4, [(0, 1), (0, 2), (0, 3)])
print("claw answer exists:", min_safe_separator(QueryInstance(claw, {1, 2}, {3})).exists)

###############################################################################
# The oracle agrees wherever it can be afforded.
small = gen_interval(9, wmax=10, seed=3)
mine = min_safe_separator(QueryInstance(small, {0, 1}, {7, 8}))
brute = min_safe_brute(small, {0, 1}, {7, 8})
print("oracle agreement:", mine.exists == brute.exists and mine.weight == brute.weight)

###############################################################################
# Fast mode skips the AT-freeness proof and invariant re-checks; on a
# 2000-vertex interval graph the query is interactive.
import time

big = gen_interval(2000, wmax=10, seed=2)
A, B = frozenset({172, 297, 727}), frozenset({745, 1312, 1874})
started = time.perf_counter()
answer = min_safe_separator(QueryInstance(big, A, B), verified=False)
print(
    "n=2000 weight %d in %.0f ms"
    % (answer.weight, (time.perf_counter() - started) * 1000)
)
