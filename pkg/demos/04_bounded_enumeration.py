"""
Checking realizability by brute force
=====================================

Enumerate every state reachable from the base immersions by short
construction traces and compare the data they realize with the
realizability predicate.  Short traces only reach part of the realizable
data; once traces are long enough to exhaust the bounded search space the
two sets agree.
"""

from immregions.oracle import Bounds, enumerate_realized, realizable_universe

for length in (0, 3, 6, 9, 12):
    bounds = Bounds(max_k=2, max_count=2, max_n=2, min_chi=-4, max_trace_len=length)
    reached = enumerate_realized(bounds)
    expected = realizable_universe(bounds)
    print(
        f"len <= {length:2d}: reached {len(reached):3d} of {len(expected)} realizable,"
        f" spurious {len(reached - expected)}"
    )
