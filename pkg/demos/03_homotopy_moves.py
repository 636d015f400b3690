"""
Invariants under regular homotopy
=================================

Along a generic regular homotopy the complementary regions change only at
four kinds of events, E, H, T and Q.  The quantities
``a = chi(black) - N/2`` and ``b = chi(white) - N/2`` survive every one of
them.  Here they are tracked doubled, so they stay integers.
"""

from immregions.homotopy import half_invariants, move_e, move_h, move_q, move_t
from immregions.oracle import fuzz_homotopy
from immregions.state import base_embedding

st = base_embedding(1)  # torus: two solid tori
print("start", half_invariants(st))

st = move_e(st, 0)  # black torus loses a 2-handle, a black 3-cell appears
print("after E", half_invariants(st))

st = move_t(st, 1)  # white torus loses a 1-handle, black 3-cell and two triple points appear
print("after T", half_invariants(st), "N =", st.triple_points)

st = move_h(st, 0, 0)  # moving a handle within one region changes nothing
st = move_q(st, 2)  # a simplex region collapses and is reborn
print("after H, Q", half_invariants(st))

# A longer random walk, checked after every move.
report = fuzz_homotopy(seed=7, steps=1000)
print("moves per kind:", report.per_move_counts, "failures:", len(report.failures))
