"""
Building an immersion, step by step
===================================

For realizable data the planner returns a construction trace: a base
immersion (a standard embedding, Boy's surface, or the sphere with two
triple points) and a list of local operations.  Replaying the trace on
the symbolic model reproduces the data exactly.
"""

import json

from immregions import ImmersionData, derive_data, plan, replay, verify

data = ImmersionData.of({0: 1, 2: 2}, {3: 1, 0: 1}, -3, 1)
trace = plan(data)

print("base:", trace.base)
for i, step in enumerate(trace.steps):
    print(f"  step {i}: {step}")

# Replaying audits every intermediate state; watch the regions evolve.
def show(st):
    cells = ", ".join(f"{r.id}:{r.color.value[0]}{r.euler:+d}" for r in st.regions.values())
    print(f"  chi={st.surface_euler:3d} N={st.triple_points}  [{cells}]")

final = replay(trace, observer=show)
print("realizes:", derive_data(final))
print("verified:", verify(trace, data))

# Traces are plain JSON; region ids are assigned by replay order.
print(json.dumps(trace.to_json())[:200], "...")
