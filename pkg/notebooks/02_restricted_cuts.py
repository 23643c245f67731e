# Edge connectivity, restricted edge connectivity and the super/maximal flags
# on a few small graphs, computed two ways.

from strongcut import classify
from strongcut.graph import min_edge_degree
from strongcut.invariants import (
    all_minimum_restricted_bipartitions,
    restricted_edge_connectivity_flow,
    restricted_edge_connectivity_oracle,
)
from strongcut.products import make_complete, make_cycle, make_star

for name, g in [("C5", make_cycle(5)), ("C6", make_cycle(6)), ("K4", make_complete(4)), ("K1,3", make_star(3))]:
    r = classify(g)
    print(f"{name:5} lambda={r.edge_connectivity} lambda'={r.restricted_edge_connectivity} "
          f"xi={r.min_edge_degree} super-lambda={r.super_edge_connected} super-lambda'={r.super_restricted}")

# flow and brute force agree; the flow witness is an actual cut
g = make_cycle(6)
flow = restricted_edge_connectivity_flow(g)
oracle = restricted_edge_connectivity_oracle(g)
print("C6 flow", flow.value, sorted(flow.witness.side_x), " oracle", oracle.value, sorted(oracle.witness.side_x))

# C6 is not super: [0, 1, 2] | [3, 4, 5] is minimum yet isolates no edge
for cut in all_minimum_restricted_bipartitions(g):
    print(sorted(cut.side_x), "|", sorted(cut.side_y), "cut size", cut.size)
print("xi(C6) =", min_edge_degree(g))
