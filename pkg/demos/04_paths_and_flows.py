"""Edge-disjoint u->v paths through contraction, and a max-flow bound."""

# %%
from fractions import Fraction

from cyclepack.cycles import path_numbers
from cyclepack.graph import FlowNetwork, flow_to_graph, max_flow, parse_graph, path_contract

g = parse_graph("u w\nw v\nu v\nv u\n")
h = path_contract(g, "u", "v")
print("contracted graph:", [(e.id, e.tail, e.head) for e in h.edges])
print("(alpha, beta) for u->v:", path_numbers(g, "u", "v"))

# %%
# Capacities are rounded up to parallel edges; the integer flow value never
# exceeds the number of edge-disjoint s->t paths there.
net = FlowNetwork(("s", "a", "b", "t"), "s", "t", {
    ("s", "a"): Fraction(3, 2), ("a", "t"): 1, ("s", "b"): 1, ("b", "t"): Fraction(1, 2),
})
gn = flow_to_graph(net)
print("|N| =", max_flow(net), " G_N has", len(gn.edges), "edges")
print("(alpha, beta) for s->t in G_N:", path_numbers(gn, "s", "t"))
