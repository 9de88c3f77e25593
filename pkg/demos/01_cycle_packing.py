"""Cycle packing, feedback sets and the cycle spectrum on a few small digraphs."""

# %%
from cyclepack.cycles import (
    cycle_spectrum,
    enumerate_cycles,
    feedback_number,
    local_packing,
    max_packing,
    packing_number,
    strong_via_double,
)
from cyclepack.graph import parse_graph

# The theta graph: two parallel edges u->v closed by one edge v->u.
theta = parse_graph("""
u v   a
u v   b
v u   c
""")
for c in enumerate_cycles(theta):
    print("cycle", c.edges, "through", c.vertices)

# %%
# Both cycles share edge c, so at most one fits in a packing and removing c
# alone breaks everything.
print("alpha =", packing_number(theta), " witness:", max_packing(theta).sorted())
print("beta  =", feedback_number(theta))
print("spectrum:", cycle_spectrum(theta).gamma)

# %%
# Two loops at one vertex are edge-disjoint but share the vertex, so the
# strong (vertex-disjoint) number drops to 1. Running edge-mode analysis on
# the bipartite double gives the same strong numbers.
loops = parse_graph("v v\nv v\n")
print("alpha =", packing_number(loops), " strong alpha =", packing_number(loops, "vertex"))
print("via B_G:", strong_via_double(loops))
print("strong spectrum:", cycle_spectrum(loops, "vertex").gamma)

# %%
# Local numbers: only cycles through v count, only edges at v may be cut.
g = parse_graph("a b\nb a\nb c\nc b\nc a\n")
for v in g.vertices:
    print(v, "alpha_v =", local_packing(g, vertex=v), " beta_v =", feedback_number(g, vertex=v)[0])
