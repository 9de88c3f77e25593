"""Recovering packing numbers from the incidence ideal with Groebner bases."""

# %%
from cyclepack.cycles import packing_number, local_packing, feedback_number
from cyclepack.graph import parse_graph
from cyclepack.groebner import buchberger, eliminate, krull_dimension, radical_membership
from cyclepack.poly import incidence_relations

g = parse_graph("""
a b
b c
c a
a c
c c
""")
fam = incidence_relations(g)
gb = buchberger(fam)
print("reduced basis:")
for line in gb.printed():
    print("   ", line)

# %%
rep = krull_dimension(gb)
print("Krull dimension", rep.krull_dimension, "with independent variables", rep.witness)
print("packing number ", packing_number(g))
print("Hilbert numerator", rep.hilbert_numerator, " degree", rep.scheme_degree)

# %%
# Eliminating down to the edges at one vertex bounds the local numbers.
for v in g.vertices:
    d = krull_dimension(eliminate(fam, g.incident(v))).krull_dimension
    print(v, local_packing(g, vertex=v), "<=", d, "<=", feedback_number(g, vertex=v)[0])

# %%
# A variable has a power in the ideal exactly when its edge is on no cycle.
h = parse_graph("a b\nb a\nb c\n")
for x in h.edge_ids:
    print("edge", x, "power in ideal:", radical_membership(x, incidence_relations(h)))
