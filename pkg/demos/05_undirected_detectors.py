"""Integer and GF(2) linear algebra that detects undirected cycles."""

# %%
from cyclepack.graph import parse_graph
from cyclepack.homology import a1_of_vertex, h0_degree_one, tree_certificate, u_degree_one, z2_detectors

g = parse_graph("graph { a -- b; b -- c; c -- a; c -- d; d -- d; }")
z = z2_detectors(g)
print("|E| - dim S =", z.global_bound)
print("edge on a cycle:", z.per_edge)
print("per vertex:", z.per_vertex)

# %%
print("H_01:", h0_degree_one(g).to_dict())
print("U_01:", u_degree_one(g).to_dict())
for v in g.vertices:
    print(v, "rank A_1 =", a1_of_vertex(g, v).free_rank)

# %%
# A single loop shows why torsion is kept: over Z the quotient is Z/2.
loop = parse_graph("graph { v -- v; }")
print(u_degree_one(loop).to_dict())
print("forests:", tree_certificate(parse_graph("graph { a -- b; b -- c; }")), tree_certificate(loop))
