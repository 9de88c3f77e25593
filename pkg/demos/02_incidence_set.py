"""The incidence set of a digraph as a union of linear subspaces."""

# %%
from cyclepack.geometry import build_incidence_set, degree_and_counts, dimension, is_variety, membership
from cyclepack.graph import parse_graph
from cyclepack.poly import incidence_relations

theta = parse_graph("u v\nu v\nv u\n")
for rel, prov in zip(incidence_relations(theta).relations, incidence_relations(theta).provenance):
    print(f"at {prov.vertex}, degree {prov.degree}:  {rel}")

# %%
# One component per maximal collection: each cycle becomes a class of equal
# coordinates, edges outside the collection are zero.
model = build_incidence_set(theta)
for comp in model.components:
    print(comp.to_dict(), "dimension", comp.dimension)
print("dimension", dimension(model), " degree and counts", degree_and_counts(model))

# %%
# Points can be tested against the components; passing the graph also
# evaluates every relation at the point as a second opinion.
for pt in ([1, 0, 1], [0, 2, 2], [1, 1, 1]):
    print(pt, membership(model, pt, theta))

# %%
# A graph whose cycles are pairwise disjoint has a single linear component.
two = parse_graph("a b\nb a\nc d\nd c\n")
print(is_variety(two), " theta:", is_variety(theta))
print("strong model of two loops:", build_incidence_set(parse_graph("v v\nv v"), "strong").to_dict())
