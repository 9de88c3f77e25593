"""Checking how the incidence ideal behaves under edge removal, merges and fusing."""

# %%
from collections import Counter

from cyclepack.graph import parse_graph
from cyclepack.homology import verify_removal_identities

g = parse_graph("a a\na b\nb c\nc a\nc d\n")
rep = verify_removal_identities(g)
print(Counter(c["identity"] for c in rep.checks))
print("all hold:", rep.ok)
for c in rep.checks[:4]:
    print(c)
