"""Degree-one pieces of the graph homology invariants and the Z/2 detectors.

Everything here reduces to integer or GF(2) linear algebra on incidence
rows, except the tree cross-check and the removal identities, which go
through Groebner bases.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import GuardExceeded
from .graph import (
    DirectedGraph,
    UndirectedGraph,
    as_directed,
    identify_vertices,
    incidence_matrix,
    merge_degree_two,
    remove_edges,
    remove_vertex,
    underlying_undirected,
)
from .groebner import buchberger, ideal_contains, ideal_equality
from .linalg import (
    gf2_rank,
    hermite_normal_form,
    lattice_quotient_rank,
    subspace_intersection_dim_gf2,
)
from .poly import (
    GeneratorFamily,
    Polynomial,
    incidence_relations,
    undirected_relations,
)

__all__ = [
    "H0Presentation",
    "GradedPieceReport",
    "Z2DetectorReport",
    "h0_presentation",
    "h0_degree_one",
    "a1_of_vertex",
    "z2_detectors",
    "u_degree_one",
    "tree_certificate",
    "is_forest",
    "verify_removal_identities",
]


@dataclass(frozen=True)
class H0Presentation:
    """Q[E]/I(G) given by its variables and generator family."""

    variables: tuple[int, ...]
    relations: GeneratorFamily


def h0_presentation(g: DirectedGraph) -> H0Presentation:
    fam = incidence_relations(g)
    return H0Presentation(fam.variables, fam)


@dataclass(frozen=True)
class GradedPieceReport:
    degree: int
    free_rank: int
    torsion: tuple[int, ...]
    witness: tuple[int, ...]  # edge ids whose classes span the free part over Q
    gf2_dimension: int

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def to_dict(self) -> dict:
        return {"degree": self.degree, "rank": self.free_rank, "torsion": list(self.torsion),
                "witness": list(self.witness), "gf2_dimension": self.gf2_dimension}


def _quotient_report(ids, rows) -> GradedPieceReport:
    n = len(ids)
    rank, torsion = lattice_quotient_rank(n, rows)
    _, pivots = hermite_normal_form(rows) if rows else ([], [])
    witness = tuple(ids[j] for j in range(n) if j not in set(pivots))
    packed = [sum(1 << j for j, x in enumerate(r) if x % 2) for r in rows]
    return GradedPieceReport(1, rank, torsion, witness, n - gf2_rank(packed))


def h0_degree_one(g) -> GradedPieceReport:
    """Z^E modulo the rows of the vertex-edge incidence matrix.

    An undirected graph is read with its stored end order as orientation;
    the result does not depend on that choice.
    """
    m = incidence_matrix(as_directed(g))
    return _quotient_report(m.edge_ids, m.rows())


def a1_of_vertex(g, v: str) -> GradedPieceReport:
    """Z·E(v) modulo its intersection with the incidence row lattice M."""
    g = as_directed(g)
    g.require_vertex(v)
    m = incidence_matrix(g)
    ev = sorted(g.incident(v))
    others = [i for i in m.edge_ids if i not in set(ev)]
    col = {eid: j for j, eid in enumerate(m.edge_ids)}
    perm = [col[i] for i in others] + [col[i] for i in ev]
    rows = [[r[j] for j in perm] for r in m.rows()]
    hnf, pivots = hermite_normal_form(rows)
    k = len(others)
    # rows pivoting inside the E(v) block vanish on the other block and
    # span M ∩ Z^{E(v)}
    inter = [r[k:] for r, p in zip(hnf, pivots) if p >= k]
    return _quotient_report(tuple(ev), inter)


@dataclass(frozen=True)
class Z2DetectorReport:
    global_bound: int
    per_vertex: dict[str, int]
    per_edge: dict[int, bool]  # True = edge lies on some undirected cycle
    s_dimension: int

    def to_dict(self) -> dict:
        return {
            "global": self.global_bound,
            "s_dimension": self.s_dimension,
            "per_vertex": dict(self.per_vertex),
            "per_edge_on_cycle": {str(k): v for k, v in self.per_edge.items()},
        }


def _s_rows(g, bit):
    rows = []
    for v in g.vertices:
        r = 0
        for i in g.incident(v):
            if not g.edge(i).is_loop:
                r ^= 1 << bit[i]
        rows.append(r)
    return rows


def z2_detectors(g) -> Z2DetectorReport:
    """Detectors from S = span{sum of non-loop edges at v} over GF(2)."""
    g = underlying_undirected(g)
    ids = sorted(g.edge_ids)
    bit = {eid: j for j, eid in enumerate(ids)}
    n = len(ids)
    s = _s_rows(g, bit)
    dim_s = gf2_rank(s)
    per_vertex = {}
    for v in g.vertices:
        ev = [bit[i] for i in g.incident(v)]
        per_vertex[v] = len(ev) - subspace_intersection_dim_gf2(n, s, ev)
    per_edge = {eid: gf2_rank(s + [1 << bit[eid]]) > dim_s for eid in ids}
    return Z2DetectorReport(n - dim_s, per_vertex, per_edge, dim_s)


def u_degree_one(g) -> GradedPieceReport:
    """Z^E modulo the rows e_1(E(v)), each loop counted twice."""
    g = underlying_undirected(g)
    ids = tuple(sorted(g.edge_ids))
    col = {eid: j for j, eid in enumerate(ids)}
    rows = []
    for v in g.vertices:
        r = [0] * len(ids)
        for i in g.incident(v):
            r[col[i]] += 2 if g.edge(i).is_loop else 1
        rows.append(r)
    return _quotient_report(ids, rows)


def is_forest(g) -> bool:
    """Union-find check that the underlying undirected graph has no cycle."""
    parent: dict[str, str] = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in g.edges:
        a, b = find(e.tail), find(e.head)
        if a == b:
            return False
        parent[a] = b
    return True


def tree_certificate(g) -> bool:
    """Forest test with an algebraic cross-check.

    For a directed graph every edge variable must lie in I(G) over Q exactly
    when the underlying graph is a forest. For an undirected graph the check
    is that U_{0,1} vanishes over Z; over Q it would miss loops, whose
    relations 2x and x^2 already generate (x).
    """
    forest = is_forest(g)
    if isinstance(g, UndirectedGraph):
        algebraic = u_degree_one(g).is_zero
    else:
        gb = buchberger(incidence_relations(g))
        algebraic = all(ideal_contains(gb, Polynomial.var(i)) for i in g.edge_ids)
    if forest != algebraic:
        raise AssertionError("forest test and algebraic test disagree")
    return forest


# ------------------------------------------------------ removal identities

@dataclass
class IdentityReport:
    checks: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c["ok"] for c in self.checks)

    def add(self, kind, site, ok):
        self.checks.append({"identity": kind, "site": site, "ok": bool(ok)})

    def failures(self) -> list[dict]:
        return [c for c in self.checks if not c["ok"]]


def verify_removal_identities(g: DirectedGraph, budget: int = 8) -> IdentityReport:
    """Check the edge-removal, end-removal, degree-2 merge, fuse and
    loop-stripping identities of I(G) at every applicable site.

    ``budget`` caps the edge count since every check runs Groebner bases.
    """
    if len(g.edges) > budget:
        raise GuardExceeded("identity check edge count", budget)
    rep = IdentityReport()
    fam = incidence_relations(g)
    ids = tuple(sorted(g.edge_ids))
    gb = buchberger(fam, variables=ids)

    # removing an edge x: I(G - x) is I(G) with x set to 0
    for x in ids:
        h = remove_edges(g, [x])
        rest = tuple(i for i in ids if i != x)
        image = [p.substitute({x: 0}) for p in fam.nonzero()]
        rep.add("edge-removal", {"edge": x},
                ideal_equality(incidence_relations(h).nonzero(), image, variables=rest))

    # a degree-1 vertex v on edge x: x in I(G) and I(G) = I(G - v) + (x)
    for v in g.vertices:
        inc = g.incident(v)
        if g.degree(v) != 1:
            continue
        x = inc[0]
        h = remove_vertex(g, v)
        ok = ideal_contains(gb, Polynomial.var(x)) and ideal_equality(
            fam.nonzero(), incidence_relations(h).nonzero() + [Polynomial.var(x)], variables=ids)
        rep.add("end-removal", {"vertex": v, "edge": x}, ok)

    # v with one in-edge y and one out-edge x: x := y maps I(G) onto I(merged)
    for v in g.vertices:
        ins, outs = g.in_edges(v), g.out_edges(v)
        if len(ins) != 1 or len(outs) != 1 or ins[0] == outs[0]:
            continue
        h, y, x = merge_degree_two(g, v)
        image = [p.substitute({x: Polynomial.var(y)}) for p in fam.nonzero()]
        rest = tuple(i for i in ids if i != x)
        rep.add("degree-two-merge", {"vertex": v, "kept": y, "removed": x},
                ideal_equality(incidence_relations(h).nonzero(), image, variables=rest))

    # fusing u and v: every relation of the fused graph lies in I(G)
    for u, v in combinations(g.vertices, 2):
        h = identify_vertices(g, u, v)
        ok = all(ideal_contains(gb, p) for p in incidence_relations(h).nonzero())
        rep.add("fuse", {"u": u, "v": v}, ok)

    # stripping loop variables from the relations keeps the ideal
    if g.loops():
        rep.add("strip-loops", {"loops": list(g.loops())},
                ideal_equality(fam.nonzero(), incidence_relations(g, strip_loops=True).nonzero(),
                               variables=ids))
    return rep
