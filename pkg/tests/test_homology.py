from __future__ import annotations

from corpus import isomorphism_classes, random_corpus
from cyclepack.cycles import undirected_cycles, undirected_feedback, undirected_packing
from cyclepack.graph import DirectedGraph, UndirectedGraph, underlying_undirected
from cyclepack.homology import (
    a1_of_vertex,
    h0_degree_one,
    h0_presentation,
    is_forest,
    tree_certificate,
    u_degree_one,
    verify_removal_identities,
    z2_detectors,
)
from cyclepack.oracle import oracle_edge_on_undirected_cycle, oracle_undirected_numbers
from cyclepack.poly import Polynomial

tri = UndirectedGraph.from_pairs([("a", "b"), ("b", "c"), ("c", "a")])


def test_h0_degree_one_examples(two_cycle):
    assert h0_degree_one(DirectedGraph.from_pairs([("u", "v")])).is_zero
    assert h0_degree_one(two_cycle).free_rank == 1
    tri_d = DirectedGraph.from_pairs([("a", "b"), ("b", "c"), ("c", "a")])
    r = h0_degree_one(tri_d)
    assert r.free_rank == 1 and r.torsion == ()
    assert h0_presentation(tri_d).variables == (0, 1, 2)


def test_a1_examples(two_loops, two_cycle):
    leaf = DirectedGraph.from_pairs([("a", "b"), ("b", "c")])
    assert a1_of_vertex(leaf, "a").free_rank == 0
    assert a1_of_vertex(two_cycle, "u").free_rank == 1
    assert a1_of_vertex(two_loops, "v").free_rank == 2


def test_z2_examples():
    r = z2_detectors(tri)
    assert r.global_bound == 1 and all(r.per_edge.values())
    path = UndirectedGraph.from_pairs([("a", "b"), ("b", "c")])
    r = z2_detectors(path)
    assert r.global_bound == 0 and not any(r.per_edge.values())
    loop = UndirectedGraph.from_pairs([("v", "v")])
    r = z2_detectors(loop)
    assert r.s_dimension == 0 and r.per_edge == {0: True}


def test_u_degree_one_examples():
    assert u_degree_one(UndirectedGraph.from_pairs([("u", "v")])).is_zero
    r = u_degree_one(UndirectedGraph.from_pairs([("v", "v")]))
    assert (r.free_rank, r.torsion, r.gf2_dimension) == (0, (2,), 1)
    assert u_degree_one(tri).gf2_dimension == 1


def test_tree_certificate_examples(two_cycle):
    assert tree_certificate(DirectedGraph.from_pairs([("a", "b"), ("b", "c")]))
    assert not tree_certificate(two_cycle)
    assert not tree_certificate(DirectedGraph.from_pairs([("v", "v")]))
    assert not tree_certificate(UndirectedGraph.from_pairs([("v", "v")]))
    assert tree_certificate(UndirectedGraph.from_pairs([("a", "b"), ("c", "b")]))


def test_tree_certificate_exhaustive():
    for g in isomorphism_classes(4):
        assert tree_certificate(g) == is_forest(g)
        assert tree_certificate(underlying_undirected(g)) == is_forest(g)


def test_undirected_bounds_and_detectors():
    graphs = list(isomorphism_classes(5)) + random_corpus(16, 100, 8)
    for g in graphs:
        ug = underlying_undirected(g)
        cycles = undirected_cycles(ug)
        a = undirected_packing(ug, cycles=cycles)
        b, _ = undirected_feedback(ug, cycles=cycles)
        h = h0_degree_one(ug)
        z = z2_detectors(ug)
        assert a <= h.free_rank <= b
        assert h.gf2_dimension == z.global_bound
        assert (not h.is_zero) == bool(cycles)
        assert (not u_degree_one(ug).is_zero) == bool(cycles)
        for x in ug.edge_ids:
            assert z.per_edge[x] == oracle_edge_on_undirected_cycle(ug, x)
        for v in ug.vertices:
            av = undirected_packing(ug, vertex=v, cycles=cycles)
            bv, _ = undirected_feedback(ug, vertex=v, cycles=cycles)
            assert av <= a1_of_vertex(ug, v).free_rank <= bv
            assert av <= z.per_vertex[v] <= bv


def test_undirected_numbers_match_oracle():
    for g in random_corpus(17, 80, 7):
        ug = underlying_undirected(g)
        assert (undirected_packing(ug), undirected_feedback(ug)[0]) == oracle_undirected_numbers(ug)
        for v in ug.vertices:
            got = (undirected_packing(ug, vertex=v), undirected_feedback(ug, vertex=v)[0])
            assert got == oracle_undirected_numbers(ug, v)


def test_removal_identity_examples(theta):
    rep = verify_removal_identities(theta)
    assert rep.ok
    kinds = {c["identity"] for c in rep.checks}
    assert {"edge-removal", "fuse"} <= kinds
    tri_d = DirectedGraph.from_pairs([("a", "b"), ("b", "c"), ("c", "a")])
    rep = verify_removal_identities(tri_d)
    assert rep.ok and sum(c["identity"] == "degree-two-merge" for c in rep.checks) == 3
    end = DirectedGraph.from_pairs([("a", "b"), ("b", "a"), ("b", "c")])
    rep = verify_removal_identities(end)
    assert any(c["identity"] == "end-removal" for c in rep.checks) and rep.ok
    looped = DirectedGraph.from_pairs([("a", "a"), ("a", "b"), ("b", "a")])
    rep = verify_removal_identities(looped)
    assert any(c["identity"] == "strip-loops" for c in rep.checks) and rep.ok


def test_removal_identity_guard():
    import pytest

    from cyclepack.errors import GuardExceeded

    g = DirectedGraph.from_pairs([("a", "b")] * 9)
    with pytest.raises(GuardExceeded):
        verify_removal_identities(g, budget=8)


def test_theta_edge_removal_matches_parallel_pair(theta):
    from cyclepack.graph import remove_edges
    from cyclepack.groebner import ideal_equality
    from cyclepack.poly import incidence_relations

    a, b = Polynomial.var(0), Polynomial.var(1)
    image = [p.substitute({2: 0}) for p in incidence_relations(theta).nonzero()]
    assert ideal_equality(image, [a + b, a * b])
    pair = remove_edges(theta, [2])
    assert ideal_equality(incidence_relations(pair).nonzero(), [a + b, a * b], variables=(0, 1))


def test_triangle_merge_gives_two_cycle_ideal():
    from cyclepack.graph import merge_degree_two
    from cyclepack.groebner import ideal_equality
    from cyclepack.poly import incidence_relations

    tri_d = DirectedGraph.from_pairs([("a", "b"), ("b", "c"), ("c", "a")])
    h, kept, _ = merge_degree_two(tri_d, "b")
    assert len(h.edges) == 2
    x, y = (Polynomial.var(i) for i in sorted(h.edge_ids))
    assert ideal_equality(incidence_relations(h).nonzero(), [x - y], variables=h.edge_ids)
