from __future__ import annotations

import random
from fractions import Fraction

import pytest

from corpus import isomorphism_classes, random_corpus
from cyclepack.cycles import cycle_spectrum, packing_number
from cyclepack.graph import DirectedGraph
from cyclepack.geometry import (
    IncidenceSetModel,
    LinearComponent,
    build_incidence_set,
    component_contains,
    degree_and_counts,
    dimension,
    is_variety,
    membership,
    strong_model_via_double,
)


def test_theta_model(theta):
    m = build_incidence_set(theta)
    assert [c.to_dict() for c in m.components] == [
        {"zeros": [1], "classes": [[0, 2]]},
        {"zeros": [0], "classes": [[1, 2]]},
    ]
    assert dimension(m) == 0
    assert degree_and_counts(m) == (2, {0: 2})


def test_two_loops_model(two_loops):
    m = build_incidence_set(two_loops)
    assert len(m.components) == 1
    assert m.components[0].zeros == frozenset()
    assert dimension(m) == 1
    assert degree_and_counts(m) == (1, {1: 1})
    strong = build_incidence_set(two_loops, "strong")
    assert degree_and_counts(strong) == (2, {0: 2})


def test_single_loop_and_acyclic():
    loop = DirectedGraph.from_pairs([("v", "v")])
    assert degree_and_counts(build_incidence_set(loop)) == (1, {0: 1})
    dag = DirectedGraph.from_pairs([("a", "b"), ("b", "c")])
    m = build_incidence_set(dag)
    assert m.is_empty and dimension(m) == -1
    with pytest.raises(ValueError):
        degree_and_counts(m)


def test_bad_mode(theta):
    with pytest.raises(ValueError):
        build_incidence_set(theta, "weird")


def test_variety_examples(theta):
    g = DirectedGraph.from_pairs([("a", "b"), ("b", "a"), ("c", "d"), ("d", "c")])
    v = is_variety(g)
    assert v.is_variety and v.cycle_count == 2 and v.packing == 2 and v.component_count == 1
    t = is_variety(theta)
    assert not t and t.cycle_count == 2 and t.packing == 1
    loop = DirectedGraph.from_pairs([("v", "v")])
    assert is_variety(loop) and is_variety(loop, "strong")
    assert build_incidence_set(loop) == IncidenceSetModel(
        build_incidence_set(loop, "strong").components, (0,), "plain")


def test_membership_examples(theta):
    m = build_incidence_set(theta)
    assert membership(m, [1, 0, 1], theta)
    assert not membership(m, [1, 1, 1], theta)
    assert membership(m, {0: 0, 1: 5, 2: 5}, theta)
    g = DirectedGraph.from_pairs([("a", "b"), ("b", "a"), ("b", "c")])
    assert not membership(build_incidence_set(g), [0, 0, 1], g)
    with pytest.raises(ValueError):
        membership(m, [1, 0])
    with pytest.raises(ValueError):
        membership(m, [0, 0, 0])


def test_component_validation():
    with pytest.raises(ValueError):
        LinearComponent(frozenset({0}), (frozenset({0, 1}),))
    with pytest.raises(ValueError):
        IncidenceSetModel((LinearComponent(frozenset(), (frozenset({0}),)),), (0, 1))


def test_component_contains():
    line = LinearComponent(frozenset(), (frozenset({0, 1}), frozenset({2})))
    point = LinearComponent(frozenset({2}), (frozenset({0, 1}),))
    other = LinearComponent(frozenset({0, 1}), (frozenset({2}),))
    assert component_contains(line, point) and component_contains(line, other)
    assert not component_contains(point, line)


def test_dimension_and_counts_exhaustive_small():
    for g in isomorphism_classes(5):
        for mode, pmode in (("plain", "edge"), ("strong", "vertex")):
            m = build_incidence_set(g, mode)
            alpha = packing_number(g, pmode)
            assert dimension(m) == alpha - 1
            if alpha:
                deg, counts = degree_and_counts(m)
                spec = cycle_spectrum(g, pmode)
                assert deg == spec[alpha]
                assert {k + 1: v for k, v in counts.items()} == spec.gamma


def test_components_pairwise_incomparable():
    for g in random_corpus(12, 120, 8):
        m = build_incidence_set(g)
        for x in m.components:
            for y in m.components:
                if x != y:
                    assert not component_contains(x, y)


def test_strong_projection_agrees():
    for g in random_corpus(13, 80, 7):
        assert build_incidence_set(g, "strong") == strong_model_via_double(g)


def test_membership_on_random_points():
    rng = random.Random(14)
    for g in random_corpus(15, 60, 6):
        for mode in ("plain", "strong"):
            m = build_incidence_set(g, mode)
            for comp in m.components:
                # a generic point of each component lies on the model
                pt = {z: Fraction(0) for z in comp.zeros}
                for cls in comp.classes:
                    val = Fraction(rng.randint(1, 9), rng.randint(1, 4))
                    pt.update({i: val for i in cls})
                assert membership(m, pt, g)
            for _ in range(5):
                pt = [Fraction(rng.randint(-1, 2)) for _ in g.edge_ids]
                if any(pt):
                    membership(m, pt, g)  # raises if the two routes disagree
