"""The incidence set as an explicit finite union of linear subspaces.

A component is stored as a partition of the edge ids: a zero class (those
coordinates vanish) and equality classes (coordinates in one class are equal).
One component comes from each maximal collection of cycles, with one class
per cycle.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .cycles import enumerate_cycles, maximal_collections, packing_number
from .graph import DirectedGraph, bipartite_double
from .poly import incidence_relations, strong_relations

__all__ = [
    "LinearComponent",
    "IncidenceSetModel",
    "VarietyVerdict",
    "build_incidence_set",
    "strong_model_via_double",
    "dimension",
    "degree_and_counts",
    "is_variety",
    "membership",
    "component_contains",
]


@dataclass(frozen=True)
class LinearComponent:
    zeros: frozenset[int]
    classes: tuple[frozenset[int], ...]

    def __post_init__(self):
        classes = tuple(sorted((frozenset(c) for c in self.classes), key=lambda c: min(c)))
        object.__setattr__(self, "classes", classes)
        object.__setattr__(self, "zeros", frozenset(self.zeros))
        seen = set(self.zeros)
        for c in classes:
            if not c or seen & c:
                raise ValueError("classes must be nonempty and disjoint from each other and the zeros")
            seen |= c

    @property
    def dimension(self) -> int:
        return len(self.classes) - 1

    def sort_key(self):
        return (-len(self.classes), tuple(tuple(sorted(c)) for c in self.classes),
                tuple(sorted(self.zeros)))

    def contains_point(self, point: Mapping[int, Fraction]) -> bool:
        if any(point[z] != 0 for z in self.zeros):
            return False
        return all(len({point[i] for i in c}) == 1 for c in self.classes)

    def to_dict(self) -> dict:
        return {"zeros": sorted(self.zeros), "classes": [sorted(c) for c in self.classes]}


@dataclass(frozen=True)
class IncidenceSetModel:
    components: tuple[LinearComponent, ...]
    edge_ids: tuple[int, ...]
    mode: str = "plain"

    def __post_init__(self):
        comps = tuple(sorted(set(self.components), key=LinearComponent.sort_key))
        object.__setattr__(self, "components", comps)
        ids = set(self.edge_ids)
        for c in comps:
            if c.zeros.union(*c.classes) != ids:
                raise ValueError("a component does not partition the edge ids")

    @property
    def ambient_dimension(self) -> int:
        return len(self.edge_ids) - 1

    @property
    def is_empty(self) -> bool:
        return not self.components

    def to_dict(self) -> dict:
        return {"mode": self.mode, "components": [c.to_dict() for c in self.components]}


def component_contains(big: LinearComponent, small: LinearComponent) -> bool:
    """Whether the subspace ``small`` lies inside ``big``.

    Every equation of ``big`` must hold on ``small``: its zeros must be zeros
    of ``small``, and each of its classes must either vanish on ``small`` or
    sit inside a single class of ``small``.
    """
    if not big.zeros <= small.zeros:
        return False
    for c in big.classes:
        if c <= small.zeros:
            continue
        if not any(c <= d for d in small.classes):
            return False
    return True


def _from_collections(g, collections, mode) -> IncidenceSetModel:
    ids = frozenset(g.edge_ids)
    comps = []
    for col in collections:
        if not len(col):
            continue
        classes = tuple(c.edge_set for c in col.cycles)
        used = frozenset().union(*classes)
        comps.append(LinearComponent(ids - used, classes))
    return IncidenceSetModel(tuple(comps), tuple(sorted(ids)), mode)


def strong_model_via_double(g: DirectedGraph, **guards) -> IncidenceSetModel:
    """Strong model as the coordinate projection of the plain model of B_G."""
    b, z = bipartite_double(g)
    zs = set(z.values())
    ids = frozenset(g.edge_ids)
    comps = []
    for col in maximal_collections(b, "edge", **guards):
        if not len(col):
            continue
        classes = tuple(c.edge_set - zs for c in col.cycles)
        used = frozenset().union(*classes)
        comps.append(LinearComponent(ids - used, classes))
    return IncidenceSetModel(tuple(comps), tuple(sorted(ids)), "strong")


def build_incidence_set(g: DirectedGraph, mode: str = "plain", **guards) -> IncidenceSetModel:
    """P(G) (``plain``) or the strong set (``strong``) as linear components.

    In strong mode the model is built twice, from vertex-disjoint collections
    directly and by projecting P(B_G), and the two must match.
    """
    if mode == "plain":
        return _from_collections(g, maximal_collections(g, "edge", **guards), "plain")
    if mode == "strong":
        direct = _from_collections(g, maximal_collections(g, "vertex", **guards), "strong")
        projected = strong_model_via_double(g, **guards)
        if direct != projected:
            raise AssertionError("strong model differs from the projection of P(B_G)")
        return direct
    raise ValueError(f"mode must be 'plain' or 'strong', got {mode!r}")


def dimension(model: IncidenceSetModel) -> int:
    """Projective dimension; -1 for the empty set."""
    return max((c.dimension for c in model.components), default=-1)


def degree_and_counts(model: IncidenceSetModel) -> tuple[int, dict[int, int]]:
    """(number of top-dimensional components, {dimension: component count})."""
    if model.is_empty:
        raise ValueError("the empty set has no degree")
    counts = Counter(c.dimension for c in model.components)
    top = max(counts)
    return counts[top], dict(sorted(counts.items()))


@dataclass(frozen=True)
class VarietyVerdict:
    is_variety: bool
    cycle_count: int
    packing: int
    component_count: int

    def __bool__(self):
        return self.is_variety


def is_variety(g: DirectedGraph, mode: str = "plain", **guards) -> VarietyVerdict:
    """Whether the (strong) incidence set is a single linear subspace.

    The verdict comes from the model (at most one component; the empty set
    counts as the degenerate subspace). The cycle count and packing number
    are returned alongside so callers can check the counting criterion.
    When the strong set is a variety, P(G) = P~(G) is asserted.
    """
    cycles = enumerate_cycles(g, guards.get("max_cycles", 10**6))
    pmode = "edge" if mode == "plain" else "vertex"
    alpha = packing_number(g, pmode, cycles=cycles)
    model = build_incidence_set(g, mode, **guards)
    verdict = VarietyVerdict(len(model.components) <= 1, len(cycles), alpha,
                             len(model.components))
    if mode == "strong" and verdict.is_variety:
        plain = build_incidence_set(g, "plain", **guards)
        if plain.components != model.components:
            raise AssertionError("strong set is a variety but differs from P(G)")
    return verdict


def _as_point(model_or_ids, point) -> dict[int, Fraction]:
    ids = model_or_ids
    if isinstance(point, Mapping):
        if set(point) != set(ids):
            raise ValueError("point coordinates do not match the edge ids")
        pt = {i: Fraction(point[i]) for i in ids}
    else:
        point = list(point)
        if len(point) != len(ids):
            raise ValueError(f"expected {len(ids)} coordinates, got {len(point)}")
        pt = {i: Fraction(x) for i, x in zip(ids, point)}
    if all(x == 0 for x in pt.values()):
        raise ValueError("the zero vector is not a projective point")
    return pt


def membership(model: IncidenceSetModel, point, g: DirectedGraph | None = None) -> bool:
    """Whether a rational projective point lies on the model.

    ``point`` is a sequence aligned with ``model.edge_ids`` or a mapping
    edge id -> value. When ``g`` is given the answer is cross-checked by
    evaluating the (strong) incidence relations at the point.
    """
    pt = _as_point(model.edge_ids, point)
    inside = any(c.contains_point(pt) for c in model.components)
    if g is not None:
        fam = incidence_relations(g) if model.mode == "plain" else strong_relations(g)
        by_eval = all(r.evaluate(pt) == 0 for r in fam.relations)
        if by_eval != inside:
            raise AssertionError("component test and relation evaluation disagree")
    return inside
