"""Cycle enumeration, packings, spectra, feedback sets and disassemblies.

Everything here is exact search over enumerated cycles. Cycles become
bitmasks (over edge ids or over vertices), and three generic routines work on
those masks: maximum disjoint packing, enumeration of maximal disjoint
families, and minimum hitting set. The directed and undirected analyses both
go through them.
"""

from __future__ import annotations

import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterable, Sequence

from .errors import GraphError, GuardExceeded
from .graph import (
    DirectedGraph,
    Edge,
    UndirectedGraph,
    bipartite_double,
    path_contract,
)

log = logging.getLogger(__name__)

DEFAULT_MAX_CYCLES = 10**6
DEFAULT_MAX_NODES = 10**6

__all__ = [
    "Cycle",
    "CycleCollection",
    "CycleSpectrum",
    "Disassembly",
    "enumerate_cycles",
    "is_acyclic",
    "packing_number",
    "cycle_spectrum",
    "maximal_collections",
    "strong_via_double",
    "local_packing",
    "feedback_number",
    "path_numbers",
    "enumerate_disassemblies",
    "disassembly_graph",
    "disassembly_cycle_count",
    "max_packing",
    "cycles_through_edge",
    "undirected_cycles",
    "undirected_packing",
    "undirected_feedback",
]


@dataclass(frozen=True, order=True)
class Cycle:
    """A simple cycle as edge ids in traversal order, rotated to start at the
    smallest id. ``vertices[i]`` is the tail of ``edges[i]``."""

    edges: tuple[int, ...]
    vertices: tuple[str, ...] = field(compare=False)

    @classmethod
    def from_walk(cls, edges: Sequence[int], vertices: Sequence[str]) -> "Cycle":
        k = edges.index(min(edges))
        return cls(tuple(edges[k:]) + tuple(edges[:k]),
                   tuple(vertices[k:]) + tuple(vertices[:k]))

    def __len__(self):
        return len(self.edges)

    @property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edges)

    @property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    def __repr__(self):
        return f"Cycle{self.edges}"


@dataclass(frozen=True)
class CycleCollection:
    cycles: frozenset[Cycle]
    mode: str = "edge"

    def __post_init__(self):
        seen: set = set()
        for c in sorted(self.cycles):
            items = c.edge_set if self.mode == "edge" else c.vertex_set
            if seen & items:
                raise ValueError(f"cycles in the collection are not {self.mode}-disjoint")
            seen |= items

    def __len__(self):
        return len(self.cycles)

    def sorted(self) -> list[Cycle]:
        return sorted(self.cycles)


@dataclass(frozen=True)
class CycleSpectrum:
    """gamma[n] = number of maximal collections with n cycles; zero entries omitted.

    An acyclic graph has the empty spectrum (its only maximal collection is
    empty and n = 0 is not recorded).
    """

    gamma: dict[int, int]

    def __post_init__(self):
        object.__setattr__(self, "gamma", {n: c for n, c in sorted(self.gamma.items()) if c})

    def __getitem__(self, n: int) -> int:
        return self.gamma.get(n, 0)

    @property
    def top(self) -> int:
        return max(self.gamma, default=0)

    @property
    def total(self) -> int:
        return sum(self.gamma.values())

    def to_dict(self) -> dict[str, int]:
        return {str(n): c for n, c in self.gamma.items()}


# ------------------------------------------------------------ enumeration

def _sccs(vertices: Sequence[str], succ: dict[str, list[str]]) -> dict[str, int]:
    """Tarjan's algorithm, iterative. Returns vertex -> component index."""
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    comp: dict[str, int] = {}
    stack: list[str] = []
    on_stack: set[str] = set()
    counter = 0
    ncomp = 0
    for root in vertices:
        if root in index:
            continue
        work = [(root, iter(succ.get(root, ())))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ.get(w, ()))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                low[work[-1][0]] = min(low[work[-1][0]], low[v])
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return comp


def enumerate_cycles(g: DirectedGraph, max_cycles: int = DEFAULT_MAX_CYCLES) -> list[Cycle]:
    """All simple directed cycles, sorted by canonical form.

    For each start vertex s (in vertex order) the search only visits later
    vertices in the strongly connected component of s, so every cycle is
    found exactly once, from its earliest vertex.
    """
    order = {v: i for i, v in enumerate(g.vertices)}
    found: list[Cycle] = []

    def emit(edges, verts):
        found.append(Cycle.from_walk(edges, verts))
        if len(found) > max_cycles:
            raise GuardExceeded("cycle enumeration", max_cycles)

    for s in g.vertices:
        i = order[s]
        allowed = [v for v in g.vertices if order[v] >= i]
        allowed_set = set(allowed)
        succ = {v: [g.edge(e).head for e in g.out_edges(v) if g.edge(e).head in allowed_set]
                for v in allowed}
        comp = _sccs(allowed, succ)
        region = {v for v in allowed if comp[v] == comp[s]}
        out = {v: [(e, g.edge(e).head) for e in g.out_edges(v)
                   if g.edge(e).head in region] for v in region}
        for e, h in out[s]:
            if h == s:
                emit([e], [s])
        # iterative DFS over simple paths starting at s
        path_e: list[int] = []
        path_v: list[str] = [s]
        on_path = {s}
        stack = [iter([(e, h) for e, h in out[s] if h != s])]
        while stack:
            step = next(stack[-1], None)
            if step is None:
                stack.pop()
                if path_e:
                    path_e.pop()
                    on_path.discard(path_v.pop())
                continue
            e, h = step
            if h in on_path:
                continue
            path_e.append(e)
            path_v.append(h)
            on_path.add(h)
            for e2, h2 in out[h]:
                if h2 == s:
                    emit(path_e + [e2], path_v)
            stack.append(iter([(e2, h2) for e2, h2 in out[h] if h2 != s]))
    found.sort()
    return found


def is_acyclic(g: DirectedGraph) -> bool:
    """Kahn's algorithm; loops make a graph cyclic."""
    indeg = {v: 0 for v in g.vertices}
    for e in g.edges:
        indeg[e.head] += 1
    queue = deque(v for v in g.vertices if indeg[v] == 0)
    seen = 0
    while queue:
        v = queue.popleft()
        seen += 1
        for e in g.out_edges(v):
            h = g.edge(e).head
            indeg[h] -= 1
            if indeg[h] == 0:
                queue.append(h)
    return seen == len(g.vertices)


# ------------------------------------------------- generic mask searches

def _popcount(x: int) -> int:
    return bin(x).count("1")


def max_disjoint(masks: Sequence[int], max_nodes: int = DEFAULT_MAX_NODES) -> tuple[int, list[int]]:
    """Largest set of pairwise disjoint masks; returns (size, chosen indices)."""
    masks = list(masks)
    best: list[int] = []
    nodes = 0
    # order: small masks first tends to find large packings early
    order = sorted(range(len(masks)), key=lambda i: (_popcount(masks[i]), i))
    min_size = min((_popcount(m) for m in masks), default=1) or 1

    def bound(cands, used):
        free = 0
        for i in cands:
            free |= masks[i]
        return min(len(cands), _popcount(free & ~used) // min_size)

    def rec(cands: list[int], used: int, chosen: list[int]):
        nonlocal best, nodes
        nodes += 1
        if nodes > max_nodes:
            raise GuardExceeded("packing search nodes", max_nodes)
        if len(chosen) > len(best):
            best = list(chosen)
        if not cands or len(chosen) + bound(cands, used) <= len(best):
            return
        i = cands[0]
        rest = cands[1:]
        chosen.append(i)
        rec([j for j in rest if not masks[j] & masks[i]], used | masks[i], chosen)
        chosen.pop()
        rec(rest, used, chosen)

    rec(order, 0, [])
    return len(best), sorted(best)


def maximal_disjoint_families(masks: Sequence[int], max_nodes: int = DEFAULT_MAX_NODES
                              ) -> list[tuple[int, ...]]:
    """Every inclusion-maximal family of pairwise disjoint masks.

    These are the maximal cliques of the "disjoint from" graph, found by
    Bron-Kerbosch with pivoting. An empty input gives ``[()]``.
    """
    n = len(masks)
    compat = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and not masks[i] & masks[j]:
                compat[i] |= 1 << j
    out: list[tuple[int, ...]] = []
    nodes = 0

    def bits(x):
        while x:
            low = x & -x
            yield low.bit_length() - 1
            x ^= low

    def rec(r: int, p: int, x: int):
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise GuardExceeded("collection search nodes", max_nodes)
        if not p and not x:
            out.append(tuple(bits(r)))
            return
        pivot = max(bits(p | x), key=lambda u: _popcount(p & compat[u]))
        for v in list(bits(p & ~compat[pivot])):
            rec(r | (1 << v), p & compat[v], x & compat[v])
            p &= ~(1 << v)
            x |= 1 << v

    rec(0, (1 << n) - 1, 0)
    out.sort(key=lambda fam: (len(fam), fam))
    return out


def min_hitting_set(targets: Sequence[int], allowed: int, max_nodes: int = DEFAULT_MAX_NODES
                    ) -> tuple[int, int] | None:
    """Smallest subset of ``allowed`` bits meeting every target mask.

    Returns (size, mask) or None if some target has no allowed bit.
    """
    targets = [t & allowed for t in targets]
    if any(t == 0 for t in targets):
        return None
    targets = sorted(set(targets), key=lambda t: (_popcount(t), t))
    # greedy seed
    chosen = 0
    left = list(targets)
    while left:
        cnt: Counter = Counter()
        for t in left:
            x = t
            while x:
                low = x & -x
                cnt[low] += 1
                x ^= low
        pick = max(cnt, key=lambda b: (cnt[b], -b))
        chosen |= pick
        left = [t for t in left if not t & pick]
    best = [_popcount(chosen), chosen]
    nodes = 0

    def lower_bound(open_targets):
        used = 0
        k = 0
        for t in open_targets:
            if not t & used:
                used |= t
                k += 1
        return k

    def rec(hit: int, forbidden: int, size: int):
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise GuardExceeded("feedback search nodes", max_nodes)
        open_targets = [t & ~forbidden for t in targets if not t & hit]
        if not open_targets:
            if size < best[0]:
                best[0], best[1] = size, hit
            return
        if any(t == 0 for t in open_targets):
            return
        if size + lower_bound(sorted(open_targets, key=_popcount)) >= best[0]:
            return
        t = min(open_targets, key=lambda m: (_popcount(m), m))
        x = t
        banned = forbidden
        while x:
            low = x & -x
            x ^= low
            rec(hit | low, banned, size + 1)
            banned |= low

    rec(0, 0, 0)
    return best[0], best[1]


def _mask_bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


# ----------------------------------------------------- directed analyses

class _Index:
    """Bit positions for edge ids and vertices of one graph."""

    def __init__(self, g):
        self.edge_bit = {eid: i for i, eid in enumerate(sorted(g.edge_ids))}
        self.bit_edge = {i: eid for eid, i in self.edge_bit.items()}
        self.vertex_bit = {v: i for i, v in enumerate(g.vertices)}

    def edge_mask(self, ids: Iterable[int]) -> int:
        m = 0
        for i in ids:
            m |= 1 << self.edge_bit[i]
        return m

    def vertex_mask(self, vs: Iterable[str]) -> int:
        m = 0
        for v in vs:
            m |= 1 << self.vertex_bit[v]
        return m

    def edges_of(self, mask: int) -> tuple[int, ...]:
        return tuple(sorted(self.bit_edge[b] for b in _mask_bits(mask)))


def _check_mode(mode):
    if mode not in ("edge", "vertex"):
        raise ValueError(f"mode must be 'edge' or 'vertex', got {mode!r}")


def _cycle_masks(g, cycles, mode, idx=None):
    idx = idx or _Index(g)
    if mode == "edge":
        return [idx.edge_mask(c.edges) for c in cycles]
    return [idx.vertex_mask(c.vertices) for c in cycles]


def packing_number(g: DirectedGraph, mode: str = "edge", *, cycles=None,
                   max_cycles: int = DEFAULT_MAX_CYCLES,
                   max_nodes: int = DEFAULT_MAX_NODES) -> int:
    """alpha (edge-disjoint) or strong alpha (vertex-disjoint)."""
    _check_mode(mode)
    cycles = enumerate_cycles(g, max_cycles) if cycles is None else cycles
    return max_disjoint(_cycle_masks(g, cycles, mode), max_nodes)[0]


def max_packing(g: DirectedGraph, mode: str = "edge", *, cycles=None,
                max_cycles: int = DEFAULT_MAX_CYCLES,
                max_nodes: int = DEFAULT_MAX_NODES) -> CycleCollection:
    """One maximum collection, as a witness for ``packing_number``."""
    _check_mode(mode)
    cycles = enumerate_cycles(g, max_cycles) if cycles is None else cycles
    _, chosen = max_disjoint(_cycle_masks(g, cycles, mode), max_nodes)
    return CycleCollection(frozenset(cycles[i] for i in chosen), mode)


def maximal_collections(g: DirectedGraph, mode: str = "edge", *, cycles=None,
                        max_cycles: int = DEFAULT_MAX_CYCLES,
                        max_nodes: int = DEFAULT_MAX_NODES) -> list[CycleCollection]:
    """All maximal (edge mode) or strongly maximal (vertex mode) collections.

    A collection is maximal when no further cycle is disjoint from all of its
    members, which is the same as the residual graph being acyclic. For an
    acyclic graph the result is a single empty collection.
    """
    _check_mode(mode)
    cycles = enumerate_cycles(g, max_cycles) if cycles is None else cycles
    fams = maximal_disjoint_families(_cycle_masks(g, cycles, mode), max_nodes)
    return [CycleCollection(frozenset(cycles[i] for i in fam), mode) for fam in fams]


def cycle_spectrum(g: DirectedGraph, mode: str = "edge", *, cycles=None,
                   max_cycles: int = DEFAULT_MAX_CYCLES,
                   max_nodes: int = DEFAULT_MAX_NODES) -> CycleSpectrum:
    cols = maximal_collections(g, mode, cycles=cycles, max_cycles=max_cycles,
                               max_nodes=max_nodes)
    return CycleSpectrum(dict(Counter(len(c) for c in cols if len(c))))


def strong_via_double(g: DirectedGraph, *, max_cycles: int = DEFAULT_MAX_CYCLES,
                      max_nodes: int = DEFAULT_MAX_NODES) -> tuple[int, CycleSpectrum]:
    """Strong packing number and spectrum computed in edge mode on B_G."""
    b, _ = bipartite_double(g)
    cycles = enumerate_cycles(b, max_cycles)
    alpha = packing_number(b, "edge", cycles=cycles, max_nodes=max_nodes)
    spec = cycle_spectrum(b, "edge", cycles=cycles, max_nodes=max_nodes)
    return alpha, spec


def _scope_edges(g, vertex=None, edges=None, edge=None) -> set[int]:
    given = [x is not None for x in (vertex, edges, edge)]
    if sum(given) != 1:
        raise ValueError("give exactly one of vertex=, edges=, edge=")
    if vertex is not None:
        g.require_vertex(vertex)
        return set(g.incident(vertex))
    ids = {edge} if edge is not None else set(edges)
    for i in ids:
        g.edge(i)
    return ids


def cycles_through_edge(g, x: int, cycles=None) -> list[Cycle]:
    g.edge(x)
    cycles = enumerate_cycles(g) if cycles is None else cycles
    return [c for c in cycles if x in c.edge_set]


def local_packing(g: DirectedGraph, *, vertex: str | None = None,
                  edges: Iterable[int] | None = None, edge: int | None = None,
                  cycles=None, max_cycles: int = DEFAULT_MAX_CYCLES,
                  max_nodes: int = DEFAULT_MAX_NODES) -> int:
    """alpha_v / alpha_E / most edge-disjoint cycles through one edge.

    A cycle passes through v exactly when it uses an edge incident at v, so
    all three scopes reduce to an edge set.
    """
    scope = _scope_edges(g, vertex, edges, edge)
    cycles = enumerate_cycles(g, max_cycles) if cycles is None else cycles
    chosen = [c for c in cycles if c.edge_set & scope]
    return max_disjoint(_cycle_masks(g, chosen, "edge"), max_nodes)[0]


def feedback_number(g: DirectedGraph, *, vertex: str | None = None,
                    edges: Iterable[int] | None = None, cycles=None,
                    max_cycles: int = DEFAULT_MAX_CYCLES,
                    max_nodes: int = DEFAULT_MAX_NODES) -> tuple[int, tuple[int, ...]]:
    """beta, beta_v or beta_E with one optimal witness edge set.

    No scope means all edges (beta). With ``vertex`` only edges at v may be
    removed and only cycles through v need breaking; ``edges`` likewise.
    """
    idx = _Index(g)
    cycles = enumerate_cycles(g, max_cycles) if cycles is None else cycles
    if vertex is None and edges is None:
        scope = set(g.edge_ids)
    else:
        scope = _scope_edges(g, vertex=vertex) if vertex is not None else _scope_edges(g, edges=edges)
    targets = [idx.edge_mask(c.edges) for c in cycles if c.edge_set & scope]
    res = min_hitting_set(targets, idx.edge_mask(scope), max_nodes)
    assert res is not None  # every target meets the scope
    return res[0], idx.edges_of(res[1])


def path_numbers(g: DirectedGraph, u: str, v: str, **guards) -> tuple[int, int]:
    """(alpha_{u->v}, beta_{u->v}) computed on G_{u->v} at the merged vertex."""
    h = path_contract(g, u, v)
    merged = _merged_name(g, h, u, v)
    if merged is None:
        return 0, 0
    cycles = enumerate_cycles(h, guards.get("max_cycles", DEFAULT_MAX_CYCLES))
    a = local_packing(h, vertex=merged, cycles=cycles, max_nodes=guards.get("max_nodes", DEFAULT_MAX_NODES))
    b, _ = feedback_number(h, vertex=merged, cycles=cycles,
                           max_nodes=guards.get("max_nodes", DEFAULT_MAX_NODES))
    return a, b


def _merged_name(g, h, u, v):
    """Name of u#v in h, or None when it was dropped (no u->v paths)."""
    new = set(h.vertices) - set(g.vertices)
    if new:
        (name,) = new
        return name
    return None


# ----------------------------------------------------------- disassembly

@dataclass(frozen=True)
class Disassembly:
    """Per vertex, the (in-edge, out-edge) pairs joined at that vertex."""

    pairs: tuple[tuple[str, tuple[tuple[int, int], ...]], ...]

    def successor(self) -> dict[int, int]:
        return {y: x for _, ps in self.pairs for y, x in ps}


def _vertex_matchings(ins: Sequence[int], outs: Sequence[int]):
    if len(ins) <= len(outs):
        for img in permutations(outs, len(ins)):
            yield tuple(zip(ins, img))
    else:
        for img in permutations(ins, len(outs)):
            yield tuple(sorted(zip(img, outs)))


def enumerate_disassemblies(g: DirectedGraph, cap: int = 10**5) -> list[Disassembly]:
    """Every disassembly; raises GuardExceeded when there are more than ``cap``."""
    from math import perm

    total = 1
    per_vertex = []
    for v in g.vertices:
        ins, outs = g.in_edges(v), g.out_edges(v)
        k, l = max(len(ins), len(outs)), min(len(ins), len(outs))
        total *= perm(k, l)
        per_vertex.append((v, ins, outs))
    if total > cap:
        raise GuardExceeded("disassembly count", cap)
    options = [[(v, m) for m in _vertex_matchings(ins, outs)] for v, ins, outs in per_vertex]
    out = [Disassembly(tuple(choice)) for choice in product(*options)]
    for d in out:
        _validate_disassembly(g, d)
    return out


def _validate_disassembly(g, d: Disassembly):
    succ = d.successor()
    if len(set(succ.values())) != len(succ):
        raise AssertionError("an out-edge is paired twice")
    for v, ps in d.pairs:
        ins, outs = g.in_edges(v), g.out_edges(v)
        if len(ps) != min(len(ins), len(outs)):
            raise AssertionError(f"wrong number of pairs at {v!r}")
        for y, x in ps:
            if g.edge(y).head != v or g.edge(x).tail != v:
                raise AssertionError(f"pair {(y, x)} is not at {v!r}")


def disassembly_graph(g: DirectedGraph, d: Disassembly) -> DirectedGraph:
    """The graph D: edges of g whose ends are glued only along the pairs.

    Every node of D has in-degree and out-degree at most 1, so D is a
    disjoint union of directed paths and cycles.
    """
    head_node = {}
    tail_node = {}
    for v, ps in d.pairs:
        for y, x in ps:
            node = f"{v}|{y}>{x}"
            head_node[y] = node
            tail_node[x] = node
    edges = []
    for e in g.edges:
        t = tail_node.get(e.id, f"{e.tail}|out{e.id}")
        h = head_node.get(e.id, f"{e.head}|in{e.id}")
        edges.append(Edge(e.id, t, h, e.label))
    out = DirectedGraph((), edges)
    for v in out.vertices:
        if len(out.in_edges(v)) > 1 or len(out.out_edges(v)) > 1:
            raise AssertionError("disassembly is not a union of paths and cycles")
    return out


def disassembly_cycle_count(g: DirectedGraph, d: Disassembly) -> int:
    """alpha(D): the number of closed chains of the pairing."""
    succ = d.successor()
    seen: set[int] = set()
    count = 0
    for start in succ:
        if start in seen:
            continue
        path = []
        x = start
        while x in succ and x not in seen and x not in path:
            path.append(x)
            x = succ[x]
        if x in path:
            count += 1
        seen.update(path)
    return count


# ---------------------------------------------------- undirected analyses

def undirected_cycles(g, max_cycles: int = DEFAULT_MAX_CYCLES) -> list[frozenset[int]]:
    """Undirected cycles as edge-id sets: loops, parallel pairs, and simple
    cycles of length >= 3. Edge directions are ignored."""
    found: list[frozenset[int]] = []
    seen: set[frozenset[int]] = set()

    def emit(es):
        fs = frozenset(es)
        if fs not in seen:
            seen.add(fs)
            found.append(fs)
            if len(found) > max_cycles:
                raise GuardExceeded("undirected cycle enumeration", max_cycles)

    order = {v: i for i, v in enumerate(g.vertices)}
    nbrs: dict[str, list[tuple[int, str]]] = {v: [] for v in g.vertices}
    for e in g.edges:
        if e.is_loop:
            emit([e.id])
            continue
        nbrs[e.tail].append((e.id, e.head))
        nbrs[e.head].append((e.id, e.tail))
    for s in g.vertices:
        i = order[s]
        path_e: list[int] = []
        on_path = {s}

        def dfs(v):
            for eid, w in nbrs[v]:
                if eid in path_e:
                    continue
                if w == s and path_e:
                    emit(path_e + [eid])
                    continue
                if w in on_path or order[w] < i:
                    continue
                path_e.append(eid)
                on_path.add(w)
                dfs(w)
                on_path.discard(w)
                path_e.pop()

        dfs(s)
    found.sort(key=lambda fs: (len(fs), sorted(fs)))
    return found


def undirected_packing(g, vertex: str | None = None, cycles=None,
                       max_nodes: int = DEFAULT_MAX_NODES) -> int:
    """Most edge-disjoint undirected cycles (through ``vertex`` if given)."""
    idx = _Index(g)
    cycles = undirected_cycles(g) if cycles is None else cycles
    if vertex is not None:
        at = set(g.incident(vertex))
        cycles = [c for c in cycles if c & at]
    return max_disjoint([idx.edge_mask(c) for c in cycles], max_nodes)[0]


def undirected_feedback(g, vertex: str | None = None, cycles=None,
                        max_nodes: int = DEFAULT_MAX_NODES) -> tuple[int, tuple[int, ...]]:
    """Fewest edges (at ``vertex`` if given) whose removal kills the cycles
    (through ``vertex`` if given)."""
    idx = _Index(g)
    cycles = undirected_cycles(g) if cycles is None else cycles
    allowed = set(g.edge_ids)
    if vertex is not None:
        allowed = set(g.incident(vertex))
        cycles = [c for c in cycles if c & allowed]
    res = min_hitting_set([idx.edge_mask(c) for c in cycles], idx.edge_mask(allowed), max_nodes)
    assert res is not None
    return res[0], idx.edges_of(res[1])
