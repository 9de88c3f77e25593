"""Directed and undirected multigraphs, their parsers, and graph transforms.

Vertices are strings. Edges carry integer ids that are stable under every
transform in this module: an edge that survives a transform keeps its id, and
fresh edges get ids above the current maximum. The same ids index polynomial
variables downstream, so the combinatorial and algebraic sides share a single
namespace.

Vertices of degree 0 are dropped whenever a graph is built; the dropped names
are kept on ``graph.dropped`` so callers can tell that normalization happened.
"""

from __future__ import annotations

import json
import logging
import math
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import GraphError, ParseError

log = logging.getLogger(__name__)

__all__ = [
    "Edge",
    "DirectedGraph",
    "UndirectedGraph",
    "FlowNetwork",
    "VertexEdgeIncidenceMatrix",
    "parse_graph",
    "read_graph",
    "parse_flow_network",
    "path_contract",
    "identify_vertices",
    "bipartite_double",
    "subdivide_edge",
    "remove_edges",
    "remove_vertex",
    "merge_degree_two",
    "underlying_undirected",
    "flow_to_graph",
    "max_flow",
    "incidence_matrix",
]


@dataclass(frozen=True)
class Edge:
    id: int
    tail: str
    head: str
    label: str | None = None

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head


def _normalize(vertices, edges, kind):
    """Validate ids and drop vertices that no edge touches."""
    edges = tuple(edges)
    seen = set()
    for e in edges:
        if not isinstance(e.id, int) or e.id < 0:
            raise GraphError(f"edge id must be a non-negative int, got {e.id!r}")
        if e.id in seen:
            raise GraphError(f"duplicate edge id {e.id}")
        seen.add(e.id)
    order = []
    known = set()
    for v in vertices:
        v = str(v)
        if v in known:
            raise GraphError(f"duplicate vertex {v!r}")
        known.add(v)
        order.append(v)
    for e in edges:
        for v in (e.tail, e.head):
            if v not in known:
                known.add(v)
                order.append(v)
    touched = {e.tail for e in edges} | {e.head for e in edges}
    kept = tuple(v for v in order if v in touched)
    dropped = tuple(v for v in order if v not in touched)
    if dropped:
        log.debug("dropping degree-0 vertices from %s: %s", kind, dropped)
    return kept, edges, dropped


class _GraphBase:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    dropped: tuple[str, ...]

    @cached_property
    def _by_id(self) -> dict[int, Edge]:
        return {e.id: e for e in self.edges}

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(e.id for e in self.edges)

    @property
    def warnings(self) -> tuple[str, ...]:
        return tuple(f"dropped degree-0 vertex {v!r}" for v in self.dropped)

    def edge(self, eid: int) -> Edge:
        try:
            return self._by_id[eid]
        except KeyError:
            raise GraphError(f"no edge with id {eid}") from None

    def has_vertex(self, v: str) -> bool:
        return v in self._vertex_set

    @cached_property
    def _vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    def require_vertex(self, v: str) -> None:
        if v not in self._vertex_set:
            raise GraphError(f"no vertex {v!r}")

    @cached_property
    def _incident(self) -> dict[str, tuple[int, ...]]:
        inc: dict[str, list[int]] = {v: [] for v in self.vertices}
        for e in self.edges:
            inc[e.tail].append(e.id)
            if e.head != e.tail:
                inc[e.head].append(e.id)
        return {v: tuple(ids) for v, ids in inc.items()}

    def incident(self, v: str) -> tuple[int, ...]:
        """Ids of edges touching ``v``; a loop is listed once."""
        self.require_vertex(v)
        return self._incident[v]

    def degree(self, v: str) -> int:
        """Degree with loops counted twice."""
        self.require_vertex(v)
        return sum(2 if self.edge(i).is_loop else 1 for i in self._incident[v])

    def loops(self) -> tuple[int, ...]:
        return tuple(e.id for e in self.edges if e.is_loop)

    def next_edge_id(self) -> int:
        return max(self.edge_ids, default=-1) + 1

    def to_dict(self) -> dict:
        return {
            "directed": self.directed,
            "vertices": list(self.vertices),
            "edges": [
                {"id": e.id, "tail": e.tail, "head": e.head, "label": e.label}
                for e in self.edges
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True, eq=False)
class DirectedGraph(_GraphBase):
    """Finite directed multigraph; loops and parallel edges are allowed."""

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    dropped: tuple[str, ...] = ()
    directed = True

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[Edge] = (),
                 dropped: Iterable[str] = ()):
        kept, edges, newly_dropped = _normalize(vertices, edges, "digraph")
        object.__setattr__(self, "vertices", kept)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "dropped", tuple(dropped) + newly_dropped)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence], labels: Sequence[str | None] | None = None
                   ) -> "DirectedGraph":
        """Build from ``(tail, head)`` pairs; edge ids follow input order."""
        edges = []
        for i, (t, h) in enumerate(pairs):
            label = labels[i] if labels is not None else None
            edges.append(Edge(i, str(t), str(h), label))
        return cls((), edges)

    @classmethod
    def from_dict(cls, doc: Mapping) -> "DirectedGraph":
        edges = [Edge(int(e["id"]), str(e["tail"]), str(e["head"]), e.get("label"))
                 for e in doc["edges"]]
        return cls(doc.get("vertices", ()), edges)

    def __eq__(self, other):
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        body = ", ".join(f"{e.id}:{e.tail}->{e.head}" for e in self.edges)
        return f"DirectedGraph([{body}])"

    @cached_property
    def _out(self) -> dict[str, tuple[int, ...]]:
        out: dict[str, list[int]] = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.tail].append(e.id)
        return {v: tuple(ids) for v, ids in out.items()}

    @cached_property
    def _in(self) -> dict[str, tuple[int, ...]]:
        inn: dict[str, list[int]] = {v: [] for v in self.vertices}
        for e in self.edges:
            inn[e.head].append(e.id)
        return {v: tuple(ids) for v, ids in inn.items()}

    def out_edges(self, v: str) -> tuple[int, ...]:
        self.require_vertex(v)
        return self._out[v]

    def in_edges(self, v: str) -> tuple[int, ...]:
        self.require_vertex(v)
        return self._in[v]

    def with_edges(self, edges: Iterable[Edge]) -> "DirectedGraph":
        return DirectedGraph(self.vertices, edges, self.dropped)


@dataclass(frozen=True, eq=False)
class UndirectedGraph(_GraphBase):
    """Finite undirected multigraph. ``tail``/``head`` are just the two ends."""

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    dropped: tuple[str, ...] = ()
    directed = False

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[Edge] = (),
                 dropped: Iterable[str] = ()):
        kept, edges, newly_dropped = _normalize(vertices, edges, "graph")
        object.__setattr__(self, "vertices", kept)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "dropped", tuple(dropped) + newly_dropped)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence]) -> "UndirectedGraph":
        return cls((), [Edge(i, str(a), str(b)) for i, (a, b) in enumerate(pairs)])

    def __eq__(self, other):
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges, "u"))

    def __repr__(self):
        body = ", ".join(f"{e.id}:{e.tail}--{e.head}" for e in self.edges)
        return f"UndirectedGraph([{body}])"

    def neighbors(self, v: str) -> list[tuple[int, str]]:
        """``(edge id, other end)`` for every edge at ``v``; loops appear once."""
        out = []
        for i in self.incident(v):
            e = self.edge(i)
            out.append((i, e.head if e.tail == v else e.tail))
        return out


@dataclass(frozen=True)
class FlowNetwork:
    vertices: tuple[str, ...]
    source: str
    sink: str
    capacity: Mapping[tuple[str, str], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        vs = set(self.vertices)
        if self.source == self.sink:
            raise GraphError("source and sink must differ")
        for v in (self.source, self.sink):
            if v not in vs:
                raise GraphError(f"no vertex {v!r} in network")
        cap = {}
        for (u, v), c in self.capacity.items():
            if u not in vs or v not in vs:
                raise GraphError(f"capacity on unknown pair {(u, v)!r}")
            c = Fraction(c)
            if c < 0:
                raise GraphError(f"negative capacity on {(u, v)!r}")
            if c and (u == v or v == self.source or u == self.sink):
                raise GraphError(f"capacity {(u, v)!r} must be 0 in a flow network")
            if c:
                cap[(u, v)] = c
        object.__setattr__(self, "capacity", cap)

    def c(self, u: str, v: str) -> Fraction:
        return self.capacity.get((u, v), Fraction(0))


@dataclass(frozen=True)
class VertexEdgeIncidenceMatrix:
    """Rows follow ``vertices``, columns follow ``edge_ids``."""

    vertices: tuple[str, ...]
    edge_ids: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def column(self, eid: int) -> tuple[int, ...]:
        j = self.edge_ids.index(eid)
        return tuple(r[j] for r in self.entries)


# ---------------------------------------------------------------- parsing

_DOT_TOKEN = re.compile(
    r'"(?:[^"\\]|\\.)*"|->|--|[{}\[\];,=]|[A-Za-z0-9_.#:+\-]+|\S'
)


def _strip_dot_comments(text: str) -> str:
    text = re.sub(r"/\*.*?\*/", lambda m: "\n" * m.group(0).count("\n"), text, flags=re.S)
    lines = []
    for line in text.split("\n"):
        line = re.sub(r"//.*$", "", line)
        if line.lstrip().startswith("#"):
            line = ""
        lines.append(line)
    return "\n".join(lines)


def _dot_tokens(text):
    for lineno, line in enumerate(_strip_dot_comments(text).split("\n"), start=1):
        for m in _DOT_TOKEN.finditer(line):
            tok = m.group(0)
            yield tok, lineno


def _unquote(tok):
    if tok.startswith('"'):
        return bytes(tok[1:-1], "utf-8").decode("unicode_escape")
    return tok


def _parse_dot(text, directed):
    toks = list(_dot_tokens(text))
    pos = 0

    def peek():
        return toks[pos][0] if pos < len(toks) else None

    def line():
        return toks[min(pos, len(toks) - 1)][1] if toks else 1

    def take(expected=None):
        nonlocal pos
        if pos >= len(toks):
            raise ParseError("unexpected end of input", line())
        tok = toks[pos][0]
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, got {tok!r}", toks[pos][1])
        pos += 1
        return tok

    if peek() == "strict":
        take()
    head = take()
    if head not in ("digraph", "graph"):
        raise ParseError(f"expected 'digraph' or 'graph', got {head!r}", line())
    is_directed = head == "digraph"
    if directed is not None and directed != is_directed:
        raise ParseError(f"'{head}' header contradicts the requested directedness", line())
    if peek() != "{":
        take()  # graph name
    take("{")
    arrow = "->" if is_directed else "--"
    wrong_arrow = "--" if is_directed else "->"
    vertices: list[str] = []
    raw_edges: list[tuple[str, str, str | None, int | None, int]] = []

    def attrs():
        out = {}
        take("[")
        while peek() != "]":
            key = _unquote(take())
            take("=")
            out[key] = _unquote(take())
            if peek() in (",", ";"):
                take()
        take("]")
        return out

    while peek() != "}":
        if peek() is None:
            raise ParseError("missing closing '}'", line())
        if peek() == ";":
            take()
            continue
        if peek() in ("subgraph", "{"):
            raise ParseError("subgraphs are not supported", line())
        stmt_line = line()
        first = _unquote(take())
        if first in ("node", "edge", "graph") and peek() == "[":
            attrs()
            continue
        if peek() == "=":
            take()
            take()
            continue
        chain = [first]
        while peek() in ("->", "--"):
            if peek() == wrong_arrow:
                raise ParseError(f"'{wrong_arrow}' inside a '{head}'", line())
            take(arrow)
            chain.append(_unquote(take()))
        a = attrs() if peek() == "[" else {}
        if len(chain) == 1:
            vertices.append(first)
        else:
            eid = a.get("id")
            if eid is not None:
                try:
                    eid = int(eid)
                except ValueError:
                    raise ParseError(f"edge id must be an integer, got {eid!r}", stmt_line) from None
            for t, h in zip(chain, chain[1:]):
                raw_edges.append((t, h, a.get("label"), eid if len(chain) == 2 else None,
                                  stmt_line))
    take("}")
    return is_directed, vertices, raw_edges


def _parse_edge_list(text):
    raw_edges = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(None, 2)
        if len(parts) < 2:
            raise ParseError(f"expected 'TAIL HEAD [LABEL]', got {line!r}", lineno)
        label = parts[2].strip() if len(parts) == 3 else None
        raw_edges.append((parts[0], parts[1], label, None, lineno))
    return raw_edges


def _assign_ids(raw_edges):
    explicit = {}
    for t, h, label, eid, lineno in raw_edges:
        if eid is not None:
            if eid in explicit:
                raise ParseError(f"duplicate edge id {eid}", lineno)
            explicit[eid] = lineno
    taken = set(explicit)
    nxt = 0
    edges = []
    for t, h, label, eid, _ in raw_edges:
        if eid is None:
            while nxt in taken:
                nxt += 1
            eid = nxt
            taken.add(eid)
        edges.append(Edge(eid, t, h, label))
    return edges


def _looks_like_dot(text):
    body = _strip_dot_comments(text).lstrip()
    return re.match(r"(strict\s+)?(di)?graph\b", body) is not None


def parse_graph(text: str, directed: bool | None = None, fmt: str | None = None):
    """Parse edge-list or DOT-subset text.

    ``fmt`` is ``"edges"``, ``"dot"`` or ``None`` to sniff. ``directed=None``
    takes directedness from a DOT header and defaults to directed for edge
    lists. Edge ids follow input order unless DOT edges carry ``id=N``.
    """
    if fmt is None:
        fmt = "dot" if _looks_like_dot(text) else "edges"
    if fmt == "dot":
        is_directed, vertices, raw = _parse_dot(text, directed)
    elif fmt == "edges":
        is_directed = True if directed is None else directed
        vertices, raw = [], _parse_edge_list(text)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    edges = _assign_ids(raw)
    cls = DirectedGraph if is_directed else UndirectedGraph
    g = cls(vertices, edges)
    for msg in g.warnings:
        log.warning(msg)
    return g


def read_graph(path: str | Path, directed: bool | None = None):
    """Read a graph file, choosing the parser by extension (``.dot``/``.edges``)."""
    path = Path(path)
    fmt = {".dot": "dot", ".gv": "dot", ".edges": "edges"}.get(path.suffix.lower())
    return parse_graph(path.read_text(encoding="utf-8"), directed=directed, fmt=fmt)


def parse_flow_network(text: str, source: str, sink: str) -> FlowNetwork:
    """Parse ``TAIL HEAD CAPACITY`` lines; capacities are exact rationals.

    Repeated pairs accumulate.
    """
    cap: dict[tuple[str, str], Fraction] = {}
    vertices: list[str] = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected 'TAIL HEAD CAPACITY', got {line!r}", lineno)
        u, v, c = parts
        try:
            c = Fraction(c)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad capacity {c!r}", lineno) from None
        for w in (u, v):
            if w not in vertices:
                vertices.append(w)
        cap[(u, v)] = cap.get((u, v), Fraction(0)) + c
    for w in (source, sink):
        if w not in vertices:
            vertices.append(w)
    return FlowNetwork(tuple(vertices), source, sink, cap)


# ------------------------------------------------------------- transforms

def _fresh_vertex(taken, base):
    name = base
    k = 1
    while name in taken:
        k += 1
        name = f"{base}{k}"
    return name


def path_contract(g: DirectedGraph, u: str, v: str) -> DirectedGraph:
    """G_{u->v}: drop edges into u and out of v, then identify u and v.

    The merged vertex is named ``f"{u}#{v}"``. If nothing is left at it, it
    ends up in ``dropped``, which means there is no directed path from u to v.
    """
    if u == v:
        raise GraphError("path_contract needs two distinct vertices")
    g.require_vertex(u)
    g.require_vertex(v)
    merged = _fresh_vertex(set(g.vertices) - {u, v}, f"{u}#{v}")

    def rename(w):
        return merged if w in (u, v) else w

    kept = [Edge(e.id, rename(e.tail), rename(e.head), e.label)
            for e in g.edges if e.head != u and e.tail != v]
    order = []
    for w in g.vertices:
        w = rename(w)
        if w not in order:
            order.append(w)
    return DirectedGraph(order, kept, g.dropped)


def identify_vertices(g, u: str, v: str):
    """Fuse u and v into ``f"{u}#{v}"``, keeping every edge."""
    if u == v:
        raise GraphError("identify_vertices needs two distinct vertices")
    g.require_vertex(u)
    g.require_vertex(v)
    merged = _fresh_vertex(set(g.vertices) - {u, v}, f"{u}#{v}")

    def rename(w):
        return merged if w in (u, v) else w

    edges = [Edge(e.id, rename(e.tail), rename(e.head), e.label) for e in g.edges]
    order = []
    for w in g.vertices:
        w = rename(w)
        if w not in order:
            order.append(w)
    return type(g)(order, edges, g.dropped)


def bipartite_double(g: DirectedGraph) -> tuple[DirectedGraph, dict[str, int]]:
    """Split every v into ``v.in`` and ``v.out`` joined by a new edge z_v.

    Original edges keep their ids and run from ``tail.out`` to ``head.in``;
    the z-edges are appended in vertex order.
    """
    def vin(w):
        return f"{w}.in"

    def vout(w):
        return f"{w}.out"

    edges = [Edge(e.id, vout(e.tail), vin(e.head), e.label) for e in g.edges]
    z = {}
    nxt = g.next_edge_id()
    order = []
    for w in g.vertices:
        z[w] = nxt
        edges.append(Edge(nxt, vin(w), vout(w), f"z[{w}]"))
        order += [vin(w), vout(w)]
        nxt += 1
    return DirectedGraph(order, edges), z


def subdivide_edge(g: DirectedGraph, x: int) -> tuple[DirectedGraph, str, int]:
    """Put a new vertex in the middle of edge ``x``.

    ``x`` keeps the tail half; the returned new edge id is the head half.
    """
    e = g.edge(x)
    mid = _fresh_vertex(set(g.vertices), f"mid{x}")
    y = g.next_edge_id()
    edges = []
    for f in g.edges:
        if f.id == x:
            edges.append(Edge(x, e.tail, mid, e.label))
        else:
            edges.append(f)
    edges.append(Edge(y, mid, e.head, None))
    return DirectedGraph(list(g.vertices) + [mid], edges, g.dropped), mid, y


def remove_edges(g, edge_ids: Iterable[int]):
    drop = set(edge_ids)
    for i in drop:
        g.edge(i)
    return type(g)(g.vertices, [e for e in g.edges if e.id not in drop], g.dropped)


def remove_vertex(g, v: str):
    g.require_vertex(v)
    edges = [e for e in g.edges if v not in (e.tail, e.head)]
    return type(g)([w for w in g.vertices if w != v], edges, g.dropped)


def merge_degree_two(g: DirectedGraph, v: str) -> tuple[DirectedGraph, int, int]:
    """Remove a vertex with one in-edge y and one distinct out-edge x.

    The two edges become one edge from tail(y) to head(x) that keeps the id
    of ``y``. Returns ``(graph, kept id y, removed id x)``.
    """
    ins, outs = g.in_edges(v), g.out_edges(v)
    if len(ins) != 1 or len(outs) != 1 or ins[0] == outs[0]:
        raise GraphError(f"vertex {v!r} is not a degree-2 pass-through vertex")
    y, x = g.edge(ins[0]), g.edge(outs[0])
    edges = []
    for e in g.edges:
        if e.id == x.id:
            continue
        if e.id == y.id:
            edges.append(Edge(y.id, y.tail, x.head, y.label))
        else:
            edges.append(e)
    return DirectedGraph([w for w in g.vertices if w != v], edges, g.dropped), y.id, x.id


def underlying_undirected(g) -> UndirectedGraph:
    if isinstance(g, UndirectedGraph):
        return g
    return UndirectedGraph(g.vertices, g.edges, g.dropped)


def as_directed(g) -> DirectedGraph:
    """Orient an undirected graph along its stored ``tail -> head`` order."""
    if isinstance(g, DirectedGraph):
        return g
    return DirectedGraph(g.vertices, g.edges, g.dropped)


def flow_to_graph(n: FlowNetwork) -> DirectedGraph:
    """G_N: ceil(c(u, v)) parallel edges from u to v."""
    edges = []
    nxt = 0
    for u in n.vertices:
        for v in n.vertices:
            k = math.ceil(n.c(u, v))
            for _ in range(k):
                edges.append(Edge(nxt, u, v, None))
                nxt += 1
    return DirectedGraph(n.vertices, edges)


def max_flow(n: FlowNetwork) -> Fraction:
    """Exact maximum flow value by shortest augmenting paths."""
    residual: dict[str, dict[str, Fraction]] = {v: {} for v in n.vertices}
    for (u, v), c in n.capacity.items():
        residual[u][v] = residual[u].get(v, Fraction(0)) + c
        residual[v].setdefault(u, Fraction(0))
    total = Fraction(0)
    while True:
        parent = {n.source: None}
        queue = deque([n.source])
        while queue and n.sink not in parent:
            u = queue.popleft()
            for v, c in residual[u].items():
                if c > 0 and v not in parent:
                    parent[v] = u
                    queue.append(v)
        if n.sink not in parent:
            return total
        path = []
        v = n.sink
        while parent[v] is not None:
            path.append((parent[v], v))
            v = parent[v]
        push = min(residual[u][v] for u, v in path)
        for u, v in path:
            residual[u][v] -= push
            residual[v][u] += push
        total += push


def incidence_matrix(g) -> VertexEdgeIncidenceMatrix:
    """+1 at the head row, -1 at the tail row; loop columns are zero."""
    row = {v: i for i, v in enumerate(g.vertices)}
    m = [[0] * len(g.edges) for _ in g.vertices]
    for j, e in enumerate(g.edges):
        if e.is_loop:
            continue
        m[row[e.head]][j] = 1
        m[row[e.tail]][j] = -1
    return VertexEdgeIncidenceMatrix(g.vertices, g.edge_ids, tuple(tuple(r) for r in m))
