"""Brute-force reference answers for tests.

Nothing here calls the cycle search in ``cycles`` or the Groebner code in
``groebner``. The methods are deliberately naive: scan every edge subset,
every family of cycles, or solve a linear system for ideal membership.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Iterable

from .errors import GuardExceeded
from .poly import Polynomial

__all__ = [
    "OracleReport",
    "oracle_cycles",
    "oracle_spectrum",
    "oracle_local_packing",
    "oracle_feedback",
    "oracle_ideal_membership",
    "oracle_undirected_cycles",
    "oracle_edge_on_undirected_cycle",
    "oracle_undirected_numbers",
    "oracle_report",
]

MAX_EDGES = 16
MAX_CYCLES = 20


@dataclass(frozen=True)
class OracleReport:
    quantity: str
    value: object
    method: str


def _edge_table(g):
    return {e.id: (e.tail, e.head) for e in g.edges}


def _subset_is_cycle(table, subset) -> tuple[int, ...] | None:
    """Traversal order of ``subset`` if it forms one simple directed cycle."""
    outs: dict[str, list[int]] = {}
    ins: Counter = Counter()
    for i in subset:
        t, h = table[i]
        outs.setdefault(t, []).append(i)
        ins[h] += 1
    verts = set(outs) | set(ins)
    if any(len(outs.get(v, ())) != 1 or ins[v] != 1 for v in verts):
        return None
    start = min(subset)
    walk = [start]
    v = table[start][1]
    while True:
        nxt = outs[v][0]
        if nxt == start:
            break
        walk.append(nxt)
        v = table[nxt][1]
    return tuple(walk) if len(walk) == len(subset) else None


def oracle_cycles(g) -> list[tuple[int, ...]]:
    """Every simple directed cycle, as edge ids from the smallest id, sorted."""
    if len(g.edges) > MAX_EDGES:
        raise GuardExceeded("oracle edge count", MAX_EDGES)
    table = _edge_table(g)
    ids = sorted(table)
    out = []
    for r in range(1, len(ids) + 1):
        for sub in combinations(ids, r):
            walk = _subset_is_cycle(table, sub)
            if walk is not None:
                out.append(walk)
    return sorted(out)


def _cycle_items(g, cyc, mode):
    table = _edge_table(g)
    if mode == "edge":
        return frozenset(cyc)
    return frozenset(table[i][0] for i in cyc)


def _families(items):
    """All pairwise disjoint families, as index tuples (includes the empty one)."""
    n = len(items)
    out = []

    def rec(i, chosen, used):
        if i == n:
            out.append(tuple(chosen))
            return
        rec(i + 1, chosen, used)
        if not items[i] & used:
            chosen.append(i)
            rec(i + 1, chosen, used | items[i])
            chosen.pop()

    rec(0, [], frozenset())
    return out


def oracle_spectrum(g, mode: str = "edge") -> tuple[int, dict[int, int]]:
    """(alpha, {n: gamma_n}) by scanning every disjoint family of cycles."""
    cycles = oracle_cycles(g)
    if len(cycles) > MAX_CYCLES:
        raise GuardExceeded("oracle cycle count", MAX_CYCLES)
    items = [_cycle_items(g, c, mode) for c in cycles]
    alpha = 0
    gamma: Counter = Counter()
    for fam in _families(items):
        alpha = max(alpha, len(fam))
        used = frozenset().union(*(items[i] for i in fam)) if fam else frozenset()
        if all(items[j] & used for j in range(len(items)) if j not in fam) and fam:
            gamma[len(fam)] += 1
    return alpha, dict(sorted(gamma.items()))


def oracle_local_packing(g, scope_edges: Iterable[int]) -> int:
    """Most edge-disjoint cycles that each use an edge of ``scope_edges``."""
    scope = set(scope_edges)
    cycles = [c for c in oracle_cycles(g) if scope & set(c)]
    items = [frozenset(c) for c in cycles]
    return max(len(f) for f in _families(items))


def _has_cycle_through(table, removed, scope):
    """Is there a cycle (through an edge of ``scope``, or any if None)?"""
    live = {i: te for i, te in table.items() if i not in removed}
    adj: dict[str, list[str]] = {}
    for t, h in live.values():
        adj.setdefault(t, []).append(h)

    def reaches(src, dst):
        seen = {src}
        stack = [src]
        while stack:
            v = stack.pop()
            if v == dst:
                return True
            for w in adj.get(v, ()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return False

    for i, (t, h) in live.items():
        if scope is not None and i not in scope:
            continue
        if reaches(h, t):
            return True
    return False


def oracle_feedback(g, vertex: str | None = None, edges: Iterable[int] | None = None) -> int:
    """beta, beta_v or beta_E by trying removal sets in order of size."""
    table = _edge_table(g)
    if len(table) > MAX_EDGES:
        raise GuardExceeded("oracle edge count", MAX_EDGES)
    if vertex is not None:
        scope = {i for i, (t, h) in table.items() if vertex in (t, h)}
    elif edges is not None:
        scope = set(edges)
    else:
        scope = None
    allowed = sorted(table) if scope is None else sorted(scope)
    for r in range(len(allowed) + 1):
        for sub in combinations(allowed, r):
            if not _has_cycle_through(table, set(sub), scope):
                return r
    raise AssertionError("removing every allowed edge must break all cycles")


# ------------------------------------------------------------- undirected

def oracle_undirected_cycles(g) -> list[frozenset[int]]:
    """Edge subsets forming one undirected cycle: connected, every vertex of
    even degree 2 (a loop adds 2)."""
    table = _edge_table(g)
    if len(table) > MAX_EDGES:
        raise GuardExceeded("oracle edge count", MAX_EDGES)
    ids = sorted(table)
    out = []
    for r in range(1, len(ids) + 1):
        for sub in combinations(ids, r):
            deg: Counter = Counter()
            for i in sub:
                a, b = table[i]
                deg[a] += 1
                deg[b] += 1
            if any(d != 2 for d in deg.values()):
                continue
            # connected?
            verts = list(deg)
            comp = {verts[0]}
            changed = True
            while changed:
                changed = False
                for i in sub:
                    a, b = table[i]
                    if (a in comp) != (b in comp):
                        comp |= {a, b}
                        changed = True
            if len(comp) == len(verts):
                out.append(frozenset(sub))
    return out


def oracle_edge_on_undirected_cycle(g, x: int) -> bool:
    """A loop is a cycle; otherwise x lies on a cycle iff its ends stay
    connected once x is removed."""
    table = _edge_table(g)
    a, b = table[x]
    if a == b:
        return True
    adj: dict[str, list[str]] = {}
    for i, (t, h) in table.items():
        if i == x:
            continue
        adj.setdefault(t, []).append(h)
        adj.setdefault(h, []).append(t)
    seen = {a}
    stack = [a]
    while stack:
        v = stack.pop()
        for w in adj.get(v, ()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return b in seen


def oracle_undirected_numbers(g, vertex: str | None = None) -> tuple[int, int]:
    """(alpha_und, beta_und), optionally restricted to cycles / edges at ``vertex``."""
    table = _edge_table(g)
    cycles = oracle_undirected_cycles(g)
    allowed = sorted(table)
    if vertex is not None:
        at = {i for i, (t, h) in table.items() if vertex in (t, h)}
        cycles = [c for c in cycles if c & at]
        allowed = sorted(at)
    alpha = max(len(f) for f in _families(cycles))
    for r in range(len(allowed) + 1):
        for sub in combinations(allowed, r):
            s = set(sub)
            if all(c & s for c in cycles):
                return alpha, r
    raise AssertionError("unreachable")


# ------------------------------------------------------- ideal membership

def _monomials_up_to(variables, degree):
    out = []
    for d in range(degree + 1):
        for combo in combinations_with_replacement(variables, d):
            c = Counter(combo)
            out.append(tuple(sorted(c.items())))
    return out


def _solve_consistent(rows: list[list[Fraction]], rhs: list[Fraction]) -> bool:
    """Whether A z = b has a solution, by Gauss-Jordan elimination over Q."""
    m = [r + [b] for r, b in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return all(row[-1] == 0 for row in m[r:])


def oracle_ideal_membership(f: Polynomial, gens: Iterable[Polynomial], degree_cap: int) -> bool:
    """Is f = sum q_i g_i with deg q_i <= degree_cap - deg g_i?

    A False answer only means no certificate exists within the cap.
    """
    gens = [g for g in gens if not g.is_zero()]
    if f.is_zero():
        return True
    variables = sorted(set().union(f.variables(), *(g.variables() for g in gens)))
    columns = []  # each column is the product m * g_i as a term dict
    for g in gens:
        room = degree_cap - g.degree()
        if room < 0:
            continue
        for m in _monomials_up_to(variables, room):
            columns.append((Polynomial({m: 1}) * g).terms)
    monos = sorted(set(f.terms).union(*(c.keys() for c in columns)))
    if not columns:
        return False
    rows = [[Fraction(col.get(mono, 0)) for col in columns] for mono in monos]
    rhs = [Fraction(f.terms.get(mono, 0)) for mono in monos]
    return _solve_consistent(rows, rhs)


def oracle_report(quantity: str, g, **kw) -> OracleReport:
    """Named access for reports: ``cycles``, ``alpha``, ``spectrum``, ``beta``."""
    if quantity == "cycles":
        return OracleReport(quantity, oracle_cycles(g), "scan all edge subsets")
    if quantity in ("alpha", "spectrum"):
        a, s = oracle_spectrum(g, kw.get("mode", "edge"))
        return OracleReport(quantity, a if quantity == "alpha" else s,
                            "scan all disjoint families of oracle cycles")
    if quantity == "beta":
        return OracleReport(quantity, oracle_feedback(g, **kw), "removal sets by size")
    raise ValueError(f"unknown oracle quantity {quantity!r}")
