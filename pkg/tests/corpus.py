"""Graph corpora shared by the test modules."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations_with_replacement, permutations

from cyclepack.graph import DirectedGraph


def labeled_graphs(max_edges: int = 4, n_vertices: int = 4):
    """Every multiset of ordered vertex pairs on ``n_vertices`` labeled
    vertices with at most ``max_edges`` elements (the empty graph included)."""
    names = [f"v{i}" for i in range(n_vertices)]
    pairs = [(a, b) for a in names for b in names]
    for k in range(max_edges + 1):
        for combo in combinations_with_replacement(pairs, k):
            yield DirectedGraph.from_pairs(combo)


def random_graph(rng: random.Random, max_edges: int, min_edges: int = 1,
                 max_vertices: int | None = None) -> DirectedGraph:
    ne = rng.randint(min_edges, max_edges)
    nv = rng.randint(1, max_vertices or ne)
    names = [f"v{i}" for i in range(nv)]
    return DirectedGraph.from_pairs([(rng.choice(names), rng.choice(names)) for _ in range(ne)])


def random_corpus(seed: int, count: int, max_edges: int, **kw) -> list[DirectedGraph]:
    rng = random.Random(seed)
    return [random_graph(rng, max_edges, **kw) for _ in range(count)]


# ------------------------------------------------ isomorphism classes

def _components(pairs):
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        parent[find(a)] = find(b)
    groups: dict = {}
    for a, b in pairs:
        groups.setdefault(find(a), []).append((a, b))
    return list(groups.values())


def _canon_connected(pairs):
    verts = sorted({v for p in pairs for v in p})
    sig = {v: (sum(a == v for a, _ in pairs), sum(b == v for _, b in pairs),
               sum(a == b == v for a, b in pairs)) for v in verts}
    # only try relabelings that list vertices by signature
    verts.sort(key=lambda v: sig[v])
    groups = []
    for v in verts:
        if groups and sig[groups[-1][0]] == sig[v]:
            groups[-1].append(v)
        else:
            groups.append([v])
    best = None

    def rec(i, order):
        nonlocal best
        if i == len(groups):
            pos = {v: k for k, v in enumerate(order)}
            form = tuple(sorted((pos[a], pos[b]) for a, b in pairs))
            if best is None or form < best:
                best = form
            return
        for perm in permutations(groups[i]):
            rec(i + 1, order + list(perm))

    rec(0, [])
    return (tuple(sig[v] for v in verts), best)


def canonical_form(pairs):
    return tuple(sorted(_canon_connected(c) for c in _components(pairs)))


def _from_form(form):
    pairs = []
    offset = 0
    for _, comp in form:
        n = 1 + max(max(p) for p in comp)
        pairs += [(f"v{a + offset}", f"v{b + offset}") for a, b in comp]
        offset += n
    return pairs


@lru_cache(maxsize=None)
def _iso_classes(max_edges: int) -> tuple[DirectedGraph, ...]:
    """One representative per isomorphism class of directed multigraphs
    (loops allowed, no isolated vertices) with 1..max_edges edges."""
    level = {()}
    out = []
    for _ in range(max_edges):
        nxt = set()
        for form in level:
            pairs = _from_form(form)
            verts = sorted({v for p in pairs for v in p}, key=lambda s: int(s[1:]))
            fresh = [f"v{len(verts)}", f"v{len(verts) + 1}"]
            pool = verts + fresh
            for a in pool:
                for b in pool:
                    if a == fresh[1] or (b == fresh[1] and a != fresh[0]):
                        continue
                    nxt.add(canonical_form(pairs + [(a, b)]))
        level = nxt
        out += [DirectedGraph.from_pairs(_from_form(f)) for f in sorted(level)]
    return tuple(out)


def isomorphism_classes(max_edges: int) -> list[DirectedGraph]:
    return list(_iso_classes(max_edges))


def planar_suite() -> list[tuple[str, DirectedGraph]]:
    """Curated planar digraphs: grids, wheels, nested cycles, and friends."""
    out = []

    def add(name, pairs):
        out.append((name, DirectedGraph.from_pairs(pairs)))

    def grid(r, c, style):
        pairs = []
        for i in range(r):
            for j in range(c):
                v = f"{i},{j}"
                if j + 1 < c:
                    right = f"{i},{j + 1}"
                    pairs.append((v, right) if (style == "snake" and i % 2 == 0) or style == "both"
                                 else (right, v))
                    if style == "both":
                        pairs.append((right, v))
                if i + 1 < r:
                    down = f"{i + 1},{j}"
                    if style == "snake":
                        pairs.append((v, down) if j % 2 == 0 else (down, v))
                    else:
                        pairs.append((v, down))
                        pairs.append((down, v))
        return pairs

    def wheel(n, spokes_out=True, rim_both=False):
        pairs = []
        for i in range(n):
            a, b = f"r{i}", f"r{(i + 1) % n}"
            pairs.append((a, b))
            if rim_both:
                pairs.append((b, a))
            pairs.append(("hub", a) if (spokes_out == (i % 2 == 0)) else (a, "hub"))
        return pairs

    def nested(k, size, alternate):
        pairs = []
        for level in range(k):
            ring = [f"L{level}.{i}" for i in range(size)]
            forward = not alternate or level % 2 == 0
            for i in range(size):
                a, b = ring[i], ring[(i + 1) % size]
                pairs.append((a, b) if forward else (b, a))
            if level:
                pairs.append((f"L{level - 1}.0", ring[0]))
                pairs.append((ring[size // 2], f"L{level - 1}.{size // 2}"))
        return pairs

    for r, c in [(2, 2), (2, 3), (3, 3), (2, 4), (3, 4), (4, 4)]:
        add(f"grid-snake-{r}x{c}", grid(r, c, "snake"))
    for r, c in [(2, 2), (2, 3), (3, 3)]:
        add(f"grid-bidirected-{r}x{c}", grid(r, c, "both"))
    for n in (3, 4, 5, 6):
        add(f"wheel-{n}", wheel(n))
    for n in (3, 4, 5):
        add(f"wheel-bidirected-rim-{n}", wheel(n, rim_both=True))
    for k, size in [(2, 3), (3, 3), (2, 4), (3, 4)]:
        add(f"nested-{k}x{size}", nested(k, size, alternate=False))
        add(f"nested-alternating-{k}x{size}", nested(k, size, alternate=True))
    add("theta", [("u", "v"), ("u", "v"), ("v", "u")])
    add("two-loops", [("v", "v"), ("v", "v")])
    add("bidirected-path-4", [("a", "b"), ("b", "a"), ("b", "c"), ("c", "b"), ("c", "d"), ("d", "c")])
    add("complete-bidirected-4", [(a, b) for a in "abcd" for b in "abcd" if a != b])
    return out
