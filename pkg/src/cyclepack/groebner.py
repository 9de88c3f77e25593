"""Buchberger's algorithm over Q and what it computes for us.

Internally a polynomial is a dict mapping dense exponent tuples to Fractions,
with positions given by the ring's variable list. The public API speaks
``Polynomial`` from ``poly`` and converts at the boundary.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import GuardExceeded
from .poly import GeneratorFamily, Polynomial

log = logging.getLogger(__name__)

DEFAULT_SPAIR_BUDGET = 200_000

__all__ = [
    "MonomialOrder",
    "GroebnerBasis",
    "DimensionReport",
    "buchberger",
    "normal_form",
    "krull_dimension",
    "hilbert_degree",
    "eliminate",
    "radical_membership",
    "ideal_equality",
    "ideal_contains",
]


# ------------------------------------------------------------- orderings

@dataclass(frozen=True)
class MonomialOrder:
    """``grevlex``, ``lex``, or ``block`` with the ``first`` variables
    eliminated first (grevlex inside each block)."""

    kind: str = "grevlex"
    first: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        object.__setattr__(self, "first", tuple(sorted(set(self.first))))

    @classmethod
    def block(cls, first: Iterable[int]) -> "MonomialOrder":
        return cls("block", tuple(first))

    def key_function(self, variables: Sequence[int]):
        """Sort key on exponent tuples: a larger key is a larger monomial."""
        n = len(variables)
        if self.kind == "lex":
            return lambda e: e
        if self.kind == "grevlex":
            rev = tuple(range(n - 1, -1, -1))
            return lambda e: (sum(e), tuple(-e[i] for i in rev))
        first = set(self.first)
        a = [i for i, v in enumerate(variables) if v in first]
        b = [i for i, v in enumerate(variables) if v not in first]
        ra, rb = a[::-1], b[::-1]
        return lambda e: (sum(e[i] for i in a), tuple(-e[i] for i in ra),
                          sum(e[i] for i in b), tuple(-e[i] for i in rb))

    def describe(self) -> str:
        if self.kind == "block":
            return "block(" + ",".join(f"x{v}" for v in self.first) + ")"
        return self.kind


GREVLEX = MonomialOrder()


# -------------------------------------------------------------- dense ops

def _to_dense(p: Polynomial, pos: dict[int, int], n: int) -> dict:
    out = {}
    for m, c in p.items():
        e = [0] * n
        for v, k in m:
            try:
                e[pos[v]] = k
            except KeyError:
                raise ValueError(f"variable x{v} is outside the ring") from None
        out[tuple(e)] = c
    return out


def _to_poly(d: dict, variables: Sequence[int]) -> Polynomial:
    return Polynomial({tuple((variables[i], k) for i, k in enumerate(e) if k): c
                       for e, c in d.items()})


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub_exp(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


class _Ring:
    def __init__(self, variables: Sequence[int], order: MonomialOrder):
        self.variables = tuple(variables)
        self.n = len(self.variables)
        self.pos = {v: i for i, v in enumerate(self.variables)}
        self.order = order
        self.key = order.key_function(self.variables)

    def lead(self, p: dict):
        return max(p, key=self.key)

    def monic(self, p: dict) -> dict:
        lm = self.lead(p)
        c = p[lm]
        if c == 1:
            return p
        return {e: k / c for e, k in p.items()}

    def reduce(self, f: dict, basis: list[tuple[tuple, dict]], full: bool = True) -> dict:
        """Division remainder of f by monic ``basis`` entries (lm, poly)."""
        p = dict(f)
        rem = {}
        key = self.key
        while p:
            lm = max(p, key=key)
            c = p[lm]
            for glm, g in basis:
                if _divides(glm, lm):
                    shift = _sub_exp(lm, glm)
                    for e, k in g.items():
                        t = _add_exp(e, shift)
                        s = p.get(t, 0) - c * k
                        if s:
                            p[t] = s
                        else:
                            p.pop(t, None)
                    break
            else:
                if not full:
                    rem.update(p)
                    return rem
                rem[lm] = c
                del p[lm]
        return rem


# ----------------------------------------------------------------- basis

@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced, monic Groebner basis sorted by leading monomial (largest first)."""

    generators: tuple[Polynomial, ...]
    variables: tuple[int, ...]
    order: MonomialOrder = GREVLEX
    leading: tuple[tuple[int, ...], ...] = field(default=(), compare=False)
    spairs: int = field(default=0, compare=False)

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0] == Polynomial.one()

    def leading_monomials(self) -> list[dict[int, int]]:
        return [{self.variables[i]: k for i, k in enumerate(e) if k} for e in self.leading]

    def printed(self) -> list[str]:
        return [str(g) for g in self.generators]

    def _dense(self):
        ring = _Ring(self.variables, self.order)
        return ring, [(lm, _to_dense(g, ring.pos, ring.n))
                      for lm, g in zip(self.leading, self.generators)]


def _gens_list(gens) -> list[Polynomial]:
    if isinstance(gens, GeneratorFamily):
        return gens.nonzero()
    return [g for g in gens if g]


def _ring_vars(gens, variables):
    if variables is not None:
        return tuple(sorted(set(variables)))
    if isinstance(gens, GeneratorFamily):
        return tuple(sorted(gens.variables))
    vs: set[int] = set()
    for g in gens:
        vs |= g.variables()
    return tuple(sorted(vs))


def buchberger(gens, order: MonomialOrder = GREVLEX, variables: Iterable[int] | None = None,
               spair_budget: int = DEFAULT_SPAIR_BUDGET) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    ``gens`` is a GeneratorFamily or a sequence of Polynomials. The ring's
    variables default to the family's declared variables (or those that
    occur). S-pairs are taken smallest lcm first with ties broken by
    generator indices; the product and chain criteria drop useless pairs.
    """
    variables = _ring_vars(gens, variables)
    ring = _Ring(variables, order)
    polys = [_to_dense(g, ring.pos, ring.n) for g in _gens_list(gens)]
    # deterministic start: sort inputs, then reduce each against the previous
    polys.sort(key=lambda p: sorted(((ring.key(e), c) for e, c in p.items()), reverse=True))
    G: list[tuple[tuple, dict]] = []
    pairs: set[tuple[int, int]] = set()
    count = 0

    def add(h):
        h = ring.monic(h)
        lm = ring.lead(h)
        G.append((lm, h))
        j = len(G) - 1
        for i in range(j):
            pairs.add((i, j))

    for p in polys:
        h = ring.reduce(p, [g for g in G])
        if h:
            add(h)
    key = ring.key
    while pairs:
        pair = min(pairs, key=lambda ij: (key(_lcm(G[ij[0]][0], G[ij[1]][0])), ij))
        pairs.discard(pair)
        i, j = pair
        lmi, fi = G[i]
        lmj, fj = G[j]
        lcm = _lcm(lmi, lmj)
        if all(a == 0 or b == 0 for a, b in zip(lmi, lmj)):
            continue  # coprime leading terms
        if any(k != i and k != j and _divides(G[k][0], lcm)
               and (min(i, k), max(i, k)) not in pairs
               and (min(j, k), max(j, k)) not in pairs
               for k in range(len(G))):
            continue  # chain criterion
        count += 1
        if count > spair_budget:
            raise GuardExceeded("S-pair budget", spair_budget)
        si, sj = _sub_exp(lcm, lmi), _sub_exp(lcm, lmj)
        s: dict = {}
        for e, c in fi.items():
            t = _add_exp(e, si)
            s[t] = s.get(t, 0) + c
        for e, c in fj.items():
            t = _add_exp(e, sj)
            v = s.get(t, 0) - c
            if v:
                s[t] = v
            else:
                s.pop(t, None)
        h = ring.reduce(s, G)
        if h:
            add(h)
    return _reduced(ring, G, count)


def _reduced(ring: _Ring, G, count) -> GroebnerBasis:
    # drop redundant leading terms, then inter-reduce
    lms = [lm for lm, _ in G]
    keep = []
    for idx, (lm, g) in enumerate(G):
        redundant = False
        for jdx, other in enumerate(lms):
            if jdx == idx or not _divides(other, lm):
                continue
            if other != lm or jdx < idx:
                redundant = True
                break
        if not redundant:
            keep.append((lm, g))
    out = []
    for idx, (lm, g) in enumerate(keep):
        others = [h for k, h in enumerate(keep) if k != idx]
        tail = {e: c for e, c in g.items() if e != lm}
        red = ring.reduce(tail, others) if tail else {}
        red[lm] = Fraction(1)
        out.append((lm, red))
    out.sort(key=lambda t: ring.key(t[0]), reverse=True)
    return GroebnerBasis(
        generators=tuple(_to_poly(g, ring.variables) for _, g in out),
        variables=ring.variables,
        order=ring.order,
        leading=tuple(lm for lm, _ in out),
        spairs=count,
    )


def normal_form(f: Polynomial, basis: GroebnerBasis) -> Polynomial:
    """Remainder of f on division by the basis; zero iff f is in the ideal."""
    ring, dense = basis._dense()
    return _to_poly(ring.reduce(_to_dense(f, ring.pos, ring.n), dense), ring.variables)


def ideal_contains(basis: GroebnerBasis, f: Polynomial) -> bool:
    return normal_form(f, basis).is_zero()


# ------------------------------------------------------ dimension, degree

@dataclass(frozen=True)
class DimensionReport:
    """Krull dimension of Q[vars]/I with an independent-set witness.

    ``empty`` marks the zero ring (1 in I); then ``krull_dimension`` is -1
    and ``scheme_degree`` is None. The Hilbert numerator N(t) is given by
    its integer coefficients, lowest degree first, for the series
    N(t) / (1 - t)^len(variables).
    """

    krull_dimension: int
    witness: tuple[int, ...]
    hilbert_numerator: tuple[int, ...]
    scheme_degree: int | None
    empty: bool = False

    @property
    def projective_dimension(self) -> int:
        return -1 if self.empty else self.krull_dimension - 1


def _poly_add(a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return out


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    while out and out[-1] == 0:
        out.pop()
    return out


def _minimalize(gens):
    gens = sorted(set(gens), key=lambda e: (sum(e), e))
    out = []
    for g in gens:
        if not any(_divides(h, g) for h in out):
            out.append(g)
    return out


def _hilbert_numerator(gens: list[tuple]) -> list[int]:
    """N(t) for a monomial ideal given by exponent tuples."""
    gens = _minimalize(gens)
    if not gens:
        return [1]
    if any(sum(g) == 0 for g in gens):
        return []
    # pairwise coprime generators: product of (1 - t^deg)
    support = [frozenset(i for i, k in enumerate(g) if k) for g in gens]
    seen: set[int] = set()
    coprime = True
    for s in support:
        if seen & s:
            coprime = False
            break
        seen |= s
    if coprime:
        out = [1]
        for g in gens:
            d = sum(g)
            out = _poly_mul(out, [1] + [0] * (d - 1) + [-1])
        return out
    # pivot on the variable in the most generators
    counts: dict[int, int] = {}
    for s in support:
        for i in s:
            counts[i] = counts.get(i, 0) + 1
    x = max(counts, key=lambda i: (counts[i], -i))
    n = len(gens[0])
    unit = tuple(int(i == x) for i in range(n))
    plus = gens + [unit]
    colon = [tuple(k - 1 if i == x and k else k for i, k in enumerate(g)) for g in gens]
    return _poly_add(_hilbert_numerator(plus), _poly_mul([0, 1], _hilbert_numerator(colon)))


def _max_independent_set(lms: list[tuple], n: int) -> tuple[int, ...]:
    """Largest set of positions containing the support of no leading monomial."""
    supports = sorted({frozenset(i for i, k in enumerate(m) if k) for m in lms}, key=len)
    best: list[frozenset] = [frozenset()]

    def ok(s):
        return not any(sup <= s for sup in supports)

    # complement view: remove a small hitting set of the supports
    def rec(removed: frozenset, idx_hint: int):
        if n - len(removed) <= len(best[0]):
            return
        bad = next((sup for sup in supports if not sup & removed), None)
        if bad is None:
            best[0] = frozenset(range(n)) - removed
            return
        for i in sorted(bad):
            rec(removed | {i}, i)

    rec(frozenset(), 0)
    s = best[0]
    assert ok(s)
    return tuple(sorted(s))


def krull_dimension(basis: GroebnerBasis) -> DimensionReport:
    """Dimension data of Q[vars]/I read off the leading-term ideal."""
    n = len(basis.variables)
    if basis.is_unit:
        return DimensionReport(-1, (), (), None, empty=True)
    lms = list(basis.leading)
    pos = _max_independent_set(lms, n) if lms else tuple(range(n))
    num = _hilbert_numerator(lms) if lms else [1]
    # strip (1 - t) factors to find the pole order at t = 1
    q = list(num)
    k = 0
    while q and sum(q) == 0:
        # divide by (1 - t): coefficients of the quotient are partial sums
        acc, out = 0, []
        for c in q[:-1]:
            acc += c
            out.append(acc)
        q = out
        k += 1
    dim = n - k
    if dim != len(pos):
        raise AssertionError(f"Hilbert series dimension {dim} != independent set size {len(pos)}")
    return DimensionReport(
        krull_dimension=dim,
        witness=tuple(basis.variables[i] for i in pos),
        hilbert_numerator=tuple(num),
        scheme_degree=sum(q),
    )


def hilbert_degree(basis: GroebnerBasis) -> int:
    """Degree of the scheme cut out by a homogeneous ideal."""
    rep = krull_dimension(basis)
    if rep.empty:
        raise ValueError("the quotient ring is zero; it has no degree")
    return rep.scheme_degree


# ------------------------------------------------ elimination and friends

def eliminate(gens, keep: Iterable[int], variables: Iterable[int] | None = None,
              spair_budget: int = DEFAULT_SPAIR_BUDGET) -> GroebnerBasis:
    """Basis of I ∩ Q[keep], as a basis over the ring Q[keep]."""
    variables = _ring_vars(gens, variables)
    keep = tuple(sorted(set(keep)))
    missing = set(keep) - set(variables)
    if missing:
        raise ValueError(f"keep variables not in the ring: {sorted(missing)}")
    drop = [v for v in variables if v not in set(keep)]
    gb = buchberger(gens, MonomialOrder.block(drop), variables, spair_budget)
    kept = set(keep)
    sub = [g for g in gb.generators if g.variables() <= kept]
    # the block order restricts to grevlex on Q[keep]; re-reduce there for a
    # canonical reduced basis in the smaller ring
    return buchberger(sub, GREVLEX, keep, spair_budget)


def radical_membership(x: int, gens, variables: Iterable[int] | None = None,
                       spair_budget: int = DEFAULT_SPAIR_BUDGET) -> bool:
    """Whether some power of the variable x lies in the ideal (Rabinowitsch)."""
    variables = _ring_vars(gens, variables)
    if x not in variables:
        raise ValueError(f"x{x} is not a ring variable")
    t = max(variables) + 1
    polys = _gens_list(gens) + [Polynomial.one() - Polynomial.var(t) * Polynomial.var(x)]
    gb = buchberger(polys, MonomialOrder.block([t]), tuple(variables) + (t,), spair_budget)
    return gb.is_unit


def ideal_equality(gens1, gens2, order: MonomialOrder = GREVLEX,
                   variables: Iterable[int] | None = None,
                   spair_budget: int = DEFAULT_SPAIR_BUDGET) -> bool:
    """Whether two generating sets give the same ideal (mutual normal forms)."""
    if variables is None:
        variables = set(_ring_vars(gens1, None)) | set(_ring_vars(gens2, None))
    variables = tuple(sorted(variables))
    b1 = buchberger(gens1, order, variables, spair_budget)
    b2 = buchberger(gens2, order, variables, spair_budget)
    return (all(ideal_contains(b1, g) for g in _gens_list(gens2))
            and all(ideal_contains(b2, g) for g in _gens_list(gens1)))
