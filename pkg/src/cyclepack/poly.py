"""Sparse multivariate polynomials over Q and the graph generator families.

Variables are non-negative integers. For graph ideals the variable of an edge
is its edge id, printed as ``x{id}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Monomial",
    "Polynomial",
    "GeneratorFamily",
    "Provenance",
    "elementary_symmetric",
    "incidence_relations",
    "strong_relations",
    "undirected_relations",
]

# A monomial is a tuple of (variable, exponent) pairs sorted by variable with
# every exponent positive. The empty tuple is the constant monomial 1.
Monomial = tuple


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = dict(a)
    for v, e in b:
        out[v] = out.get(v, 0) + e
    return tuple(sorted(out.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _mono_str(m: Monomial) -> str:
    parts = []
    for v, e in m:
        parts.append(f"x{v}" if e == 1 else f"x{v}^{e}")
    return "*".join(parts)


def _print_key(m: Monomial):
    # Higher degree first; ties broken lexicographically with x0 > x1 > ...
    return (-mono_degree(m), tuple((v, -e) for v, e in m))


class Polynomial:
    """Immutable polynomial: a map from monomials to nonzero Fractions."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c:
                    m = tuple(sorted((int(v), int(e)) for v, e in m if e))
                    clean[m] = clean.get(m, Fraction(0)) + c
                    if not clean[m]:
                        del clean[m]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Polynomial":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def var(cls, v: int) -> "Polynomial":
        return cls._raw({((v, 1),): Fraction(1)})

    @classmethod
    def const(cls, c) -> "Polynomial":
        c = Fraction(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw({})

    @classmethod
    def one(cls) -> "Polynomial":
        return cls._raw({(): Fraction(1)})

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def variables(self) -> set[int]:
        return {v for m in self._terms for v, _ in m}

    def degree(self) -> int:
        return max((mono_degree(m) for m in self._terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {mono_degree(m) for m in self._terms}
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return degree is None or degs == {degree}

    # -- arithmetic
    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = Polynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero()
        return Polynomial._raw({m: k * c for m, k in self._terms.items()})

    def substitute(self, mapping: Mapping[int, object]) -> "Polynomial":
        """Replace each variable in ``mapping`` by a polynomial or number."""
        subs = {v: _coerce(p) for v, p in mapping.items()}
        out = Polynomial.zero()
        for m, c in self._terms.items():
            term = Polynomial.const(c)
            rest = []
            for v, e in m:
                if v in subs:
                    term = term * subs[v] ** e
                else:
                    rest.append((v, e))
            if rest:
                term = term * Polynomial._raw({tuple(rest): Fraction(1)})
            out = out + term
        return out

    def evaluate(self, point: Mapping[int, object]) -> Fraction:
        """Evaluate at a point given as variable -> rational; all variables needed."""
        total = Fraction(0)
        for m, c in self._terms.items():
            val = c
            for v, e in m:
                try:
                    val *= Fraction(point[v]) ** e
                except KeyError:
                    raise KeyError(f"no value for x{v}") from None
            total += val
        return total

    def content_normalized(self) -> "Polynomial":
        """Scale so the leading printed coefficient is 1."""
        if not self._terms:
            return self
        lead = min(self._terms, key=_print_key)
        return self.scale(1 / self._terms[lead])

    # -- comparison / printing
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: _print_key(t[0]))

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not m:
                body = str(a)
            elif a == 1:
                body = _mono_str(m)
            else:
                body = f"{a}*{_mono_str(m)}"
            if i == 0:
                out.append(("-" if sign == "-" else "") + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self):
        return f"Polynomial({self})"


def _coerce(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


def elementary_symmetric(l: int, vars: Sequence[int]) -> Polynomial:
    """e_l over a multiset of variables (repeats allowed)."""
    if l < 0:
        raise ValueError("l must be non-negative")
    if l == 0:
        return Polynomial.one()
    if l > len(vars):
        return Polynomial.zero()
    terms: dict = {}
    for combo in combinations(vars, l):
        m: dict[int, int] = {}
        for v in combo:
            m[v] = m.get(v, 0) + 1
        key = tuple(sorted(m.items()))
        terms[key] = terms.get(key, 0) + 1
    return Polynomial._raw({k: Fraction(c) for k, c in terms.items()})


@dataclass(frozen=True)
class Provenance:
    vertex: str
    degree: int
    kind: str  # "delta", "e1-diff", "out", "in", "omega"


@dataclass(frozen=True)
class GeneratorFamily:
    """Relations with per-relation provenance over a declared variable set.

    Zero relations are kept so the family mirrors the full multiset;
    ``nonzero()`` is what ideal constructions use.
    """

    relations: tuple[Polynomial, ...]
    provenance: tuple[Provenance, ...]
    variables: tuple[int, ...]

    def __post_init__(self):
        if len(self.relations) != len(self.provenance):
            raise ValueError("relations and provenance differ in length")
        for p, prov in zip(self.relations, self.provenance):
            if not p.is_homogeneous(prov.degree):
                raise ValueError(f"relation {p} is not homogeneous of degree {prov.degree}")

    def nonzero(self) -> list[Polynomial]:
        return [p for p in self.relations if p]

    def __len__(self):
        return len(self.relations)

    def __iter__(self):
        return iter(self.relations)

    def at_vertex(self, v: str) -> list[Polynomial]:
        return [p for p, prov in zip(self.relations, self.provenance) if prov.vertex == v]


def _family(rows: Iterable[tuple[Polynomial, Provenance]], variables) -> GeneratorFamily:
    rows = list(rows)
    return GeneratorFamily(tuple(r for r, _ in rows), tuple(p for _, p in rows),
                           tuple(sorted(variables)))


def incidence_relations(g, strip_loops: bool = False) -> GeneratorFamily:
    """delta_{v,l} = e_l(out-edges) - e_l(in-edges), 1 <= l <= max(out, in).

    With ``strip_loops`` the loop variables are left out of both sides, and
    k_v shrinks accordingly.
    """
    rows = []
    loops = set(g.loops()) if strip_loops else set()
    for v in g.vertices:
        outs = [i for i in g.out_edges(v) if i not in loops]
        ins = [i for i in g.in_edges(v) if i not in loops]
        for l in range(1, max(len(outs), len(ins)) + 1):
            rel = elementary_symmetric(l, outs) - elementary_symmetric(l, ins)
            rows.append((rel, Provenance(v, l, "delta")))
    return _family(rows, g.edge_ids)


def strong_relations(g) -> GeneratorFamily:
    """e_1(out) - e_1(in), then e_l(out) for l >= 2 and e_l(in) for l >= 2."""
    rows = []
    for v in g.vertices:
        outs, ins = list(g.out_edges(v)), list(g.in_edges(v))
        rows.append((elementary_symmetric(1, outs) - elementary_symmetric(1, ins),
                     Provenance(v, 1, "e1-diff")))
        for l in range(2, len(outs) + 1):
            rows.append((elementary_symmetric(l, outs), Provenance(v, l, "out")))
        for l in range(2, len(ins) + 1):
            rows.append((elementary_symmetric(l, ins), Provenance(v, l, "in")))
    return _family(rows, g.edge_ids)


def undirected_relations(g) -> GeneratorFamily:
    """e_l over E(v) with each loop listed twice, 1 <= l <= deg v."""
    rows = []
    for v in g.vertices:
        ev = []
        for i in g.incident(v):
            ev.append(i)
            if g.edge(i).is_loop:
                ev.append(i)
        for l in range(1, len(ev) + 1):
            rows.append((elementary_symmetric(l, ev), Provenance(v, l, "omega")))
    return _family(rows, g.edge_ids)
