"""Exact linear algebra over Z (Smith and Hermite forms) and over GF(2).

Integer matrices are plain lists of lists of Python ints. GF(2) rows are
packed into ints with bit j standing for column j.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "SmithDecomposition",
    "smith_normal_form",
    "hermite_normal_form",
    "lattice_quotient_rank",
    "matmul",
    "GF2Matrix",
    "gf2_rref",
    "gf2_rank",
    "subspace_intersection_dim_gf2",
]

IntMatrix = list  # list[list[int]]


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(len(a))]


@dataclass(frozen=True)
class SmithDecomposition:
    """``U * A * V == D`` with D diagonal, d_1 | d_2 | ... | d_r."""

    factors: tuple[int, ...]
    shape: tuple[int, int]
    U: tuple[tuple[int, ...], ...]
    V: tuple[tuple[int, ...], ...]
    D: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.factors if d > 1)

    def verify(self, a: Sequence[Sequence[int]]) -> bool:
        rows, cols = self.shape
        if rows == 0 or cols == 0:
            return True
        return matmul(matmul(self.U, a), self.V) == [list(r) for r in self.D]


def smith_normal_form(a: Sequence[Sequence[int]], ncols: int | None = None) -> SmithDecomposition:
    """Smith normal form with unimodular certificates U (rows) and V (columns)."""
    m = [list(map(int, r)) for r in a]
    rows = len(m)
    cols = len(m[0]) if m else (ncols or 0)
    U = _identity(rows)
    V = _identity(cols)

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in m:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):  # row_dst += k * row_src
        m[dst] = [x + k * y for x, y in zip(m[dst], m[src])]
        U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, k):  # col_dst += k * col_src
        for r in m:
            r[dst] += k * r[src]
        for r in V:
            r[dst] += k * r[src]

    t = 0
    while t < min(rows, cols):
        # smallest nonzero |entry| in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if m[i][j] and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = m[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = m[i][t] // p
                if q:
                    add_row(i, t, -q)
                if m[i][t]:
                    dirty = True
            for j in range(t + 1, cols):
                q = m[t][j] // p
                if q:
                    add_col(j, t, -q)
                if m[t][j]:
                    dirty = True
            if not dirty:
                # enforce divisibility into the rest of the block
                bad = None
                for i in range(t + 1, rows):
                    for j in range(t + 1, cols):
                        if m[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                add_row(t, bad, 1)
                continue
            # move the smallest remainder into the pivot slot
            best = (t, t)
            for i in range(t, rows):
                if m[i][t] and abs(m[i][t]) < abs(m[best[0]][best[1]]):
                    best = (i, t)
            for j in range(t, cols):
                if m[t][j] and abs(m[t][j]) < abs(m[best[0]][best[1]]):
                    best = (t, j)
            swap_rows(t, best[0])
            swap_cols(t, best[1])
        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    factors = tuple(m[i][i] for i in range(t))
    return SmithDecomposition(
        factors=factors,
        shape=(rows, cols),
        U=tuple(tuple(r) for r in U),
        V=tuple(tuple(r) for r in V),
        D=tuple(tuple(r) for r in m),
    )


def hermite_normal_form(a: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Row-style Hermite normal form: returns (nonzero rows, pivot columns).

    Pivots are positive, entries above a pivot are reduced into [0, pivot).
    The rows span the same lattice as the input rows.
    """
    m = [list(map(int, r)) for r in a if any(r)]
    cols = len(m[0]) if m else 0
    r = 0
    pivots = []
    for c in range(cols):
        if r >= len(m):
            break
        while True:
            nz = [i for i in range(r, len(m)) if m[i][c]]
            if not nz:
                break
            i = min(nz, key=lambda k: abs(m[k][c]))
            m[r], m[i] = m[i], m[r]
            done = True
            for k in range(r + 1, len(m)):
                if m[k][c]:
                    q = m[k][c] // m[r][c]
                    m[k] = [x - q * y for x, y in zip(m[k], m[r])]
                    if m[k][c]:
                        done = False
            if done:
                break
        if r < len(m) and m[r][c]:
            if m[r][c] < 0:
                m[r] = [-x for x in m[r]]
            for k in range(r):
                q = m[k][c] // m[r][c]
                if q:
                    m[k] = [x - q * y for x, y in zip(m[k], m[r])]
            pivots.append(c)
            r += 1
    return [row for row in m[:r]], pivots


def lattice_quotient_rank(n: int, rows: Sequence[Sequence[int]]) -> tuple[int, tuple[int, ...]]:
    """Free rank and torsion factors of Z^n modulo the span of ``rows``."""
    rows = [list(r) for r in rows]
    for r in rows:
        if len(r) != n:
            raise ValueError(f"row length {len(r)} does not match ambient dimension {n}")
    if not rows or n == 0:
        return n, ()
    snf = smith_normal_form(rows)
    return n - snf.rank, snf.torsion


# ------------------------------------------------------------------ GF(2)

@dataclass(frozen=True)
class GF2Matrix:
    rows: tuple[int, ...]
    ncols: int

    @classmethod
    def from_strings(cls, rows: Iterable[str]) -> "GF2Matrix":
        """Rows written left to right, leftmost character = column 0."""
        rows = list(rows)
        ncols = max((len(r) for r in rows), default=0)
        packed = tuple(sum(1 << j for j, ch in enumerate(r) if ch == "1") for r in rows)
        return cls(packed, ncols)

    @classmethod
    def from_int_rows(cls, rows: Iterable[Sequence[int]], ncols: int) -> "GF2Matrix":
        packed = tuple(sum(1 << j for j, x in enumerate(r) if x % 2) for r in rows)
        return cls(packed, ncols)

    def to_strings(self) -> list[str]:
        return ["".join("1" if r >> j & 1 else "0" for j in range(self.ncols)) for r in self.rows]

    @property
    def rank(self) -> int:
        return gf2_rank(self.rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(_low_bit(r) for r in gf2_rref(self).rows)


def _low_bit(x: int) -> int:
    return (x & -x).bit_length() - 1


def gf2_rref(m: GF2Matrix) -> GF2Matrix:
    """Reduced row echelon form; zero rows are dropped, rows sorted by pivot."""
    basis: dict[int, int] = {}  # pivot column -> row
    for r in m.rows:
        for p, b in basis.items():
            if r >> p & 1:
                r ^= b
        if r:
            p = _low_bit(r)
            for q in list(basis):
                if basis[q] >> p & 1:
                    basis[q] ^= r
            basis[p] = r
    return GF2Matrix(tuple(basis[p] for p in sorted(basis)), m.ncols)


def gf2_rank(rows: Iterable[int]) -> int:
    rows = list(rows)
    return len(gf2_rref(GF2Matrix(tuple(rows), max((r.bit_length() for r in rows), default=0))).rows)


def subspace_intersection_dim_gf2(n: int, s_rows: Iterable[int], coords: Iterable[int]) -> int:
    """dim(span{e_k : k in coords} ∩ span(s_rows)) over GF(2)."""
    s_rows = list(s_rows)
    coords = sorted(set(coords))
    for k in coords:
        if not 0 <= k < n:
            raise ValueError(f"coordinate {k} outside 0..{n - 1}")
    unit = [1 << k for k in coords]
    return len(unit) + gf2_rank(s_rows) - gf2_rank(unit + s_rows)
