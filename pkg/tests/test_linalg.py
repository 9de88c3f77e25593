from __future__ import annotations

import pytest

from cyclepack.linalg import (
    GF2Matrix,
    gf2_rank,
    gf2_rref,
    hermite_normal_form,
    lattice_quotient_rank,
    smith_normal_form,
    subspace_intersection_dim_gf2,
)


def test_snf_diagonal_two_three():
    s = smith_normal_form([[2, 0], [0, 3]])
    assert s.factors == (1, 6)
    assert s.verify([[2, 0], [0, 3]])


def test_snf_zero_and_identity():
    assert smith_normal_form([[0, 0], [0, 0]]).rank == 0
    assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).factors == (1, 1, 1)


def test_snf_rectangular_certificate():
    m = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    s = smith_normal_form(m)
    assert s.factors == (2, 6, 12)
    assert s.verify(m)


def test_hnf():
    rows, pivots = hermite_normal_form([[2, 4], [3, 5]])
    assert pivots == [0, 1]
    assert rows == [[1, 1], [0, 2]]
    assert hermite_normal_form([[0, 0]]) == ([], [])


def test_lattice_quotient_rank():
    assert lattice_quotient_rank(2, [[1, -1]]) == (1, ())
    assert lattice_quotient_rank(1, [[2]]) == (0, (2,))
    assert lattice_quotient_rank(3, []) == (3, ())
    with pytest.raises(ValueError):
        lattice_quotient_rank(2, [[1]])


def test_gf2_examples():
    m = GF2Matrix.from_strings(["110", "011"])
    assert m.rank == 2
    assert gf2_rref(m).to_strings() == ["101", "011"]
    assert m.pivots == (0, 1)
    assert GF2Matrix.from_strings(["101", "101"]).rank == 1
    assert gf2_rank([0, 0]) == 0
    assert GF2Matrix.from_int_rows([[1, -1, 2]], 3).to_strings() == ["110"]


def test_subspace_intersection():
    x, y = 1, 2
    assert subspace_intersection_dim_gf2(2, [x | y], [0]) == 0
    assert subspace_intersection_dim_gf2(2, [x], [0]) == 1
    s = [0b011, 0b110]
    assert subspace_intersection_dim_gf2(3, s, [0, 1, 2]) == gf2_rank(s)
    with pytest.raises(ValueError):
        subspace_intersection_dim_gf2(2, s, [5])
