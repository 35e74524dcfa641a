import itertools

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.matrices.normalforms import invariant_factors

from divnc.chains import euler_reduced
from divnc.errors import SizeGuardError
from divnc.homology import (SimplicialComplexData, boundary_matrices, boundary_shapes, homology,
                            order_complex, smith_diagonal, to_dense, write_triplets)
from divnc.ncposet import truncate


def complex_from_facets(facets):
    faces = set()
    for f in facets:
        f = tuple(sorted(f))
        for k in range(1, len(f) + 1):
            faces.update(itertools.combinations(f, k))
    top = max(len(f) for f in faces)
    by_dim = [sorted(f for f in faces if len(f) == d + 1) for d in range(top)]
    return SimplicialComplexData(by_dim, len(by_dim[0]))


RP2 = [(1, 2, 4), (1, 2, 6), (1, 3, 5), (1, 3, 6), (1, 4, 5),
       (2, 3, 4), (2, 3, 5), (2, 5, 6), (3, 4, 6), (4, 5, 6)]


@pytest.mark.parametrize("label, m, shape", [("A2", 1, [3]), ("A3", 1, [12, 16]), ("A1", 1, [])])
def test_order_complex_examples(poset, label, m, shape):
    assert order_complex(truncate(poset(label, m))).f_vector() == shape


def test_order_complex_guard(poset):
    with pytest.raises(SizeGuardError):
        order_complex(truncate(poset("D4", 1)), max_simplices=100)


def test_single_edge_boundary():
    K = complex_from_facets([(0, 1)])
    (d1,) = boundary_matrices(K)
    assert to_dense(d1, boundary_shapes(K)[0]) == [[-1], [1]]


def test_a3_boundary_columns(poset):
    K = order_complex(truncate(poset("A3", 1)))
    (d1,) = boundary_matrices(K)
    assert boundary_shapes(K) == [(12, 16)]
    for col in d1.values():
        assert sorted(col.values()) == [-1, 1]


@pytest.mark.parametrize("label, m", [("D4", 1), ("H3", 1), ("B3", 1)])
def test_boundary_squares_to_zero(poset, label, m):
    K = order_complex(truncate(poset(label, m)))
    shapes = boundary_shapes(K)
    mats = [np.array(to_dense(b, s)) for b, s in zip(boundary_matrices(K), shapes)]
    for lower, upper in zip(mats, mats[1:]):
        assert not (lower @ upper).any()


def test_homology_examples(poset):
    H = homology(order_complex(truncate(poset("A2", 1))))
    assert H.nonzero_betti() == {0: 2} and not H.torsion
    H = homology(order_complex(truncate(poset("A3", 1))))
    assert H.nonzero_betti() == {1: 5} and H.betti[0] == 0 and not H.torsion


def test_small_spaces():
    assert homology(complex_from_facets([(0,)])).nonzero_betti() == {}
    assert homology(complex_from_facets([(0,), (1,)])).nonzero_betti() == {0: 1}
    circle = complex_from_facets([(0, 1), (1, 2), (0, 2)])
    assert homology(circle).nonzero_betti() == {1: 1}
    sphere = complex_from_facets(list(itertools.combinations(range(4), 3)))
    assert homology(sphere).nonzero_betti() == {2: 1}
    empty = homology(SimplicialComplexData([], 0))
    assert empty.betti == {-1: 1} and empty.euler() == -1


def test_torsion_detected_on_projective_plane():
    H = homology(complex_from_facets(RP2))
    assert H.nonzero_betti() == {}
    assert H.torsion == {1: [2]}


@pytest.mark.parametrize("label, m", [("A3", 2), ("B3", 1), ("D4", 1), ("I2(6)", 2), ("H3", 1)])
def test_euler_consistency(poset, label, m):
    TP = truncate(poset(label, m))
    assert homology(order_complex(TP)).euler() == euler_reduced(TP)


matrices = st.tuples(st.integers(1, 6), st.integers(1, 6)).flatmap(
    lambda rc: st.lists(st.lists(st.integers(-6, 6), min_size=rc[1], max_size=rc[1]),
                        min_size=rc[0], max_size=rc[0]))


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_smith_matches_sympy(mat):
    cols = {c: {r: mat[r][c] for r in range(len(mat)) if mat[r][c]} for c in range(len(mat[0]))}
    ours = smith_diagonal(cols)
    theirs = [abs(int(x)) for x in invariant_factors(sympy.Matrix(mat), domain=sympy.ZZ) if x != 0]
    assert ours == sorted(theirs)


def test_write_triplets(tmp_path):
    K = complex_from_facets([(0, 1, 2)])
    path = tmp_path / "d2.txt"
    write_triplets(boundary_matrices(K)[1], path)
    lines = path.read_text().splitlines()
    assert len(lines) == 3
    assert {tuple(map(int, line.split()))[2] for line in lines} == {1, -1}
