"""Smoke tests for the python bindings."""

import os

import pytest

import knotcolor as kc

DATA = os.environ.get("KNOTCOLOR_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data"))

TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
FIGURE8 = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"


def test_parse_and_counts():
    d = kc.parse_pd(TREFOIL)
    assert d.crossing_count == 3
    assert d.strand_count == 3
    assert d.edge_count == 6


def test_determinants():
    assert kc.determinant(kc.parse_pd(TREFOIL)) == 3
    assert kc.determinant(kc.parse_pd(FIGURE8)) == 5
    assert kc.goeritz_determinant(kc.parse_pd(FIGURE8)) == 5
    assert kc.determinant(kc.parse_pd("")) == 1


def test_corpus_files():
    with open(os.path.join(DATA, "figure8.pd")) as f:
        d = kc.parse_pd(f.read())
    assert kc.determinant(d) == 5


def test_nullity_and_colorings():
    d = kc.parse_pd(FIGURE8)
    assert kc.nullity(d, 5) == 1
    assert kc.coloring_count(d, 5) == 25
    cols = kc.colorings(d, 5)
    assert len(cols) == 25
    assert [4, 1, 2, 0] in cols
    assert kc.is_n_colorable(d, 10)
    assert not kc.is_n_colorable(d, 3)
    assert kc.coloring_group(d) == [5]


def test_matrices():
    d = kc.parse_pd(TREFOIL)
    pre = kc.precoloring_matrix(d)
    assert all(sum(row) == 0 for row in pre)
    g = kc.goeritz_matrix(d)
    assert all(sum(row) == 0 for row in g)
    assert g == [list(col) for col in zip(*g)]  # symmetric


def test_pretzel():
    assert kc.pretzel_determinant([-2, 3, 7]) == 1
    assert kc.pretzel_determinant([3, 3, -3]) == 9
    assert kc.pretzel_nullity([3, 3, -3], 3) == 2
    d = kc.pretzel_diagram([1, 1, 1])
    assert kc.determinant(d) == 3
    with pytest.raises(ValueError):
        kc.pretzel_diagram([2, 2])


def test_big_integers_cross_the_boundary_exactly():
    q = [9999] * 9
    expected = 9 * 9999**8
    assert kc.pretzel_determinant(q) == expected


def test_errors():
    with pytest.raises(ValueError):
        kc.parse_pd("X[1,2,3]")
    with pytest.raises(ValueError):
        kc.nullity(kc.parse_pd(TREFOIL), 6)
