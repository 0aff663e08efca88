import pytest
from hypothesis import given
from hypothesis import strategies as st

from subdepth import perm
from subdepth.errors import WeightMismatch
from subdepth.intmatrix import depth
from subdepth.young import (
    Partition,
    SignedVertex,
    alt_depth,
    alt_inclusion_matrix,
    alt_vertices,
    ceil_sqrt,
    conjugate,
    is_symmetric,
    partitions,
    sym_branch_graph,
    sym_depth,
    sym_inclusion_matrix,
    verify_alt_depth,
    verify_sym_depth,
    young_distance,
)

PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


@pytest.mark.parametrize("n", range(1, 11))
def test_partition_counts(n):
    parts = partitions(n)
    assert len(parts) == PARTITION_COUNTS[n]
    assert parts[0] == (n,) and parts[-1] == (1,) * n
    assert parts == sorted(parts, reverse=True)
    assert all(p.weight == n for p in parts)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_conjugate_and_symmetric():
    assert conjugate((4, 2, 1)) == (3, 2, 1, 1)
    assert is_symmetric((3, 2, 1)) and is_symmetric((2, 2))
    assert not is_symmetric((2, 1, 1))


@given(st.integers(1, 9).flatmap(lambda n: st.sampled_from(partitions(n))))
def test_conjugation_is_an_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().weight == lam.weight


def test_young_distance_example():
    assert young_distance((4, 3, 2, 1), (5, 2, 1, 1, 1)) == 4


def test_young_distance_weight_mismatch():
    with pytest.raises(WeightMismatch):
        young_distance((2,), (1, 1, 1))


@given(st.integers(1, 8).flatmap(lambda n: st.tuples(*[st.sampled_from(partitions(n))] * 3)))
def test_young_distance_is_an_even_metric(triple):
    a, b, c = triple
    assert young_distance(a, b) == young_distance(b, a)
    assert young_distance(a, b) % 2 == 0
    assert (young_distance(a, b) == 0) == (a == b)
    assert young_distance(a, c) <= young_distance(a, b) + young_distance(b, c)


def test_removals_and_additions():
    lam = Partition((3, 1))
    assert sorted(lam.removals()) == [(2, 1), (3,)]
    assert sorted(lam.additions()) == [(3, 1, 1), (3, 2), (4, 1)]


def test_sym_matrix_shape():
    assert sym_inclusion_matrix(3).shape == (3, 5)


@pytest.mark.parametrize("n", range(1, 9))
def test_bfs_distance_equals_young_distance(n):
    check = verify_sym_depth(n)
    assert check.distances_agree


@pytest.mark.parametrize("n", range(2, 8))
def test_sym_depth_closed_form(n):
    assert depth(sym_inclusion_matrix(n)).depth == sym_depth(n) == 2 * n - 1
    assert verify_sym_depth(n).agree


def test_sym_branch_edges_are_box_removals():
    g = sym_branch_graph(4)
    for i, j in g.edges:
        assert g.lower[i] in g.upper[j].removals()


@pytest.mark.parametrize("n", range(3, 8))
def test_alt_vertex_count_matches_class_count(n):
    assert len(alt_vertices(n)) == len(perm.alternating_group(n).classes)


@pytest.mark.parametrize("n, expected", [(2, 2), (3, 3), (4, 5), (5, 5), (6, 7), (7, 9), (8, 11), (9, 13), (16, 25)])
def test_alt_closed_form(n, expected):
    assert alt_depth(n) == expected


@pytest.mark.parametrize("n", range(3, 9))
def test_alt_matrix_depth(n):
    assert depth(alt_inclusion_matrix(n)).depth == alt_depth(n)
    assert verify_alt_depth(n).agree


def test_alt_matrix_is_zero_one():
    for n in range(3, 7):
        assert {x for row in alt_inclusion_matrix(n).entries for x in row} <= {0, 1}


def test_signed_vertex_validation():
    with pytest.raises(ValueError):
        SignedVertex(Partition((2, 1)), "0")  # symmetric needs a sign
    with pytest.raises(ValueError):
        SignedVertex(Partition((2, 1, 1)), "0")  # not the larger of the pair
    assert str(SignedVertex(Partition((2, 1)), "+")) == "[(2,1),+]"


@pytest.mark.parametrize("n, r", [(1, 1), (2, 2), (4, 2), (5, 3), (9, 3), (10, 4)])
def test_ceil_sqrt(n, r):
    assert ceil_sqrt(n) == r
