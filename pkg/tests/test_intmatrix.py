import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import irredundant
from subdepth.errors import MalformedFile, ZeroRowOrColumn
from subdepth.intmatrix import (
    IrredundantMatrix,
    ZeroPattern,
    alt_power,
    bool_alt_powers,
    check_tensor_bound,
    check_tower_embedding,
    check_transpose_theorem,
    depth,
    dynkin_chain,
    minimal_q,
    parse_matrix,
    permutation_equivalence,
    permutation_equivalent,
    random_irredundant,
    satisfies_depth_inequality,
    support_equivalent,
    tensor,
)

D8_S4 = [[1, 0, 1, 0, 0], [0, 0, 0, 0, 1], [0, 0, 0, 1, 0], [0, 1, 1, 0, 0], [0, 0, 0, 1, 1]]
S2_S3 = [[1, 0, 1], [0, 1, 1]]
D10_S5 = [[1, 0, 1, 0, 1, 0, 1], [0, 0, 0, 2, 0, 0, 0], [0, 1, 1, 1, 1, 1, 0], [0, 1, 1, 1, 1, 1, 0]]


def M(rows):
    return IrredundantMatrix.from_rows(rows)


# -- construction and parsing ------------------------------------------------


def test_parse_with_comments_and_blank_lines():
    text = "# a comment\n\n2 3\n1 0 1\n# inner\n0 1 1\n"
    assert parse_matrix(text).entries == ((1, 0, 1), (0, 1, 1))


@pytest.mark.parametrize(
    "text",
    [
        "",
        "2\n1 0\n",
        "2 2\n1 0\n",
        "2 2\n1 0\n0 1\n1 1\n",
        "1 2\n1 x\n",
        "1 2\n1 -1\n",
        "1 2\n1 1 1\n",
        "0 0\n",
    ],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(MalformedFile):
        parse_matrix(text)


@pytest.mark.parametrize("rows", [[[0, 0], [1, 1]], [[1, 0], [1, 0]]])
def test_zero_row_or_column_rejected(rows):
    with pytest.raises(ZeroRowOrColumn):
        M(rows)


def test_text_round_trip():
    m = M(D10_S5)
    assert parse_matrix(m.to_text("D10 < S5")) == m


def test_entries_are_arbitrary_precision():
    m = M([[10**12, 1], [1, 10**12]])
    big = alt_power(m, 9).value
    assert big[0][0] > 2**64


# -- alternating powers ------------------------------------------------------


def test_cube_of_s2_s3():
    assert alt_power(M(S2_S3), 3).value == ((2, 1, 3), (1, 2, 3))


def test_square_is_m_mt():
    assert M(S2_S3).square == ((2, 1), (1, 2))


@given(irredundant(), st.integers(1, 7))
def test_alt_power_matches_repeated_products(m, k):
    assert [list(r) for r in alt_power(m, k).value] == oracles.power(m.entries, k)


@given(irredundant(), st.integers(1, 9))
def test_boolean_powers_are_zero_patterns(m, k):
    assert bool_alt_powers(m, k)[k - 1] == ZeroPattern.of(oracles.power(m.entries, k))


# -- depth -------------------------------------------------------------------


@pytest.mark.parametrize(
    "rows, expected",
    [
        (D8_S4, 4),
        (S2_S3, 3),
        (oracles.transpose(S2_S3), 4),
        (D10_S5, 5),
        ([[1, 1, 1]], 2),
        ([[1], [1]], 2),
        ([[1, 1], [0, 1]], 3),
        ([[2]], 2),
    ],
)
def test_depth_examples(rows, expected):
    assert depth(M(rows)).depth == expected


@pytest.mark.parametrize("n", range(2, 7))
def test_dynkin_chain(n):
    m = dynkin_chain(n)
    assert depth(m).depth == 2 * n - 1
    assert depth(m.transpose()).depth == 2 * n


def test_d8_inequalities():
    m = M(D8_S4)
    assert satisfies_depth_inequality(m, 4, 5)
    assert satisfies_depth_inequality(m, 4, 4)
    assert not satisfies_depth_inequality(m, 4, 3)
    assert depth(m).minimal_q == 4


def test_depth_one_flag():
    rep = depth(M([[1, 0], [0, 2]]))
    assert rep.depth == 2 and rep.depth_one and rep.effective_depth == 1
    assert not depth(M(S2_S3)).depth_one


def test_minimal_q_impossible():
    assert minimal_q([[1, 1]], [[1, 0]]) is None
    assert minimal_q([[7, 0]], [[2, 0]]) == 4


@given(irredundant())
def test_depth_matches_naive_oracle(m):
    assert depth(m).depth == oracles.depth(m.entries)


@given(irredundant())
def test_depth_at_most_2r_minus_1(m):
    d = depth(m).depth
    assert d <= max(2, 2 * m.rows - 1)


@given(irredundant(), st.randoms(use_true_random=False))
def test_depth_invariant_under_permutation(m, r):
    rows, cols = list(range(m.rows)), list(range(m.cols))
    r.shuffle(rows)
    r.shuffle(cols)
    assert depth(m.permuted(rows, cols)).depth == depth(m).depth


@given(irredundant())
def test_minimal_q_certifies(m):
    rep = depth(m)
    assert satisfies_depth_inequality(m, rep.depth, rep.minimal_q)
    if rep.minimal_q > 1:
        assert not satisfies_depth_inequality(m, rep.depth, rep.minimal_q - 1)


@given(irredundant(), st.integers(2, 10))
def test_depth_inequality_persists_above_depth(m, extra):
    rep = depth(m)
    n = rep.depth + extra
    assert minimal_q(alt_power(m, n + 1).value, alt_power(m, n - 1).value) is not None


# -- transpose, tower and tensor --------------------------------------------


def test_transpose_even_depth_need_not_be_preserved():
    # depth 4, while the transpose (the S2 < S3 matrix) has depth 3
    v = check_transpose_theorem(M(oracles.transpose(S2_S3)))
    assert (v.depth, v.transpose_depth) == (4, 3)
    assert v.holds and not v.equal


@given(irredundant())
def test_transpose_bound(m):
    v = check_transpose_theorem(m)
    assert v.transpose_depth <= v.depth + 1
    if v.depth % 2 == 0:
        assert v.transpose_depth <= v.depth


@given(irredundant(), st.integers(1, 5))
def test_even_inequalities_are_transpose_symmetric(m, j):
    k = 2 * j
    mt = m.transpose()
    a = minimal_q(alt_power(m, k + 1).value, alt_power(m, k - 1).value) is not None
    b = minimal_q(alt_power(mt, k + 1).value, alt_power(mt, k - 1).value) is not None
    assert a == b


@given(irredundant())
def test_tower_embedding(m):
    v = check_tower_embedding(m)
    assert v.factors == depth(m).depth - 1 and v.minimal_q >= 1


@given(irredundant(3, 3, 2), irredundant(3, 3, 2))
def test_tensor_bound(a, b):
    v = check_tensor_bound(a, b)
    assert v.tensor_depth <= max(v.left_depth, v.right_depth)


def test_tensor_shape_and_blocks():
    t = tensor(M(S2_S3), M([[1, 2]]))
    assert t.shape == (2, 6)
    assert t.entries[0] == (1, 2, 0, 0, 1, 2)


# -- permutation equivalence -------------------------------------------------


@given(irredundant(), st.randoms(use_true_random=False))
def test_permutation_equivalence_recovers_orders(m, r):
    rows, cols = list(range(m.rows)), list(range(m.cols))
    r.shuffle(rows)
    r.shuffle(cols)
    b = m.permuted(rows, cols)
    found = permutation_equivalence(m.entries, b.entries)
    assert found is not None
    ro, co = found
    assert all(b.entries[ro[i]][co[j]] == m.entries[i][j] for i in range(m.rows) for j in range(m.cols))


def test_not_equivalent():
    assert not permutation_equivalent([[1, 1], [0, 1]], [[1, 0], [0, 1]])
    assert support_equivalent([[2, 1], [0, 1]], [[1, 0], [1, 1]])


def test_random_irredundant_respects_limits():
    rng = random.Random(3)
    for _ in range(200):
        m = random_irredundant(rng)
        assert 1 <= m.rows <= 5 and 1 <= m.cols <= 5
        assert max(x for row in m.entries for x in row) <= 3
