import itertools
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from asmverma.errors import InputError, ResourceLimitError
from asmverma.perm import (
    Permutation,
    bigrassmannians,
    bruhat_covers,
    bruhat_leq,
    bruhat_leq_matrix,
    corner_sum_matrix_of_perm,
    enumerate_sn,
    identity,
    is_bigrassmannian,
    left_descents,
    length,
    longest,
    permutation_matrix,
    right_descents,
)
from asmverma.verify import bruhat_by_transpositions

P = Permutation


def perms(n):
    return st.permutations(list(range(1, n + 1))).map(lambda xs: P(tuple(xs)))


def test_parse_and_render():
    w = P.parse("3 1 2")
    assert w.image == (3, 1, 2)
    assert w.to_text() == "3 1 2"
    assert P.from_json(w.to_json()) == w


@pytest.mark.parametrize("text", ["1 1 2", "0 1", "1 3", "a b", ""])
def test_parse_rejects(text):
    with pytest.raises(InputError):
        P.parse(text)


def test_composition_convention():
    x, y = P((2, 1, 3)), P((1, 3, 2))
    assert (x * y)(2) == x(y(2))
    assert (x * x.inverse()).is_identity()


def test_descents_examples():
    assert right_descents(P((3, 1, 2))) == {1}
    assert left_descents(P((3, 1, 2))) == {2}
    assert right_descents(P((4, 2, 3, 1))) == left_descents(P((4, 2, 3, 1))) == {1, 3}


def test_corner_sum_examples():
    assert corner_sum_matrix_of_perm(identity(3)).tolist() == [[1, 1, 1], [1, 2, 2], [1, 2, 3]]
    assert corner_sum_matrix_of_perm(P((2, 3, 1))).tolist() == [[0, 1, 1], [0, 1, 2], [1, 2, 3]]
    assert corner_sum_matrix_of_perm(P((3, 1, 2))).tolist() == [[0, 0, 1], [1, 1, 2], [1, 2, 3]]
    assert permutation_matrix(P((2, 3, 1))).tolist() == [[0, 1, 0], [0, 0, 1], [1, 0, 0]]


def test_bruhat_examples():
    assert bruhat_leq(identity(3), longest(3))
    assert bruhat_leq(P((2, 1, 3)), P((3, 1, 2)))
    assert not bruhat_leq(P((2, 1, 3)), P((1, 3, 2)))
    with pytest.raises(InputError):
        bruhat_leq(identity(2), identity(3))


def test_bigrassmannian_examples():
    assert is_bigrassmannian(P((2, 1, 3)))
    assert not is_bigrassmannian(longest(3))
    assert not is_bigrassmannian(P((4, 2, 3, 1)))
    assert not is_bigrassmannian(identity(3))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_enumeration_lexicographic(n):
    ws = enumerate_sn(n)
    assert len(ws) == math.factorial(n)
    assert [w.image for w in ws] == sorted(itertools.permutations(range(1, n + 1)))


def test_enumeration_bound():
    with pytest.raises(ResourceLimitError):
        enumerate_sn(20)


def test_covers_s3():
    assert len(bruhat_covers(3)) == 8
    assert len(enumerate_sn(4)) == 24


@pytest.mark.parametrize("n", [2, 3, 4])
def test_bruhat_matches_transposition_oracle(n):
    ws = enumerate_sn(n)
    assert np.array_equal(bruhat_leq_matrix(ws), bruhat_by_transpositions(n))


@pytest.mark.parametrize("n", [3, 4])
def test_bruhat_partial_order(n):
    ws = enumerate_sn(n)
    m = bruhat_leq_matrix(ws)
    assert m.diagonal().all()
    assert not (m & m.T & ~np.eye(len(ws), dtype=bool)).any()
    closure = (m.astype(int) @ m.astype(int)) > 0
    assert np.array_equal(closure, m)


@pytest.mark.parametrize("n", [3, 4])
def test_covers_are_transitive_reduction(n):
    ws = enumerate_sn(n)
    idx = {w: k for k, w in enumerate(ws)}
    m = bruhat_leq_matrix(ws)
    strict = m & ~np.eye(len(ws), dtype=bool)
    reduction = strict & ~((strict.astype(int) @ strict.astype(int)) > 0)
    covers = {(idx[x], idx[y]) for x, y in bruhat_covers(n)}
    assert covers == {tuple(p) for p in np.argwhere(reduction)}


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_bigrassmannian_count(n):
    assert len(bigrassmannians(n)) == math.comb(n + 1, 3)


@given(perms(5))
def test_length_parity(w):
    for i in range(1, 5):
        assert (length(w) + length(w.swap_positions(i))) % 2 == 1


@given(perms(5))
def test_left_descents_are_inverse_right_descents(w):
    assert left_descents(w) == right_descents(w.inverse())


@given(perms(6))
def test_length_is_inversion_count(w):
    inv = sum(1 for a, b in itertools.combinations(w.image, 2) if a > b)
    assert length(w) == inv
