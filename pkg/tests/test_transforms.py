import pytest
from hypothesis import given, settings, strategies as st

from si_lab.classifier import classify
from si_lab.exact_arith import ExactMatrix, GaussianRational as G, predicates
from si_lab.transforms import (ExactUnitary, conjugate, direct_sum, exact_unitary,
                               rank_one_from_vectors, similarity_counterexample)

from strategies import gaussians, matrices

M = ExactMatrix.from_rows


def test_rank_one_from_vectors():
    assert rank_one_from_vectors([1, 0], [0, 1]) == M([[0, 1], [0, 0]])
    assert rank_one_from_vectors([1, 0], [1, 0]) == M([[1, 0], [0, 0]])
    f, g = [1, 1], ["1/2", "i"]
    T = rank_one_from_vectors(f, g)
    assert T.trace() == G("1/2", -1)   # 1*conj(1/2) + 1*conj(i)
    with pytest.raises(ValueError):
        rank_one_from_vectors([0, 0], [1, 0])


@given(st.lists(gaussians, min_size=3, max_size=3), st.lists(gaussians, min_size=3, max_size=3))
def test_trace_is_inner_product(f, g):
    if all(z.is_zero() for z in f) or all(z.is_zero() for z in g):
        return
    T = rank_one_from_vectors(f, g)
    expected = G(0)
    for x, y in zip(f, g):
        expected = expected + x * y.conjugate()
    assert T.trace() == expected


def test_exact_unitary_small():
    for seed in range(4):
        U = exact_unitary(1, seed).matrix
        assert U.entries[0] in (G(1), G(-1), G(0, 1), G(0, -1))
    U = exact_unitary(2, 0).matrix
    # a phase times the 3-4-5 rotation
    R = M([["3/5", "4/5"], ["-4/5", "3/5"]])
    D = U @ R.adjoint()
    assert D[0, 1].is_zero() and D[1, 0].is_zero()
    assert predicates(U).normal


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.integers(0, 1000))
def test_exact_unitary_is_unitary(dim, seed):
    U = exact_unitary(dim, seed).matrix
    I = ExactMatrix.identity(dim)
    assert U.adjoint() @ U == I and U @ U.adjoint() == I


def test_non_unitary_rejected():
    with pytest.raises(ValueError):
        ExactUnitary(M([[1, 1], [0, 1]]))


@settings(max_examples=30, deadline=None)
@given(matrices(min_dim=2, max_dim=3), st.integers(0, 50))
def test_conjugation_preserves_trace_and_norm(T, seed):
    U = exact_unitary(T.rows, seed)
    C = conjugate(T, U)
    assert C.trace() == T.trace()
    assert C.frobenius_norm_sq() == T.frobenius_norm_sq()
    assert conjugate(T, ExactMatrix.identity(T.rows)) == T


def test_direct_sum():
    ens = direct_sum(M([[1]]), M([[0, 1], [0, 0]]))
    assert ens == M([[1, 0, 0], [0, 0, 1], [0, 0, 0]])
    assert direct_sum(M([[0]]), M([[0]])) == ExactMatrix.zeros(2)
    assert direct_sum(M([["i"]]), M([[1]])) == ExactMatrix.diag("i", 1)


@given(matrices(max_dim=2), matrices(max_dim=2))
def test_direct_sum_adjoint(A, B):
    assert direct_sum(A, B).adjoint() == direct_sum(A.adjoint(), B.adjoint())


def test_similarity_counterexample():
    P, A, S = similarity_counterexample()
    assert S @ P @ S.inverse() == A
    assert classify(P).si == "Yes"
    assert classify(A).si == "No"
