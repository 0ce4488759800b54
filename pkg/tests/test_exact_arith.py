from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from si_lab.exact_arith import (DimensionError, ExactMatrix, GaussianRational, PowerCheck,
                                adjoint, canonical_key, frobenius_norm_sq, is_power_partial_isometry,
                                mat_mul, predicates, rank, trace)
from si_lab.transforms import direct_sum

from strategies import gaussians, matrices, nonzero_gaussians, rank_one_matrices, sparse_matrices

G = GaussianRational
M = ExactMatrix.from_rows
E12 = M([[0, 1], [0, 0]])
RNS = M([["3/5", "4/5"], [0, 0]])


def test_gaussian_normal_form():
    z = G(Fraction(2, 4), Fraction(-6, 8))
    assert z.parts() == (2, -3, 4)
    assert G(0, 0).parts() == (0, 0, 1)
    assert str(G(0, -1)) == "-i"
    assert str(G(Fraction(4, 5), Fraction(3, 5))) == "4/5+3/5i"
    assert str(G(1, -1)) == "1-i"


def test_gaussian_division_and_powers():
    a = G(3, 4)
    assert a * a.inverse() == 1
    assert a ** -2 == (a * a).inverse()
    assert G(0, 1) ** 4 == 1
    assert a.abs_sq() == 25
    with pytest.raises(ZeroDivisionError):
        G(0).inverse()


@given(gaussians, gaussians, gaussians)
def test_gaussian_field_laws(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()
    assert (x * y).abs_sq() == x.abs_sq() * y.abs_sq()
    assert x - x == 0


@given(nonzero_gaussians, gaussians)
def test_gaussian_division_roundtrip(x, y):
    assert (y / x) * x == y


def test_mat_mul_examples():
    A = M([[1, 2], [3, "i"]])
    assert mat_mul(ExactMatrix.identity(2), A) == A
    assert mat_mul(E12, E12) == ExactMatrix.zeros(2)
    assert mat_mul(RNS, adjoint(RNS)) == M([[1, 0], [0, 0]])
    with pytest.raises(DimensionError):
        mat_mul(ExactMatrix.zeros(2, 3), ExactMatrix.zeros(2, 3))


def test_adjoint_examples():
    assert adjoint(M([["i", 0], [0, 0]])) == M([["-i", 0], [0, 0]])
    assert adjoint(E12) == M([[0, 0], [1, 0]])
    assert adjoint(ExactMatrix.zeros(2, 3)).shape == (3, 2)


def test_rank_trace_norm_examples():
    assert rank(ExactMatrix.zeros(3)) == 0
    assert rank(RNS) == 1
    assert rank(ExactMatrix.identity(3)) == 3
    assert trace(RNS) == Fraction(3, 5)
    assert trace(E12) == 0
    assert trace(ExactMatrix.diag("i", 0)) == G(0, 1)
    with pytest.raises(DimensionError):
        trace(ExactMatrix.zeros(2, 3))
    assert frobenius_norm_sq(RNS) == 1
    assert frobenius_norm_sq(M([[1, -1], [0, 0]])) == 2
    assert frobenius_norm_sq(M([[0, 2], [0, 0]])) == 4


def _to_sympy(A):
    return sympy.Matrix(A.rows, A.cols,
                        [sympy.Rational(z.re.numerator, z.re.denominator)
                         + sympy.I * sympy.Rational(z.im.numerator, z.im.denominator)
                         for z in A.entries])


@settings(max_examples=150, deadline=None)
@given(sparse_matrices())
def test_rank_matches_sympy(A):
    assert rank(A) == _to_sympy(A).rank()


@given(rank_one_matrices())
def test_rank_one_builder_has_rank_one(T):
    assert rank(T) == 1


def test_inverse():
    S = M([[1, 1], [0, 1]])
    assert S.inverse() == M([[1, -1], [0, 1]])
    with pytest.raises(ZeroDivisionError):
        E12.inverse()


def test_predicates_examples():
    p = predicates(E12)
    assert (p.selfadjoint, p.normal, p.partial_isometry, p.idempotent) == (False, False, True, False)
    proj = predicates(ExactMatrix.diag(1, 0))
    assert proj.selfadjoint and proj.normal and proj.partial_isometry and proj.idempotent
    with pytest.raises(DimensionError):
        predicates(ExactMatrix.zeros(1, 2))


def test_product_of_partial_isometries_need_not_be_one():
    # the textbook pair uses a 1/sqrt(2) column; (3/5, 4/5) keeps it rational
    V = M([[0, 0], [1, 0]])
    W = M([["3/5", 0], ["4/5", 0]])
    assert predicates(V).partial_isometry and predicates(W).partial_isometry
    VW = V @ W
    assert VW == M([[0, 0], ["3/5", 0]])
    assert not predicates(VW).partial_isometry


def test_power_partial_isometry_examples():
    assert is_power_partial_isometry(E12, 4).status is PowerCheck.VERIFIED_UP_TO_BOUND
    r = is_power_partial_isometry(RNS, 2)
    assert r.status is PowerCheck.FALSE and r.failed_at == 2
    ens = direct_sum(M([[1]]), E12)
    assert is_power_partial_isometry(ens, 6).status is PowerCheck.VERIFIED_UP_TO_BOUND
    # with cycle detection the nilpotent case is settled for all powers
    assert is_power_partial_isometry(E12, 4, certify_cycles=True).status is PowerCheck.TRUE


def test_canonical_key():
    A = M([["1/2", "2/4"], [0, "0/7"]])
    assert canonical_key(A) == canonical_key(A)
    assert canonical_key(A) == canonical_key(M([["1/2", "1/2"], [0, 0]]))
    assert canonical_key(M([[1]])) != canonical_key(M([[1, 0], [0, 0]]))


@given(st.lists(matrices(max_dim=2, square=False), min_size=2, max_size=12))
def test_canonical_key_injective(mats):
    seen = {}
    for A in mats:
        k = canonical_key(A)
        if k in seen:
            assert seen[k] == A
        seen[k] = A


@given(st.data())
def test_adjoint_reverses_products(data):
    A = data.draw(matrices(max_dim=3))
    B = data.draw(matrices(min_dim=A.rows, max_dim=A.rows))
    assert adjoint(A @ B) == adjoint(B) @ adjoint(A)
    assert adjoint(adjoint(A)) == A


@given(rank_one_matrices())
def test_rank_one_norm_law(T):
    # s T = T T* T, and T is a partial isometry exactly when s = 1
    s = frobenius_norm_sq(T)
    assert T.scale(s) == T @ T.adjoint() @ T
    assert predicates(T).partial_isometry == (s == 1)
