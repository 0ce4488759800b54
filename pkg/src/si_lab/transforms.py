"""Builders: rank-one tensors, exact unitaries, direct sums."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact_arith import ExactMatrix, GaussianRational, ONE, ZERO, I_UNIT, gr

# (cos, sin) pairs with rational entries
PYTHAGOREAN = [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29), (12, 35, 37)]
PHASES = [ONE, I_UNIT, -ONE, -I_UNIT]


@dataclass(frozen=True)
class ExactUnitary:
    matrix: ExactMatrix

    def __post_init__(self):
        U = self.matrix
        I = ExactMatrix.identity(U.rows)
        if U.adjoint() @ U != I or U @ U.adjoint() != I:
            raise ValueError("matrix is not unitary")

    @property
    def dim(self):
        return self.matrix.rows


def rank_one_from_vectors(f: Sequence, g: Sequence) -> ExactMatrix:
    """The operator h -> (h, g) f, i.e. entries f_i * conj(g_j)."""
    f = [gr(x) for x in f]
    g = [gr(x) for x in g]
    if len(f) != len(g):
        raise ValueError("vectors must have the same length")
    if all(x.is_zero() for x in f) or all(x.is_zero() for x in g):
        raise ValueError("zero vector gives the zero operator, not rank one")
    n = len(f)
    return ExactMatrix(n, n, (f[i] * g[j].conjugate() for i in range(n) for j in range(n)))


def _rotation(n: int, i: int, j: int, c: Fraction, s: Fraction) -> ExactMatrix:
    rows = [[ONE if r == k else ZERO for k in range(n)] for r in range(n)]
    rows[i][i] = GaussianRational(c)
    rows[j][j] = GaussianRational(c)
    rows[i][j] = GaussianRational(s)
    rows[j][i] = GaussianRational(-s)
    return ExactMatrix.from_rows(rows)


def exact_unitary(dim: int, seed: int = 0) -> ExactUnitary:
    """Product of rational plane rotations, times a diagonal of fourth roots of unity.

    dim 2, seed 0 gives (1/5)[[3,4],[-4,3]] up to the phase diagonal.
    """
    if dim < 1:
        raise ValueError("dim must be positive")
    rng = random.Random(seed)
    U = ExactMatrix.identity(dim)
    r = 0
    for i in range(dim):
        for j in range(i + 1, dim):
            a, b, c = PYTHAGOREAN[(seed + r) % len(PYTHAGOREAN)]
            U = U @ _rotation(dim, i, j, Fraction(a, c), Fraction(b, c))
            r += 1
    phases = ExactMatrix.diag(*(rng.choice(PHASES) for _ in range(dim)))
    return ExactUnitary(phases @ U)


def conjugate(T: ExactMatrix, U) -> ExactMatrix:
    Um = U.matrix if isinstance(U, ExactUnitary) else U
    if Um.rows != T.rows:
        raise ValueError("dimension mismatch")
    return Um @ T @ Um.adjoint()


def direct_sum(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    n = A.rows + B.rows
    m = A.cols + B.cols
    rows = []
    for i in range(A.rows):
        rows.append(list(A.row(i)) + [ZERO] * B.cols)
    for i in range(B.rows):
        rows.append([ZERO] * A.cols + list(B.row(i)))
    return ExactMatrix(n, m, (x for r in rows for x in r))


def similarity_counterexample():
    """A projection P and a similar matrix A = S P S^-1 that behave differently."""
    P = ExactMatrix.from_rows([[1, 0], [0, 0]])
    A = ExactMatrix.from_rows([[1, -1], [0, 0]])
    S = ExactMatrix.from_rows([[1, 1], [0, 1]])
    if S @ P @ S.inverse() != A:
        raise AssertionError("similarity identity failed")
    return P, A, S
