"""Rank-one calculus.

A rank-one matrix is determined up to unitary equivalence by its trace ``a``
and the square ``s`` of its norm; ``s - |a|^2`` is the squared off-diagonal
weight in the 2x2 upper-triangular model, so it is kept only as ``b_sq``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_arith import ExactMatrix, GaussianRational


class NotRankOne(ValueError):
    pass


@dataclass(frozen=True)
class RankOneProfile:
    a: GaussianRational
    s: Fraction
    dim: int = 2

    def __post_init__(self):
        if self.s <= 0:
            raise ValueError("norm square must be positive")
        if self.s < self.a.abs_sq():
            raise ValueError("a rank-one profile needs s >= |a|^2")

    @property
    def b_sq(self) -> Fraction:
        return self.s - self.a.abs_sq()


def require_rank_one(T: ExactMatrix) -> None:
    if not T.is_square():
        raise ValueError("expected a square matrix")
    r = T.rank()
    if r != 1:
        raise NotRankOne(f"matrix has rank {r}, expected 1")


def profile(T: ExactMatrix) -> RankOneProfile:
    require_rank_one(T)
    return RankOneProfile(T.trace(), T.frobenius_norm_sq(), T.rows)


def canonical_form(p: RankOneProfile) -> tuple[GaussianRational, Fraction]:
    return p.a, p.b_sq


def is_normal_rank_one(p: RankOneProfile) -> bool:
    return p.s == p.a.abs_sq()


def ppi_rank_one(p: RankOneProfile) -> bool:
    """Power partial isometry test for a rank-one partial isometry."""
    if p.s != 1:
        raise ValueError("ppi_rank_one expects a partial isometry (s = 1)")
    return p.a.is_zero() or p.a.abs_sq() == 1


def pt3_identities(T: ExactMatrix, n: int) -> dict[str, bool]:
    """The five power identities of a rank-one T at exponent n, each checked exactly."""
    if n < 1:
        raise ValueError("n must be positive")
    p = profile(T)
    Ts = T.adjoint()
    TsT = Ts @ T
    TTs = T @ Ts
    sn = GaussianRational(p.s ** n)
    sn1 = GaussianRational(p.s ** (n - 1))
    TsT_n = TsT ** n
    TTs_n = TTs ** n
    return {
        "(T*T)^n = s^(n-1) T*T": TsT_n == TsT.scale(sn1),
        "(TT*)^n = s^(n-1) TT*": TTs_n == TTs.scale(sn1),
        "(TT*)^n T = s^n T": TTs_n @ T == T.scale(sn),
        "(T*T)^n T* = s^n T*": TsT_n @ Ts == Ts.scale(sn),
        "T^n = a^(n-1) T": T ** n == T.scale(p.a ** (n - 1)),
    }


def pt3_check(T: ExactMatrix, n: int) -> bool:
    return all(pt3_identities(T, n).values())
