from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from si_lab.exact_arith import GaussianRational as G
from si_lab.scalar_solver import (ModulusSolution, TraceNormWitness, decide_trace_norm,
                                  explain_trace_norm, minimal_modulus_solution,
                                  naive_trace_norm_search, positivity_progression, verify_witness)

from strategies import seeded_pairs


def test_minimal_modulus_solution():
    assert minimal_modulus_solution(F(16, 25), F(25, 16)) == ModulusSolution.minimal(2, 1)
    assert minimal_modulus_solution(1, 1).kind == "all"
    assert minimal_modulus_solution(F(25, 169), 1).kind == "none"
    assert minimal_modulus_solution(F(4), F(1, 2)).kind == "minimal"   # 4^p 2^-2l: p = l
    assert minimal_modulus_solution(F(4), F(2)).kind == "none"         # same sign exponents
    assert minimal_modulus_solution(F(4, 9), F(3, 2)) == ModulusSolution.minimal(1, 1)
    assert minimal_modulus_solution(F(4, 9), F(3, 4)).kind == "none"   # primes 2 and 3 disagree
    with pytest.raises(ValueError):
        minimal_modulus_solution(0, 1)


def test_minimal_modulus_generates_all_solutions():
    # (p, l) with r^p s^2l = 1 for r = 8, s = 1/4: 2^(3p - 4l) = 1 -> (4k, 3k)
    sol = minimal_modulus_solution(F(8), F(1, 4))
    assert (sol.p0, sol.l0) == (4, 3)
    found = [(p, l) for p in range(1, 30) for l in range(1, 30) if F(8) ** p * F(1, 4) ** (2 * l) == 1]
    assert found == [(4 * k, 3 * k) for k in range(1, 8) if 4 * k < 30 and 3 * k < 30]


def test_positivity_progression():
    assert str(positivity_progression(G(F(4, 5)))) == "Arithmetic(1)"
    assert str(positivity_progression(G(0, F(1, 2)))) == "Arithmetic(4)"
    assert str(positivity_progression(G(F(3, 5), F(4, 5)))) == "ZeroOnly"
    assert str(positivity_progression(G(-2))) == "Arithmetic(2)"
    assert str(positivity_progression(G(1, 1))) == "Arithmetic(8)"   # (1+i)^4 = -4
    with pytest.raises(ValueError):
        positivity_progression(G(0))


@given(st.integers(-5, 5), st.integers(-5, 5), st.integers(1, 5))
def test_progression_matches_direct_powers(x, y, d):
    a = G(F(x, d), F(y, d))
    if a.is_zero():
        return
    prog = positivity_progression(a)
    for k in range(1, 17):
        assert prog.contains(k) == (a ** k).is_positive_real()


def test_decide_examples():
    assert decide_trace_norm(G(F(4, 5)), F(25, 16)).as_tuple() == (1, 1, 1)
    assert decide_trace_norm(G(F(3, 13), F(4, 13)), 1) is None
    assert decide_trace_norm(G(1), 1).as_tuple() == (1, 0, 1)
    assert decide_trace_norm(G(0, F(1, 2)), 4).as_tuple() == (1, 1, 1)
    d = explain_trace_norm(G(F(3, 13), F(4, 13)), 1)
    assert d.failed_stage == "modulus"


def test_verify_witness_examples():
    assert verify_witness(G(F(4, 5)), F(25, 16), TraceNormWitness(1, 1, 1))
    assert verify_witness(G(F(4, 5)), F(25, 16), TraceNormWitness(2, 0, 1))
    assert not verify_witness(G(F(3, 5)), 1, TraceNormWitness(1, 1, 1))


def test_witness_rejects_empty_exponents():
    with pytest.raises(ValueError):
        TraceNormWitness(0, 0, 1)


def test_solver_agrees_with_exhaustive_search():
    pairs = seeded_pairs()
    solvable = 0
    for a, s in pairs:
        w = decide_trace_norm(a, s)
        naive = naive_trace_norm_search(a, s, 40)
        assert (w is None) == (naive is None), (a, s, w, naive)
        if w is not None:
            solvable += 1
            assert verify_witness(a, s, w)
            # the solver's witness is the smallest in (l, m+n, |m-n|)
            assert w.sort_key() == naive.sort_key()
    assert 20 < solvable < 180


@settings(max_examples=200, deadline=None)
@given(st.integers(-9, 9), st.integers(-9, 9), st.integers(1, 9), st.integers(1, 9), st.integers(1, 9))
def test_witnessed_pairs_satisfy_norm_relation(x, y, d, sn, sd):
    a, s = G(F(x, d), F(y, d)), F(sn, sd)
    if a.is_zero():
        return
    w = decide_trace_norm(a, s)
    if w is None:
        return
    assert verify_witness(a, s, w)
    # |a| <= 1 exactly when s >= 1
    assert (a.abs_sq() <= 1) == (s >= 1)
    # a non-normal rank-one partial isometry never meets the trace-norm condition
    if s > a.abs_sq():
        assert s != 1 or not a.is_real()
