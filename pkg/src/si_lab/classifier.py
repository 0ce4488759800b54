"""Decision tree from exact invariants to (si, simple) verdicts.

Each verdict carries the labels of the results it relies on. Where a result
gives a constructive reason (an explicit T* = X T Y) the words are attached
and re-checked by evaluation before they are returned.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact_arith import (ExactMatrix, PowerCheck, format_gaussian, is_power_partial_isometry,
                          predicates)
from .rankone import RankOneProfile
from .scalar_solver import TraceNormWitness, decide_trace_norm
from .word_engine import evaluate_word, parse_word

YES, NO, UNKNOWN = "Yes", "No", "Unknown"

TAG_ZERO = "zero-semigroup convention"
TAG_SA = "Remark Rsa(i)"
TAG_SA_SIMPLE = "derived-selfadjoint-criterion"
TAG_TSA = "Theorem Tsa"
TAG_N2 = "Theorem N2"
TAG_TN1 = "Theorem TN1"
TAG_TR1 = "Theorem TR1"
TAG_TR2 = "Theorem TR2"
TAG_TR2_TN = "Theorem TR2 trace-norm branch"
TAG_TNONSIMPLE = "Theorem Tnonsimple"
TAG_EE = "Example EE"
TAG_CPP = "Corollary CPP"
TAG_ENS = "Example ENS"


@dataclass
class Verdict:
    si: str
    simple: str
    basis: list[str]
    invariants: dict = field(default_factory=dict)
    witness: TraceNormWitness | None = None
    certificate: tuple[str, str] | None = None   # (X, Y) with T* = X T Y; "" is the identity
    note: str = ""

    def __post_init__(self):
        if self.si == NO and self.simple != NO:
            raise AssertionError("a non-SI semigroup cannot be simple")
        if self.simple == YES and self.si != YES:
            raise AssertionError("simple semigroups are SI")
        if (self.si != UNKNOWN or self.simple != UNKNOWN) and not self.basis:
            raise AssertionError("a decided verdict needs a basis")

    def pair(self):
        return self.si, self.simple

    def to_json(self, with_invariants=True):
        out = {"si": self.si, "simple": self.simple, "basis": list(self.basis)}
        if self.witness is not None:
            out["witness"] = {"m": self.witness.m, "n": self.witness.n, "l": self.witness.l}
        if self.certificate is not None:
            out["certificate"] = {"left": self.certificate[0], "right": self.certificate[1]}
        if self.note:
            out["note"] = self.note
        if with_invariants:
            out["invariants"] = dict(self.invariants)
        return out


def compute_invariants(T: ExactMatrix) -> dict:
    flags = predicates(T)
    ppi = is_power_partial_isometry(T)
    return {
        "dim": T.rows,
        "rank": T.rank(),
        "trace": format_gaussian(T.trace()),
        "norm_sq": _frac(T.frobenius_norm_sq()),
        "selfadjoint": flags.selfadjoint,
        "normal": flags.normal,
        "partial_isometry": flags.partial_isometry,
        "power_partial_isometry": ppi.status.value,
    }


def _frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _certificate_holds(T: ExactMatrix, left: str, right: str) -> bool:
    middle = T
    if left:
        middle = evaluate_word(parse_word(left), T) @ middle
    if right:
        middle = middle @ evaluate_word(parse_word(right), T)
    return middle == T.adjoint()


def trace_norm_certificate(w: TraceNormWitness) -> tuple[str, str]:
    """(T*)^(n+1) T T^m T* (TT*)^(l-1) collapses to abar^n a^m s^l T* = T*."""
    return "t" * (w.n + 1), "T" * w.m + "t" + "Tt" * (w.l - 1)


def quick_reject(T: ExactMatrix, norm_sq_bound=None):
    """Norm obstruction: if every element has norm < 1 then T* = X T Y is impossible.

    Any product X T Y with a nonempty X or Y is strictly shorter than T in norm,
    so a nonselfadjoint T of norm < 1 never has T* in its ideal. The Frobenius
    norm bounds the operator norm, which is what is used when no bound is given.
    Returns a small dict describing the rejection, or None.
    """
    if T == T.adjoint():
        return None
    bound = T.frobenius_norm_sq() if norm_sq_bound is None else Fraction(norm_sq_bound)
    if bound < 1:
        return {"si": NO, "norm_sq_bound": _frac(bound), "basis": TAG_EE}
    return None


def classify(T: ExactMatrix) -> Verdict:
    if not T.is_square():
        raise ValueError("classification needs a square matrix")
    inv = compute_invariants(T)
    if T.is_zero():
        return Verdict(YES, YES, [TAG_ZERO], inv)

    Ts = T.adjoint()
    rank = inv["rank"]
    if inv["selfadjoint"]:
        simple = YES if (T @ T == T or T @ T @ T == T) else NO
        basis = [TAG_SA, TAG_SA_SIMPLE]
        if rank == 1:
            basis.append(TAG_TSA)
        return Verdict(YES, simple, basis, inv)

    if inv["normal"]:
        TsT = Ts @ T
        ok = TsT @ TsT == TsT
        basis = [TAG_N2] + ([TAG_TN1] if rank == 1 else [])
        v = YES if ok else NO
        return Verdict(v, v, basis, inv)

    if rank == 1:
        prof = RankOneProfile(T.trace(), T.frobenius_norm_sq(), T.rows)
        if prof.a.is_zero():
            v = YES if prof.s == 1 else NO
            cert = ("t", "t") if v == YES else None
            return Verdict(v, v, [TAG_TR1], inv, certificate=cert)
        w = decide_trace_norm(prof.a, prof.s)
        if w is not None:
            cert = trace_norm_certificate(w)
            assert _certificate_holds(T, *cert), "trace-norm certificate failed to evaluate"
            if prof.s == 1 and prof.a.is_real():
                raise AssertionError("trace-norm witness and the real-trace partial isometry case overlap")
            return Verdict(YES, YES, [TAG_TR2_TN], inv, witness=w, certificate=cert)
        if prof.a.is_real() and prof.s == 1:
            # T* = T* T T* for a partial isometry
            assert _certificate_holds(T, "t", "t")
            return Verdict(YES, NO, [TAG_TNONSIMPLE], inv, certificate=("t", "t"))
        return Verdict(NO, NO, [TAG_TR2], inv)

    if quick_reject(T) is not None:
        return Verdict(NO, NO, [TAG_EE], inv,
                       note="every element has operator norm below 1")

    ppi = is_power_partial_isometry(T)
    if ppi.status is not PowerCheck.FALSE:
        power = T ** T.rows
        if power.is_zero():
            return Verdict(YES, UNKNOWN, [TAG_CPP], inv,
                           note="nilpotent power partial isometry; simplicity left to the closure oracle")
        # unitary part is nonzero and some truncated shift block is nontrivial (T is not normal):
        # the ideal of T^dim vanishes on the nilpotent part, so it misses T
        return Verdict(YES, NO, [TAG_CPP, TAG_ENS], inv)

    return Verdict(UNKNOWN, UNKNOWN, [], inv, note="outside the covered cases; run the closure oracle")


def combine_direct_sum(v1: Verdict, unital1: bool, zero_free1: bool,
                       v2: Verdict, unital2: bool, zero_free2: bool) -> Verdict:
    if not (unital1 and unital2):
        raise ValueError("direct-sum rules need both semigroups to contain their identity")
    if v1.si == NO or v2.si == NO:
        si = NO
    elif v1.si == YES and v2.si == YES:
        si = YES
    else:
        si = UNKNOWN
    if si == NO:
        simple = NO
    elif v1.simple == YES and v2.simple == YES and zero_free1 and zero_free2:
        simple = YES
    else:
        simple = UNKNOWN
    basis = ["Proposition TDS"] if si != UNKNOWN else []
    if simple == YES:
        basis.append("Proposition T3(ii)")
    return Verdict(si, simple, basis)
