"""Built-in named matrices with the verdict each one is expected to get."""
from __future__ import annotations

from dataclasses import dataclass

from .exact_arith import ExactMatrix


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    rows: tuple
    si: str
    simple: str
    source: str
    family: str

    def matrix(self) -> ExactMatrix:
        return ExactMatrix.from_rows([list(r) for r in self.rows])


def _e(name, rows, si, simple, family, source):
    return CorpusEntry(name, tuple(tuple(r) for r in rows), si, simple, source, family)


Y, N, U = "Yes", "No", "Unknown"

CORPUS = [
    # nilpotent rank one: SI and simple exactly when the norm is 1
    _e("nilpotent-e12", [[0, 1], [0, 0]], Y, Y, "nilpotent", "Theorem TR1, norm 1"),
    _e("nilpotent-e12-scaled2", [[0, 2], [0, 0]], N, N, "nilpotent", "Theorem TR1, norm 2"),
    _e("nilpotent-e21-half", [[0, 0], ["1/2", 0]], N, N, "nilpotent", "Theorem TR1, norm 1/2"),
    _e("nilpotent-e12-i", [[0, "i"], [0, 0]], Y, Y, "nilpotent", "Theorem TR1, unimodular entry"),
    _e("nilpotent-3x3-pythagorean", [[0, "3/5", "4/5"], [0, 0, 0], [0, 0, 0]], Y, Y, "nilpotent",
       "Theorem TR1, norm 1 in dimension 3"),
    # selfadjoint
    _e("projection-e11", [[1, 0], [0, 0]], Y, Y, "selfadjoint", "rank-one projection"),
    _e("scaled-projection-half", [[("1/2"), 0], [0, 0]], Y, N, "selfadjoint", "T not in (T^2)"),
    _e("negative-projection", [[-1, 0], [0, 0]], Y, Y, "selfadjoint", "trace -1, T^3 = T"),
    _e("reflection-diag", [[1, 0], [0, -1]], Y, Y, "selfadjoint", "T^3 = T, two-element closure"),
    _e("selfadjoint-half-one", [["1/2", 0], [0, 1]], Y, N, "selfadjoint", "powers never repeat"),
    _e("identity-2", [[1, 0], [0, 1]], Y, Y, "selfadjoint", "trivial group"),
    _e("swap", [[0, 1], [1, 0]], Y, Y, "selfadjoint", "involution"),
    # rank one, real trace, norm 1: SI but not simple
    _e("rns-3-4-5", [["3/5", "4/5"], [0, 0]], Y, N, "rns", "Theorem Tnonsimple"),
    _e("rns-5-12-13", [["5/13", "12/13"], [0, 0]], Y, N, "rns", "Theorem Tnonsimple"),
    _e("rns-negative-trace", [["-4/5", "3/5"], [0, 0]], Y, N, "rns", "Theorem Tnonsimple, trace < 0"),
    # nonreal trace, norm 1, |trace| < 1: not SI
    _e("example-e-gaussian", [["3/13+4/13i", "12/13"], [0, 0]], N, N, "example-e",
       "modulus equation unsolvable"),
    _e("example-e-imaginary", [["3/5i", "4/5"], [0, 0]], N, N, "example-e",
       "modulus equation unsolvable"),
    # trace-norm condition holds: SI and simple
    _e("trace-norm-4-5", [["4/5", "3/5+3/4i"], [0, 0]], Y, Y, "trace-norm", "witness (1,1,1)"),
    _e("trace-norm-negative", [["-4/5", "3/5+3/4i"], [0, 0]], Y, Y, "trace-norm", "witness (1,1,1)"),
    _e("trace-norm-imaginary", [["2/5i", "3/2+3/10i"], [0, 0]], Y, Y, "trace-norm", "witness (1,1,2)"),
    _e("trace-norm-odd", [["4/5", "1/2+3/5i"], [0, 0]], Y, Y, "trace-norm", "witness (1,0,1)"),
    _e("similarity-A", [[1, -1], [0, 0]], N, N, "trace-norm", "similar to a projection, fails the trace-norm condition"),
    # normal, nonselfadjoint
    _e("normal-diag-i", [["i", 0], [0, 0]], Y, Y, "normal", "T*T idempotent"),
    _e("normal-diag-2i", [["2i", 0], [0, 0]], N, N, "normal", "T*T = diag(4,0) not idempotent"),
    _e("normal-diag-i-1", [["i", 0], [0, 1]], Y, Y, "normal", "unitary"),
    _e("normal-pythagorean-phase", [["3/5+4/5i", 0], [0, 0]], Y, Y, "normal", "unitary of infinite order plus 0"),
    _e("rotation-3-4-5", [["3/5", "-4/5"], ["4/5", "3/5"]], Y, Y, "normal", "unitary of infinite order"),
    # power partial isometries of rank two and more
    _e("ens-3x3", [[1, 0, 0], [0, 0, 1], [0, 0, 0]], Y, N, "ppi", "unitary part plus truncated shift"),
    _e("truncated-shift-3", [[0, 1, 0], [0, 0, 1], [0, 0, 0]], Y, U, "ppi",
       "nilpotent; closure oracle decides simplicity"),
    _e("shift-pair-j2-j2", [[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]], Y, U, "ppi",
       "nilpotent; closure oracle decides simplicity"),
    # norm obstruction
    _e("example-ee", [["1/4", "1/4"], [0, 0]], N, N, "norm", "every element has norm < 1"),
    _e("example-ee-rank2", [["1/4", "1/4"], [0, "1/4"]], N, N, "norm", "every element has norm < 1"),
    _e("pythagorean-scaled", [["6/5", "8/5"], [0, 0]], N, N, "norm", "norm 2, real trace"),
    # outside every rule
    _e("jordan-unipotent", [[1, 1], [0, 1]], U, U, "open", "no rule applies"),
]

BY_NAME = {e.name: e for e in CORPUS}

# rank-one entries used for the word-engine soundness sweep
WORD_ENGINE_SET = ["nilpotent-e12", "nilpotent-e12-scaled2", "rns-3-4-5", "trace-norm-4-5",
                   "similarity-A", "trace-norm-imaginary"]


def get(name: str) -> CorpusEntry:
    try:
        return BY_NAME[name]
    except KeyError:
        raise KeyError(f"unknown corpus entry {name!r}") from None
