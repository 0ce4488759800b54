"""Words in T, T* and their reduction to scaled monomials for rank-one T.

For rank-one T with a = tr T and s = ||T||^2 every word collapses to
a^p conj(a)^q s^k B with B one of T, T*, TT*, T*T (or to 0 when a = 0 and a
square T.T or T*.T* appears). Reduction is one left-to-right pass.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact_arith import ExactMatrix, GaussianRational
from .rankone import RankOneProfile, require_rank_one


class Letter(enum.Enum):
    X = "T"
    XSTAR = "t"

    def star(self) -> "Letter":
        return Letter.XSTAR if self is Letter.X else Letter.X


X, XSTAR = Letter.X, Letter.XSTAR


class Base(enum.Enum):
    T = "T"
    TSTAR = "T*"
    TTSTAR = "TT*"
    TSTART = "T*T"
    ZERO = "0"


_BASE_ADJOINT = {
    Base.T: Base.TSTAR, Base.TSTAR: Base.T,
    Base.TTSTAR: Base.TTSTAR, Base.TSTART: Base.TSTART, Base.ZERO: Base.ZERO,
}


class WordSyntaxError(ValueError):
    pass


Word = tuple  # tuple[Letter, ...]


def parse_word(text: str) -> Word:
    """'TtT' -> (X, XSTAR, X)."""
    letters = []
    for pos, ch in enumerate(text):
        if ch == "T":
            letters.append(X)
        elif ch == "t":
            letters.append(XSTAR)
        elif ch.isspace():
            continue
        else:
            raise WordSyntaxError(f"bad letter {ch!r} at position {pos}; use T and t")
    if not letters:
        raise WordSyntaxError("empty word")
    return tuple(letters)


def word_text(w: Sequence[Letter]) -> str:
    return "".join(l.value for l in w)


def adjoint_word(w: Sequence[Letter]) -> Word:
    return tuple(l.star() for l in reversed(w))


def all_words(max_len: int, min_len: int = 1) -> Iterable[Word]:
    for n in range(min_len, max_len + 1):
        yield from itertools.product((X, XSTAR), repeat=n)


@dataclass(frozen=True)
class ScaledMonomial:
    p: int
    q: int
    k: int
    base: Base

    def __post_init__(self):
        if self.base is Base.ZERO and (self.p or self.q or self.k):
            raise ValueError("zero monomial carries no scalar")
        if min(self.p, self.q, self.k) < 0:
            raise ValueError("exponents must be non-negative")

    def adjoint(self) -> "ScaledMonomial":
        return ScaledMonomial(self.q, self.p, self.k, _BASE_ADJOINT[self.base])

    def degree(self) -> int:
        return self.p + self.q + self.k

    def __str__(self):
        if self.base is Base.ZERO:
            return "0"
        parts = []
        if self.p:
            parts.append(f"a^{self.p}")
        if self.q:
            parts.append(f"abar^{self.q}")
        if self.k:
            parts.append(f"s^{self.k}")
        parts.append(self.base.value)
        return " · ".join(parts)

    def to_json(self):
        return {"p": self.p, "q": self.q, "k": self.k, "base": self.base.value}


ZERO_MONOMIAL = ScaledMonomial(0, 0, 0, Base.ZERO)

_START = {X: Base.T, XSTAR: Base.TSTAR}


def _step(state: ScaledMonomial, letter: Letter, a_zero: bool) -> ScaledMonomial:
    p, q, k, b = state.p, state.q, state.k, state.base
    if b is Base.ZERO:
        return state
    if letter is X:
        if b is Base.T:            # T.T = aT
            return ZERO_MONOMIAL if a_zero else ScaledMonomial(p + 1, q, k, Base.T)
        if b is Base.TSTAR:        # T*.T
            return ScaledMonomial(p, q, k, Base.TSTART)
        if b is Base.TTSTAR:       # TT*T = sT
            return ScaledMonomial(p, q, k + 1, Base.T)
        # T*T.T = T*(aT)
        return ZERO_MONOMIAL if a_zero else ScaledMonomial(p + 1, q, k, Base.TSTART)
    if b is Base.T:
        return ScaledMonomial(p, q, k, Base.TTSTAR)
    if b is Base.TSTAR:
        return ZERO_MONOMIAL if a_zero else ScaledMonomial(p, q + 1, k, Base.TSTAR)
    if b is Base.TTSTAR:           # TT*.T* = T(abar T*)
        return ZERO_MONOMIAL if a_zero else ScaledMonomial(p, q + 1, k, Base.TTSTAR)
    return ScaledMonomial(p, q, k + 1, Base.TSTAR)  # T*TT* = sT*


def reduce_rank_one(w: Sequence[Letter], prof: RankOneProfile) -> ScaledMonomial:
    if not w:
        raise ValueError("empty word")
    a_zero = prof.a.is_zero()
    state = ScaledMonomial(0, 0, 0, _START[w[0]])
    for letter in w[1:]:
        state = _step(state, letter, a_zero)
    return state


def evaluate_word(w: Sequence[Letter], T: ExactMatrix) -> ExactMatrix:
    if not T.is_square():
        raise ValueError("word evaluation needs a square matrix")
    if not w:
        raise ValueError("empty word")
    Ts = T.adjoint()
    pick = {X: T, XSTAR: Ts}
    out = pick[w[0]]
    for letter in w[1:]:
        out = out @ pick[letter]
    return out


def monomial_scalar(sm: ScaledMonomial, prof: RankOneProfile) -> GaussianRational:
    a = prof.a
    return a ** sm.p * a.conjugate() ** sm.q * GaussianRational(prof.s ** sm.k)


def monomial_value(sm: ScaledMonomial, T: ExactMatrix, prof: RankOneProfile | None = None) -> ExactMatrix:
    if prof is None:
        from .rankone import profile
        prof = profile(T)
    else:
        require_rank_one(T)
    if sm.base is Base.ZERO:
        return ExactMatrix.zeros(T.rows)
    Ts = T.adjoint()
    base = {Base.T: T, Base.TSTAR: Ts, Base.TTSTAR: T @ Ts, Base.TSTART: Ts @ T}[sm.base]
    return base.scale(monomial_scalar(sm, prof))


def list_shape_allows(sm: ScaledMonomial, prof: RankOneProfile) -> bool:
    """Is the monomial one of the shapes that reduction can actually produce?"""
    if sm.base is Base.ZERO:
        return prof.a.is_zero()
    if prof.a.is_zero():
        return sm.p == 0 and sm.q == 0
    # a power of T with no s factor never picks up abar, and symmetrically
    if sm.base is Base.T and sm.k == 0:
        return sm.q == 0
    if sm.base is Base.TSTAR and sm.k == 0:
        return sm.p == 0
    return True


def enumerate_monomials(prof: RankOneProfile, max_total_degree: int) -> set[ScaledMonomial]:
    out = set()
    if prof.a.is_zero():
        out.add(ZERO_MONOMIAL)
    for base in (Base.T, Base.TSTAR, Base.TTSTAR, Base.TSTART):
        for total in range(max_total_degree + 1):
            for p in range(total + 1):
                for q in range(total - p + 1):
                    sm = ScaledMonomial(p, q, total - p - q, base)
                    if list_shape_allows(sm, prof):
                        out.add(sm)
    return out


def soundness_mismatches(T: ExactMatrix, max_len: int = 10) -> list[Word]:
    """Every word up to max_len whose reduced value differs from direct evaluation.

    Words are walked depth first so each prefix product is computed once.
    """
    from .rankone import profile

    prof = profile(T)
    Ts = T.adjoint()
    pick = {X: T, XSTAR: Ts}
    bad: list[Word] = []
    cache: dict[ScaledMonomial, ExactMatrix] = {}

    def value(sm):
        v = cache.get(sm)
        if v is None:
            v = cache[sm] = monomial_value(sm, T, prof)
        return v

    def walk(word, mat, state):
        if value(state) != mat:
            bad.append(word)
        if len(word) == max_len:
            return
        for letter in (X, XSTAR):
            walk(word + (letter,), mat @ pick[letter], _step(state, letter, prof.a.is_zero()))

    for first in (X, XSTAR):
        walk((first,), pick[first], ScaledMonomial(0, 0, 0, _START[first]))
    return bad
