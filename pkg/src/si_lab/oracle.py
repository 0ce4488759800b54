"""Brute-force semigroup closure and exact ideal checks.

The closure is enumerated breadth first by word length over a fixed letter
set (the generators, plus their adjoints when asked). Once a layer adds
nothing, the stored set is closed under multiplication and every answer about
ideals is exact. Otherwise answers are either backed by an explicit witness or
reported as inconclusive.

Principal ideals are reachability sets in the two-sided Cayley graph: the
ideal of A is A together with everything reachable by multiplying by letters
on the left and right.
"""
from __future__ import annotations

import os
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .exact_arith import DimensionError, ExactMatrix

YES, NO, INCONCLUSIVE = "Yes", "No", "Inconclusive"

DEFAULT_MAX_ELEMS = 20000


def default_max_elems() -> int:
    env = os.environ.get("SI_LAB_MAX_ELEMS")
    return int(env) if env else DEFAULT_MAX_ELEMS


def _labels(n_generators: int, with_adjoints: bool) -> list[str]:
    if n_generators == 1:
        base = ["T"]
    else:
        base = [chr(ord("A") + i) for i in range(n_generators)]
    if n_generators > 26:
        raise ValueError("at most 26 generators")
    out = []
    for b in base:
        out.append(b)
        if with_adjoints:
            out.append(b.lower())
    return out


@dataclass
class ClosureResult:
    generators: list[ExactMatrix]
    letters: list[ExactMatrix]
    labels: list[str]
    elements: list[ExactMatrix]
    words: list[tuple[int, ...]]
    index: dict[bytes, int]
    saturated: bool
    max_len_reached: int
    include_adjoints: bool
    _right: list[list[int]] | None = field(default=None, repr=False)
    _left: list[list[int]] | None = field(default=None, repr=False)

    @property
    def generator_count(self) -> int:
        return len(self.generators)

    @property
    def dim(self) -> int:
        return self.letters[0].rows

    def __len__(self):
        return len(self.elements)

    def find(self, A: ExactMatrix) -> int | None:
        return self.index.get(A.key())

    def word_text(self, i: int) -> str:
        return "".join(self.labels[j] for j in self.words[i])

    def letters_text(self, word: Sequence[int]) -> str:
        return "".join(self.labels[j] for j in word)

    def alphabet_description(self) -> dict:
        return {lab: ("adjoint of " + lab.upper()) if lab.islower() else "generator"
                for lab in self.labels}

    def evaluate(self, word: Sequence[int]) -> ExactMatrix | None:
        """Matrix of a letter word; None for the empty word (identity)."""
        if not word:
            return None
        out = self.letters[word[0]]
        for j in word[1:]:
            out = out @ self.letters[j]
        return out

    def contains_zero(self) -> bool:
        return any(e.is_zero() for e in self.elements)

    def is_selfadjoint_set(self) -> bool:
        return all(e.adjoint().key() in self.index for e in self.elements)

    # -- Cayley tables ---------------------------------------------------------

    def _tables(self):
        if self._right is None:
            right, left = [], []
            for e in self.elements:
                right.append([self.index.get((e @ L).key(), -1) for L in self.letters])
                left.append([self.index.get((L @ e).key(), -1) for L in self.letters])
            self._right, self._left = right, left
        return self._left, self._right

    def ideal_search(self, start: int, stop: int | None = None):
        """BFS over left/right letter multiplications from ``start``.

        Returns (reached set, parent map). Parent entries are
        (previous index, side, letter) with side 'L' or 'R'.
        """
        left, right = self._tables()
        parent: dict[int, tuple[int, str, int] | None] = {start: None}
        queue = deque([start])
        while queue:
            i = queue.popleft()
            if i == stop:
                break
            for side, table in (("L", left), ("R", right)):
                for j, nxt in enumerate(table[i]):
                    if nxt >= 0 and nxt not in parent:
                        parent[nxt] = (i, side, j)
                        queue.append(nxt)
        return set(parent), parent

    def path_words(self, parent, end: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Left and right letter words carrying the BFS root to ``end``."""
        lw: list[int] = []
        rw: list[int] = []
        node = end
        while parent[node] is not None:
            prev, side, j = parent[node]
            if side == "L":
                lw.append(j)       # walking back yields the outermost left letter first
            else:
                rw.append(j)
            node = prev
        return tuple(lw), tuple(reversed(rw))


# -- closure generation ---------------------------------------------------------

def _expand(args):
    element, letters = args
    return [element @ L for L in letters]


def closure_from_letters(letters: list[ExactMatrix], labels: list[str], generators,
                         include_adjoints: bool, max_len: int = 12,
                         max_elems: int | None = None, workers: int = 1) -> ClosureResult:
    if max_len < 1:
        raise ValueError("max_len must be positive")
    if max_elems is None:
        max_elems = default_max_elems()
    n = letters[0].rows
    for L in letters:
        if L.shape != (n, n):
            raise DimensionError("all generators must be square of the same size")

    elements: list[ExactMatrix] = []
    words: list[tuple[int, ...]] = []
    index: dict[bytes, int] = {}

    def add_layer(candidates):
        # candidates: list of (matrix, word) in generation order; first word wins
        fresh = {}
        for M, w in candidates:
            k = M.key()
            if k not in index and k not in fresh:
                fresh[k] = (M, w)
        for k in sorted(fresh):
            M, w = fresh[k]
            index[k] = len(elements)
            elements.append(M)
            words.append(w)
        return len(fresh)

    add_layer([(L, (j,)) for j, L in enumerate(letters)])
    frontier = list(range(len(elements)))
    length = 1
    saturated = False
    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        def products(front):
            jobs = [(elements[i], letters) for i in front]
            results = pool.map(_expand, jobs) if pool else map(_expand, jobs)
            cands = []
            for i, prods in zip(front, results):
                for j, M in enumerate(prods):
                    cands.append((M, words[i] + (j,)))
            return cands

        while True:
            if length >= max_len or len(elements) > max_elems:
                # probe one more layer without storing it
                cands = products(frontier)
                saturated = all(M.key() in index for M, _ in cands)
                break
            start = len(elements)
            added = add_layer(products(frontier))
            if added == 0:
                saturated = True
                break
            length += 1
            frontier = list(range(start, len(elements)))
    finally:
        if pool:
            pool.shutdown()
    return ClosureResult(list(generators), list(letters), list(labels), elements, words,
                         index, saturated, length, include_adjoints)


def generate_closure(generators: Sequence[ExactMatrix], include_adjoints: bool = True,
                     max_len: int = 12, max_elems: int | None = None,
                     workers: int = 1) -> ClosureResult:
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    letters = []
    for g in gens:
        if not g.is_square():
            raise DimensionError("generators must be square")
        letters.append(g)
        if include_adjoints:
            letters.append(g.adjoint())
    labels = _labels(len(gens), include_adjoints)
    return closure_from_letters(letters, labels, gens, include_adjoints,
                                max_len, max_elems, workers)


def direct_sum_closure(S1: ClosureResult, S2: ClosureResult, max_len: int = 12,
                       max_elems: int | None = None) -> ClosureResult:
    """Closure of {A (+) B : A in S1, B in S2} for unital S1, S2.

    Uses the lifted letters L (+) I and I (+) L', which generate the direct sum
    as soon as both factors contain their identity.
    """
    from .transforms import direct_sum

    I1 = ExactMatrix.identity(S1.dim)
    I2 = ExactMatrix.identity(S2.dim)
    if S1.find(I1) is None or S2.find(I2) is None:
        raise ValueError("direct sum closure needs unital factors")
    letters = [direct_sum(L, I2) for L in S1.letters] + [direct_sum(I1, L) for L in S2.letters]
    labels = [f"{lab}1" for lab in S1.labels] + [f"{lab}2" for lab in S2.labels]
    return closure_from_letters(letters, labels, letters, False, max_len, max_elems)


# -- answers --------------------------------------------------------------------

@dataclass
class OracleAnswer:
    value: str
    certificate: dict | None = None
    note: str = ""
    exact: bool = True

    def to_json(self):
        out = {"value": self.value, "exact": self.exact}
        if self.certificate is not None:
            out["certificate"] = self.certificate
        if self.note:
            out["note"] = self.note
        return out


def principal_ideal(S: ClosureResult, A) -> set[int]:
    """Indices of (A) = A u SA u AS u SAS among the stored elements."""
    i = A if isinstance(A, int) else S.find(A)
    if i is None or not (0 <= i < len(S.elements)):
        raise KeyError("element is not in the closure")
    reached, _ = S.ideal_search(i)
    return reached


def _si_certificate(S: ClosureResult, i: int, parent, target: int) -> dict:
    lw, rw = S.path_words(parent, target)
    return {"element": S.word_text(i), "left": S.letters_text(lw),
            "right": S.letters_text(rw), "adjoint": S.word_text(target)}


def check_si(S: ClosureResult) -> OracleAnswer:
    """Every principal ideal closed under adjoints?"""
    certs = []
    missing = []
    fast = S.saturated and S.is_selfadjoint_set()
    for i, A in enumerate(S.elements):
        As = A.adjoint()
        if As == A:
            continue
        j = S.find(As)
        if fast:
            # in a selfadjoint semigroup, (A) is selfadjoint iff A* lies in (A)
            reached, parent = S.ideal_search(i, stop=j)
            if j not in reached:
                return OracleAnswer(NO, {"element": S.word_text(i)},
                                    "adjoint of this element is not in its principal ideal")
            certs.append(_si_certificate(S, i, parent, j))
            continue
        reached, parent = S.ideal_search(i)
        if S.saturated:
            for b in sorted(reached):
                kb = S.elements[b].adjoint().key()
                if S.index.get(kb) not in reached:
                    return OracleAnswer(NO, {"element": S.word_text(i), "offending": S.word_text(b)},
                                        "principal ideal is not closed under adjoints")
            if j is not None:
                certs.append(_si_certificate(S, i, parent, j))
        elif j is not None and j in reached:
            certs.append(_si_certificate(S, i, parent, j))
        else:
            missing.append(S.word_text(i))
    if S.saturated:
        return OracleAnswer(YES, {"count": len(certs), "pairs": certs[:8]})
    if missing:
        return OracleAnswer(INCONCLUSIVE, {"uncertified": missing[:8]},
                            f"closure not saturated; {len(missing)} elements lack an adjoint certificate",
                            exact=False)
    return OracleAnswer(YES, {"count": len(certs), "pairs": certs[:8]},
                        "closure not saturated; every stored element has a certificate, "
                        "elements beyond the bound are unchecked", exact=False)


def coordinate_blocks(letters: Sequence[ExactMatrix]) -> list[list[int]]:
    """Finest block-diagonal partition of coordinates respected by every letter."""
    n = letters[0].rows
    parent = list(range(n))

    def root(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for L in letters:
        for r in range(n):
            for c in range(n):
                if not L[r, c].is_zero():
                    parent[root(r)] = root(c)
    groups: dict[int, list[int]] = {}
    for x in range(n):
        groups.setdefault(root(x), []).append(x)
    return sorted(groups.values())


def _block_is_zero(M: ExactMatrix, block: list[int]) -> bool:
    return all(M[r, c].is_zero() for r in block for c in block)


def block_zero_separation(S: ClosureResult) -> dict | None:
    """Find nonzero B and A with a block that vanishes on B but not on A.

    All letters are block diagonal, so every product keeps that block zero:
    the whole ideal of B misses A, making (B) a proper nonzero ideal.
    """
    blocks = coordinate_blocks(S.letters)
    if len(blocks) < 2:
        return None
    for bi, block in enumerate(blocks):
        zero_on = [i for i, e in enumerate(S.elements) if not e.is_zero() and _block_is_zero(e, block)]
        live = [i for i, e in enumerate(S.elements) if not _block_is_zero(e, block)]
        if zero_on and live:
            return {"ideal_of": S.word_text(zero_on[0]), "missing": S.word_text(live[0]),
                    "block": block}
    return None


def check_simple(S: ClosureResult) -> OracleAnswer:
    nonzero = [i for i, e in enumerate(S.elements) if not e.is_zero()]
    if S.saturated:
        total = len(S.elements)
        for i in nonzero:
            reached, _ = S.ideal_search(i)
            if len(reached) != total:
                miss = min(set(range(total)) - reached)
                cert = {"ideal_of": S.word_text(i), "missing": S.word_text(miss)}
                sep = block_zero_separation(S)
                if sep is not None:
                    cert["block_zero"] = sep
                return OracleAnswer(NO, cert, "proper nonzero principal ideal")
        return OracleAnswer(YES, None, "every nonzero principal ideal is the whole semigroup")
    sep = block_zero_separation(S)
    if sep is not None:
        return OracleAnswer(NO, {"block_zero": sep},
                            "a coordinate block vanishes on an ideal but not on the semigroup")
    return OracleAnswer(INCONCLUSIVE, None, "closure not saturated", exact=False)


def find_certificate(S: ClosureResult, target: ExactMatrix, A: ExactMatrix,
                     max_len: int = 12, max_states: int = 50000):
    """Shortest letter words (X, Y) with X A Y = target, or None.

    Searches matrices directly, so it is not limited to the stored closure.
    Empty words stand for the identity.
    """
    if target.shape != A.shape or A.rows != S.dim:
        raise DimensionError("target and A must match the closure dimension")
    goal = target.key()
    start = A.key()
    if start == goal:
        return (), ()
    seen = {start}
    layer = [(A, (), ())]
    for _ in range(max_len):
        nxt = []
        for M, lw, rw in layer:
            for side in ("L", "R"):
                for j, L in enumerate(S.letters):
                    P = L @ M if side == "L" else M @ L
                    k = P.key()
                    if k in seen:
                        continue
                    nl = (j,) + lw if side == "L" else lw
                    nr = rw + (j,) if side == "R" else rw
                    if k == goal:
                        return nl, nr
                    seen.add(k)
                    nxt.append((P, nl, nr))
                    if len(seen) > max_states:
                        return None
        if not nxt:
            return None
        layer = nxt
    return None
