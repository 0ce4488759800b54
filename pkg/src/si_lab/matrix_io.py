"""Entry grammar, matrix documents and closure dumps."""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .exact_arith import ExactMatrix, GaussianRational, format_gaussian


class EntryParseError(ValueError):
    def __init__(self, text: str, pos: int, msg: str):
        super().__init__(f"cannot parse entry {text!r} at position {pos}: {msg}")
        self.text = text
        self.pos = pos


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def skip_ws(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.i] if self.i < len(self.text) else ""

    def take(self) -> str:
        c = self.peek()
        self.i += 1
        return c

    def fail(self, msg: str):
        self.skip_ws()
        raise EntryParseError(self.text, self.i, msg)

    def integer(self) -> int:
        self.skip_ws()
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if start == self.i:
            self.fail("expected digits")
        return int(self.text[start:self.i])

    def rational(self) -> Fraction:
        num = self.integer()
        if self.peek() == "/":
            self.take()
            den_pos = self.i
            den = self.integer()
            if den == 0:
                raise EntryParseError(self.text, den_pos, "zero denominator")
            return Fraction(num, den)
        return Fraction(num)


def parse_entry(text: str) -> GaussianRational:
    """Parse ``3/5``, ``4/5+3/5i``, ``-i``, ``2i``, ``1-i`` and friends.

    A bare ``i`` (optionally signed) stands for coefficient 1.
    """
    sc = _Scanner(text)
    sign = 1
    if sc.peek() in "+-" and sc.peek():
        sign = -1 if sc.take() == "-" else 1
    if sc.peek() == "i":
        sc.take()
        if sc.peek():
            sc.fail("trailing characters after imaginary unit")
        return GaussianRational(0, sign)
    first = sign * sc.rational()
    nxt = sc.peek()
    if nxt == "":
        return GaussianRational(first)
    if nxt == "i":
        sc.take()
        if sc.peek():
            sc.fail("trailing characters after imaginary unit")
        return GaussianRational(0, first)
    if nxt not in "+-":
        sc.fail(f"unexpected character {nxt!r}")
    isign = -1 if sc.take() == "-" else 1
    if sc.peek() == "i":
        im = Fraction(1)
    else:
        im = sc.rational()
    if sc.peek() != "i":
        sc.fail("expected 'i' after imaginary part")
    sc.take()
    if sc.peek():
        sc.fail("trailing characters")
    return GaussianRational(first, isign * im)


def format_entry(z: GaussianRational) -> str:
    return format_gaussian(z)


def parse_inline(text: str) -> ExactMatrix:
    """``"0,1;0,0"`` style: rows split on ';', entries on ','."""
    rows = [r for r in text.split(";")]
    return ExactMatrix.from_rows([[parse_entry(e) for e in r.split(",")] for r in rows])


def matrix_from_document(doc: dict) -> tuple[str | None, ExactMatrix]:
    if not isinstance(doc, dict) or "rows" not in doc:
        raise ValueError("matrix document needs a 'rows' field")
    rows = doc["rows"]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ValueError("'rows' must be a non-empty list of lists")
    parsed = [[parse_entry(str(e)) for e in r] for r in rows]
    return doc.get("name"), ExactMatrix.from_rows(parsed)


def load_matrix_file(path) -> tuple[str | None, ExactMatrix]:
    with open(Path(path)) as fh:
        return matrix_from_document(json.load(fh))


def matrix_to_rows(A: ExactMatrix) -> list[list[str]]:
    return [[format_entry(z) for z in A.row(i)] for i in range(A.rows)]


def matrix_document(A: ExactMatrix, name: str | None = None) -> dict:
    doc = {"rows": matrix_to_rows(A)}
    if name is not None:
        doc = {"name": name, **doc}
    return doc


def closure_dump(closure) -> dict:
    """JSON-ready dump of a ClosureResult."""
    dim = closure.elements[0].rows if closure.elements else None
    return {
        "dim": dim,
        "generators": [matrix_to_rows(g) for g in closure.generators],
        "alphabet": closure.alphabet_description(),
        "saturated": closure.saturated,
        "max_len_reached": closure.max_len_reached,
        "element_count": len(closure.elements),
        "elements": [
            {"word": closure.word_text(i), "rows": matrix_to_rows(e)}
            for i, e in enumerate(closure.elements)
        ],
    }
