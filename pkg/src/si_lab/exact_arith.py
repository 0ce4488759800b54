"""Exact Gaussian-rational scalars and dense matrices.

Nothing in here touches floating point. Rationals are ``fractions.Fraction``;
a :class:`GaussianRational` keeps its real and imaginary parts over a shared
positive denominator so that products need a single gcd to normalise.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

Rational = Fraction

Scalar = Union["GaussianRational", Fraction, int]


class DimensionError(ValueError):
    pass


def _normalise(x: int, y: int, d: int) -> tuple[int, int, int]:
    if d == 0:
        raise ZeroDivisionError("zero denominator")
    if d < 0:
        x, y, d = -x, -y, -d
    g = gcd(gcd(x, y), d)
    if g > 1:
        x, y, d = x // g, y // g, d // g
    return x, y, d


class GaussianRational:
    """The number (x + y*i) / d with gcd(x, y, d) = 1 and d > 0."""

    __slots__ = ("_x", "_y", "_d")

    def __init__(self, re=0, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        self._x, self._y, self._d = _normalise(
            re.numerator * (d // re.denominator), im.numerator * (d // im.denominator), d
        )

    @classmethod
    def _raw(cls, x: int, y: int, d: int) -> "GaussianRational":
        obj = cls.__new__(cls)
        obj._x, obj._y, obj._d = _normalise(x, y, d)
        return obj

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot convert {type(value).__name__} to GaussianRational")

    @property
    def re(self) -> Fraction:
        return Fraction(self._x, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._y, self._d)

    def parts(self) -> tuple[int, int, int]:
        """Numerators and common denominator ``(x, y, d)``."""
        return self._x, self._y, self._d

    def is_zero(self) -> bool:
        return self._x == 0 and self._y == 0

    def is_real(self) -> bool:
        return self._y == 0

    def is_positive_real(self) -> bool:
        return self._y == 0 and self._x > 0

    def conjugate(self) -> "GaussianRational":
        obj = GaussianRational.__new__(GaussianRational)
        obj._x, obj._y, obj._d = self._x, -self._y, self._d
        return obj

    def abs_sq(self) -> Fraction:
        return Fraction(self._x * self._x + self._y * self._y, self._d * self._d)

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        if self._d == o._d:
            return GaussianRational._raw(self._x + o._x, self._y + o._y, self._d)
        return GaussianRational._raw(
            self._x * o._d + o._x * self._d, self._y * o._d + o._y * self._d, self._d * o._d
        )

    __radd__ = __add__

    def __neg__(self):
        obj = GaussianRational.__new__(GaussianRational)
        obj._x, obj._y, obj._d = -self._x, -self._y, self._d
        return obj

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational._raw(
            self._x * o._x - self._y * o._y, self._x * o._y + self._y * o._x, self._d * o._d
        )

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self._x * self._x + self._y * self._y
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        # d / (x + iy) = d (x - iy) / (x^2 + y^2)
        return GaussianRational._raw(self._d * self._x, -self._d * self._y, n)

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self._x == other._x and self._y == other._y and self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self._y == 0 and Fraction(self._x, self._d) == other
        return NotImplemented

    def __hash__(self):
        return hash((self._x, self._y, self._d))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        return format_gaussian(self)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I_UNIT = GaussianRational(0, 1)


def _format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_gaussian(z: GaussianRational) -> str:
    """Canonical text form, e.g. ``3/5``, ``4/5+3/5i``, ``-i``, ``1/2-i``."""
    re, im = z.re, z.im
    if im == 0:
        return _format_fraction(re)
    if abs(im) == 1:
        im_txt = "i"
    else:
        im_txt = _format_fraction(abs(im)) + "i"
    if re == 0:
        return ("-" if im < 0 else "") + im_txt
    return _format_fraction(re) + ("-" if im < 0 else "+") + im_txt


def gr(value) -> GaussianRational:
    """Loose constructor used by builders: accepts ints, Fractions, GaussianRationals
    and entry strings such as ``"4/5+3/5i"``."""
    if isinstance(value, str):
        from .matrix_io import parse_entry

        return parse_entry(value)
    if isinstance(value, complex):
        raise TypeError("floating complex values are not exact")
    return GaussianRational.coerce(value)


class ExactMatrix:
    """Dense row-major matrix of Gaussian rationals. Immutable."""

    __slots__ = ("rows", "cols", "entries", "_key")

    def __init__(self, rows: int, cols: int, entries: Iterable[GaussianRational]):
        entries = tuple(entries)
        if rows <= 0 or cols <= 0:
            raise DimensionError("matrix dimensions must be positive")
        if len(entries) != rows * cols:
            raise DimensionError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._key = None

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        if not rows or not rows[0]:
            raise DimensionError("empty matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), width, (gr(v) for r in rows for v in r))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, (ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "ExactMatrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def diag(cls, *values) -> "ExactMatrix":
        n = len(values)
        vals = [gr(v) for v in values]
        return cls(n, n, (vals[i] if i == j else ZERO for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> GaussianRational:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[GaussianRational, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[GaussianRational]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        n, m, p = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = []
        for i in range(n):
            arow = a[i * m:(i + 1) * m]
            for j in range(p):
                acc = ZERO
                for k in range(m):
                    x = arow[k]
                    if x._x or x._y:
                        y = b[k * p + j]
                        if y._x or y._y:
                            acc = acc + x * y
                out.append(acc)
        return ExactMatrix(n, p, out)

    def _check_same_shape(self, other: "ExactMatrix") -> None:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix(self.rows, self.cols, (x + y for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix(self.rows, self.cols, (x - y for x, y in zip(self.entries, other.entries)))

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, (-x for x in self.entries))

    def scale(self, c) -> "ExactMatrix":
        c = gr(c)
        return ExactMatrix(self.rows, self.cols, (c * x for x in self.entries))

    def __rmul__(self, c) -> "ExactMatrix":
        if isinstance(c, (int, Fraction, GaussianRational)):
            return self.scale(c)
        return NotImplemented

    def __pow__(self, n: int) -> "ExactMatrix":
        if not self.is_square():
            raise DimensionError("power of a non-square matrix")
        if n < 1:
            raise ValueError("only positive powers are defined in a semigroup")
        result = self
        for _ in range(n - 1):
            result = result @ self
        return result

    def adjoint(self) -> "ExactMatrix":
        r, c = self.rows, self.cols
        e = self.entries
        return ExactMatrix(c, r, (e[i * c + j].conjugate() for j in range(c) for i in range(r)))

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.entries)

    def trace(self) -> GaussianRational:
        if not self.is_square():
            raise DimensionError("trace of a non-square matrix")
        acc = ZERO
        for i in range(self.rows):
            acc = acc + self.entries[i * self.cols + i]
        return acc

    def frobenius_norm_sq(self) -> Fraction:
        return sum((x.abs_sq() for x in self.entries), Fraction(0))

    def rank(self) -> int:
        return _bareiss_rank(self)

    def inverse(self) -> "ExactMatrix":
        return _gauss_jordan_inverse(self)

    def key(self) -> bytes:
        if self._key is None:
            parts = [f"{self.rows}x{self.cols}"]
            parts.extend(f"{x._x},{x._y},{x._d}" for x in self.entries)
            self._key = ";".join(parts).encode("ascii")
        return self._key

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"ExactMatrix[{body}]"


def _gaussian_integer_rows(A: ExactMatrix) -> list[list[tuple[int, int]]]:
    # scale each row by its common denominator so every entry is in Z[i]
    out = []
    for i in range(A.rows):
        row = A.row(i)
        den = 1
        for z in row:
            den = den * z._d // gcd(den, z._d)
        out.append([(z._x * (den // z._d), z._y * (den // z._d)) for z in row])
    return out


def _gi_mul(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    return a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0]


def _gi_exact_div(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    n = b[0] * b[0] + b[1] * b[1]
    re = a[0] * b[0] + a[1] * b[1]
    im = a[1] * b[0] - a[0] * b[1]
    assert re % n == 0 and im % n == 0, "Bareiss division must be exact"
    return re // n, im // n


def _bareiss_rank(A: ExactMatrix) -> int:
    """Fraction-free elimination over the Gaussian integers."""
    M = _gaussian_integer_rows(A)
    nrows, ncols = A.rows, A.cols
    prev = (1, 0)
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if M[i][c] != (0, 0)), None)
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        p = M[r][c]
        for i in range(r + 1, nrows):
            q = M[i][c]
            for j in range(c + 1, ncols):
                t1 = _gi_mul(p, M[i][j])
                t2 = _gi_mul(q, M[r][j])
                M[i][j] = _gi_exact_div((t1[0] - t2[0], t1[1] - t2[1]), prev)
            M[i][c] = (0, 0)
        prev = p
        r += 1
    return r


def _gauss_jordan_inverse(A: ExactMatrix) -> ExactMatrix:
    if not A.is_square():
        raise DimensionError("inverse of a non-square matrix")
    n = A.rows
    M = [list(A.row(i)) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if not M[i][c].is_zero()), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        M[c], M[pivot] = M[pivot], M[c]
        inv = M[c][c].inverse()
        M[c] = [x * inv for x in M[c]]
        for i in range(n):
            if i != c and not M[i][c].is_zero():
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return ExactMatrix(n, n, (M[i][n + j] for i in range(n) for j in range(n)))


# -- the operation surface used by the rest of the package ----------------------

def mat_mul(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    return A @ B


def adjoint(A: ExactMatrix) -> ExactMatrix:
    return A.adjoint()


def rank(A: ExactMatrix) -> int:
    return A.rank()


def trace(A: ExactMatrix) -> GaussianRational:
    return A.trace()


def frobenius_norm_sq(A: ExactMatrix) -> Fraction:
    """Sum of squared entry moduli. Equals the squared operator norm when A has rank one."""
    return A.frobenius_norm_sq()


def canonical_key(A: ExactMatrix) -> bytes:
    return A.key()


@dataclass(frozen=True)
class Predicates:
    selfadjoint: bool
    normal: bool
    partial_isometry: bool
    idempotent: bool


def predicates(A: ExactMatrix) -> Predicates:
    if not A.is_square():
        raise DimensionError("predicates need a square matrix")
    As = A.adjoint()
    AAs = A @ As
    return Predicates(
        selfadjoint=A == As,
        normal=As @ A == AAs,
        partial_isometry=AAs @ A == A,
        idempotent=A @ A == A,
    )


class PowerCheck(enum.Enum):
    FALSE = "false"
    TRUE = "true"
    VERIFIED_UP_TO_BOUND = "verified-up-to-bound"

    def __bool__(self):
        return self is not PowerCheck.FALSE


@dataclass(frozen=True)
class PowerPartialIsometryResult:
    status: PowerCheck
    n_max: int
    failed_at: int | None = None

    def __bool__(self):
        return bool(self.status)


def is_power_partial_isometry(A: ExactMatrix, n_max: int | None = None, *,
                              certify_cycles: bool = False) -> PowerPartialIsometryResult:
    """Check A^n = A^n (A*)^n A^n for n = 1..n_max (default 2*dim).

    There is no known finite bound that certifies the property in general, so a
    clean pass is reported as VERIFIED_UP_TO_BOUND. With ``certify_cycles`` a pass
    is upgraded to TRUE when the power sequence revisits an earlier power (zero
    included), since then every power has been checked.
    """
    if not A.is_square():
        raise DimensionError("power partial isometry test needs a square matrix")
    if n_max is None:
        n_max = 2 * A.rows
    if n_max < 1:
        raise ValueError("n_max must be positive")
    seen: dict[bytes, int] = {}
    power = A
    cycled = False
    for n in range(1, n_max + 1):
        if n > 1:
            power = power @ A
        if power @ power.adjoint() @ power != power:
            return PowerPartialIsometryResult(PowerCheck.FALSE, n_max, failed_at=n)
        k = power.key()
        if k in seen:
            cycled = True
        seen.setdefault(k, n)
    if certify_cycles and cycled:
        return PowerPartialIsometryResult(PowerCheck.TRUE, n_max)
    return PowerPartialIsometryResult(PowerCheck.VERIFIED_UP_TO_BOUND, n_max)
