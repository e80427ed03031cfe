"""Weighted recurrence matrices and the exact matrix algebra around them.

A weighted recurrence matrix has first column ``alpha``, first row ``beta``
(sharing ``alpha[0] == beta[0]``) and interior entries

    P[i][j] = x*P[i][j-1] + y*P[i-1][j-1] + z*P[i-1][j].

Only leading n-by-n blocks are ever built.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, NamedTuple

from .exact import ONE, ZERO, RationalLike, as_rational, binomial, powers
from .sequences import BoundaryPair, SequenceSpec, eval_sequence


class Matrix:
    """Immutable dense square matrix of Fractions (row-major, 0-indexed)."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[RationalLike]]):
        rows = tuple(tuple(as_rational(v) for v in row) for row in rows)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square and non-empty")
        self._rows = rows

    @classmethod
    def _trusted(cls, rows) -> "Matrix":
        m = cls.__new__(cls)
        m._rows = tuple(tuple(r) for r in rows)
        return m

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._trusted([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def ones(cls, n: int) -> "Matrix":
        return cls._trusted([[ONE] * n for _ in range(n)])

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple:
        return self._rows

    @property
    def T(self) -> "Matrix":
        return mat_transpose(self)

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(v) for v in r) + "]" for r in self._rows)
        return f"Matrix([{body}])"

    def replace(self, i: int, j: int, value: RationalLike) -> "Matrix":
        """Copy with one entry changed."""
        rows = [list(r) for r in self._rows]
        rows[i][j] = as_rational(value)
        return Matrix._trusted(rows)

    def is_lower_triangular(self) -> bool:
        return all(self._rows[i][j] == 0 for i in range(self.n) for j in range(i + 1, self.n))

    def is_upper_triangular(self) -> bool:
        return self.T.is_lower_triangular()

    def is_diagonal(self) -> bool:
        return self.is_lower_triangular() and self.is_upper_triangular()

    def is_toeplitz(self) -> bool:
        r = self._rows
        return all(r[i][j] == r[i - 1][j - 1] for i in range(1, self.n) for j in range(1, self.n))

    def is_symmetric(self) -> bool:
        return self == self.T

    # serialization
    def to_json_obj(self) -> list:
        return [[str(v) for v in row] for row in self._rows]

    @classmethod
    def from_json_obj(cls, obj) -> "Matrix":
        return cls(obj)

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(self.to_json_obj())
        return buf.getvalue()

    def to_latex(self) -> str:
        lines = [r"\begin{pmatrix}"]
        for row in self._rows:
            lines.append(" & ".join(_latex_scalar(v) for v in row) + r" \\")
        lines.append(r"\end{pmatrix}")
        return "\n".join(lines)


def _latex_scalar(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return rf"{sign}\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


class RecurrenceParams(NamedTuple):
    x: Fraction
    y: Fraction
    z: Fraction

    @classmethod
    def of(cls, x: RationalLike, y: RationalLike, z: RationalLike) -> "RecurrenceParams":
        return cls(as_rational(x), as_rational(y), as_rational(z))

    def __str__(self):
        return f"{self.x},{self.y},{self.z}"


@dataclass(frozen=True)
class WrmDescriptor:
    """Symbolic name of an n-by-n weighted recurrence matrix."""

    params: RecurrenceParams
    boundary: BoundaryPair

    def __post_init__(self):
        if not isinstance(self.params, RecurrenceParams):
            object.__setattr__(self, "params", RecurrenceParams.of(*self.params))

    @property
    def n(self) -> int:
        return len(self.boundary)

    @property
    def alpha(self) -> tuple:
        return self.boundary.alpha

    @property
    def beta(self) -> tuple:
        return self.boundary.beta

    @classmethod
    def of(cls, params, alpha, beta) -> "WrmDescriptor":
        return cls(RecurrenceParams.of(*params), BoundaryPair(alpha, beta))

    @classmethod
    def from_specs(
        cls, params, alpha: SequenceSpec, beta: SequenceSpec, n: int
    ) -> "WrmDescriptor":
        return cls.of(params, eval_sequence(alpha, n), eval_sequence(beta, n))

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "params": [str(p) for p in self.params],
            "alpha": [str(v) for v in self.alpha],
            "beta": [str(v) for v in self.beta],
        }


def build_wrm(d: WrmDescriptor) -> Matrix:
    x, y, z = d.params
    alpha, beta = d.alpha, d.beta
    n = d.n
    P = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        P[i][0] = alpha[i]
        P[0][i] = beta[i]
    for i in range(1, n):
        prev, row = P[i - 1], P[i]
        for j in range(1, n):
            acc = ZERO
            if x:
                acc += x * row[j - 1]
            if y:
                acc += y * prev[j - 1]
            if z:
                acc += z * prev[j]
            row[j] = acc
    return Matrix._trusted(P)


def pascal_like(v: RationalLike, w: RationalLike, n: int) -> Matrix:
    """Lower-triangular ``C(i, j) * v**j * w**(i-j)``."""
    vp, wp = powers(v, n), powers(w, n)
    return Matrix._trusted(
        [[binomial(i, j) * vp[j] * wp[i - j] if j <= i else ZERO for j in range(n)] for i in range(n)]
    )


def toeplitz(pair: BoundaryPair) -> Matrix:
    return weighted_toeplitz(pair, 1)


def weighted_toeplitz(pair: BoundaryPair, x: RationalLike) -> Matrix:
    """``alpha[i-j] * x**j`` on and below the diagonal, ``beta[j-i] * x**i`` above."""
    a, b, n = pair.alpha, pair.beta, len(pair)
    xp = powers(x, n)
    return Matrix._trusted(
        [[a[i - j] * xp[j] if i >= j else b[j - i] * xp[i] for j in range(n)] for i in range(n)]
    )


# --- exact matrix algebra ---------------------------------------------------


def _integer_form(a: Matrix):
    den = lcm(*(v.denominator for row in a.rows for v in row))
    return den, [[v.numerator * (den // v.denominator) for v in row] for row in a.rows]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} x {b.n}")
    # Multiply over integers with cleared denominators; one gcd per output entry.
    da, ia = _integer_form(a)
    db, ib = _integer_form(b)
    cols = list(zip(*ib))
    den = da * db
    return Matrix._trusted(
        [[Fraction(sum(p * q for p, q in zip(row, col) if p), den) for col in cols] for row in ia]
    )


def mat_transpose(a: Matrix) -> Matrix:
    return Matrix._trusted(zip(*a.rows))


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return a == b


def det_bareiss(a: Matrix) -> Fraction:
    """Exact determinant by fraction-free elimination.

    Each row is scaled by the lcm of its denominators; the integer determinant
    is divided by the product of those scales at the end.
    """
    n = a.n
    scale = 1
    m = []
    for row in a.rows:
        d = lcm(*(v.denominator for v in row))
        scale *= d
        m.append([v.numerator * (d // v.denominator) for v in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            f = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - f * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return Fraction(sign * m[n - 1][n - 1], scale)


def det_cofactor(a: Matrix) -> Fraction:
    """Laplace expansion along the first row; an independent check for small n."""

    def rec(rows):
        if len(rows) == 1:
            return rows[0][0]
        total = ZERO
        for j, v in enumerate(rows[0]):
            if v:
                minor = [r[:j] + r[j + 1:] for r in rows[1:]]
                total += (-v if j % 2 else v) * rec(minor)
        return total

    return rec([tuple(r) for r in a.rows])
