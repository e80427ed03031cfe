"""Closed-form determinants of recurrence matrices, cross-checked by Bareiss.

Every closed form here reduces, through the Toeplitz-middle factorization,
to ``(y + x*z)**C(n, 2)`` times the determinant of a plain Toeplitz matrix.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import HypothesisError, SingularWeightError
from .exact import RationalLike, as_rational, binomial, powers, rat_pow
from .sequences import BoundaryPair, tilde_alpha, tilde_beta
from .wrm import RecurrenceParams, WrmDescriptor, build_wrm, det_bareiss, toeplitz


@dataclass(frozen=True)
class DetReport:
    n: int
    closed_form: Fraction
    bareiss: Fraction
    formula_name: str

    @property
    def agrees(self) -> bool:
        return self.closed_form == self.bareiss

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "formula": self.formula_name,
            "closed_form": str(self.closed_form),
            "bareiss": str(self.bareiss),
            "agrees": self.agrees,
        }


def _weight(params: RecurrenceParams) -> Fraction:
    x, y, z = params
    weight = y + x * z
    if weight == 0:
        raise SingularWeightError("y + x*z == 0; use det_bareiss directly")
    return weight


def middle_toeplitz_pair(d: WrmDescriptor) -> BoundaryPair:
    x, y, z = d.params
    _weight(d.params)
    return BoundaryPair(tilde_alpha(d.alpha, z), tilde_beta(d.beta, x, y, z))


def det_via_eq11(d: WrmDescriptor) -> Fraction:
    """``(y + x*z)**C(n, 2)`` times the determinant of the Toeplitz middle."""
    weight = _weight(d.params)
    return rat_pow(weight, binomial(d.n, 2)) * det_bareiss(toeplitz(middle_toeplitz_pair(d)))


def det_geometric(c: RationalLike, d_params, n: int) -> Fraction:
    """Determinant when ``alpha_i = c*z**i`` and ``beta_j = c*x**j``."""
    x, y, z = RecurrenceParams.of(*d_params)
    return rat_pow(c, n) * rat_pow(y + x * z, binomial(n, 2))


def is_middle_diagonal(d: WrmDescriptor) -> bool:
    """True iff the Toeplitz middle factor is diagonal.

    Decided from the transformed sequences, so it holds exactly when the
    boundary is ``c*z**i`` down the column and ``c*x**j`` along the row.
    """
    pair = middle_toeplitz_pair(d)
    return all(v == 0 for v in pair.alpha[1:]) and all(v == 0 for v in pair.beta[1:])


def det_k2_geometric(a: RationalLike, b: RationalLike, y: RationalLike, n: int) -> Fraction:
    """Params ``(1, y, 1)`` with boundaries ``a**i`` and ``b**i``."""
    a, b, y = as_rational(a), as_rational(b), as_rational(y)
    if y == -1:
        raise HypothesisError("formula needs y != -1")
    return rat_pow(1 + y, binomial(n - 1, 2)) * rat_pow(y + a + b - a * b, n - 1)


def det_k2_arithmetic(y: RationalLike, half_n: int) -> Fraction:
    """Params ``(1, y, 1)``, boundaries ``i`` and ``-i``, order ``2*half_n``."""
    y = as_rational(y)
    if y == -1:
        raise HypothesisError("formula needs y != -1")
    if half_n < 1:
        raise ValueError("half_n must be positive")
    return rat_pow(1 + y, 2 * half_n * (half_n - 1))


def det_pascal_like(v: RationalLike, n: int) -> Fraction:
    return rat_pow(v, binomial(n, 2))


def _geometric_ratio(seq):
    """``a`` when ``seq == (1, a, a**2, ...)``, else None."""
    if seq[0] != 1:
        return None
    a = seq[1] if len(seq) > 1 else Fraction(0)
    return a if tuple(powers(a, len(seq))) == tuple(seq) else None


def closed_form_det(d: WrmDescriptor) -> tuple[Fraction, str]:
    """First applicable closed form for ``d`` as ``(value, formula_name)``.

    Raises HypothesisError when none applies.
    """
    x, y, z = d.params
    n = d.n
    if y + x * z != 0 and is_middle_diagonal(d):
        return det_geometric(d.alpha[0], d.params, n), "geometric"
    if x == 1 and z == 1 and y != -1:
        a, b = _geometric_ratio(d.alpha), _geometric_ratio(d.beta)
        if a is not None and b is not None:
            return det_k2_geometric(a, b, y, n), "k2_geometric"
        if (
            n % 2 == 0
            and d.alpha == tuple(Fraction(i) for i in range(n))
            and d.beta == tuple(Fraction(-i) for i in range(n))
        ):
            return det_k2_arithmetic(y, n // 2), "k2_arithmetic"
    raise HypothesisError("no closed-form determinant applies to this matrix")


def det_report(d: WrmDescriptor, method: str = "closed") -> DetReport:
    """Closed-form (or eq11) value next to the Bareiss value of ``build_wrm(d)``."""
    if method == "closed":
        value, name = closed_form_det(d)
    elif method == "eq11":
        value, name = det_via_eq11(d), "eq11"
    else:
        raise ValueError(f"unknown method {method!r}")
    return DetReport(d.n, value, det_bareiss(build_wrm(d)), name)
