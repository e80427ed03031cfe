"""Three-factor decompositions ``P = L @ M @ R`` of recurrence matrices.

``L`` is Pascal-like (lower-triangular), ``R`` the transpose of a Pascal-like
matrix, and ``M`` again a weighted recurrence matrix whose boundary is the
inverse binomial transform of the original one.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import HypothesisError, SingularWeightError
from .exact import ONE, RationalLike, as_rational
from .sequences import BoundaryPair, inverse_binomial_transform
from .wrm import Matrix, RecurrenceParams, WrmDescriptor, build_wrm, mat_mul, pascal_like


@dataclass(frozen=True)
class Factorization:
    left: Matrix
    middle: Matrix
    right: Matrix
    claimed: WrmDescriptor
    middle_descriptor: WrmDescriptor

    def product(self) -> Matrix:
        return mat_mul(mat_mul(self.left, self.middle), self.right)

    def to_json_obj(self) -> dict:
        return {
            "claimed": self.claimed.to_json_obj(),
            "middle_descriptor": self.middle_descriptor.to_json_obj(),
            "left": self.left.to_json_obj(),
            "middle": self.middle.to_json_obj(),
            "right": self.right.to_json_obj(),
        }

    def to_latex(self) -> str:
        return (
            build_wrm(self.claimed).to_latex()
            + "\n=\n"
            + self.left.to_latex()
            + "\n\\cdot\n"
            + self.middle.to_latex()
            + "\n\\cdot\n"
            + self.right.T.to_latex()
            + "^t"
        )


def unifying_factorization(
    d: WrmDescriptor, r: RationalLike, s: RationalLike, v: RationalLike, w: RationalLike
) -> Factorization:
    """Factor through ``pascal_like(r, s)`` on the left and ``pascal_like(v, w).T`` on the right."""
    r, s, v, w = (as_rational(t) for t in (r, s, v, w))
    if r * v == 0:
        raise HypothesisError("unifying factorization needs r*v != 0")
    x, y, z = d.params
    params = RecurrenceParams(
        (x - w) / v,
        (y + x * s + z * w - s * w) / (r * v),
        (z - s) / r,
    )
    rho = inverse_binomial_transform(d.alpha, r, s)
    sigma = inverse_binomial_transform(d.beta, v, w)
    middle_d = WrmDescriptor(params, BoundaryPair(rho, sigma))
    n = d.n
    return Factorization(
        left=pascal_like(r, s, n),
        middle=build_wrm(middle_d),
        right=pascal_like(v, w, n).T,
        claimed=d,
        middle_descriptor=middle_d,
    )


def toeplitz_factorization(d: WrmDescriptor) -> Factorization:
    """Plain (unweighted) Toeplitz middle; needs ``y + x*z != 0``."""
    x, y, z = d.params
    weight = y + x * z
    if weight == 0:
        raise SingularWeightError(
            "y + x*z == 0: no Toeplitz-middle factorization; use the unifying one"
        )
    return unifying_factorization(d, ONE, z, weight, x)


def mp_factorization(d: WrmDescriptor) -> Factorization:
    """Generalized Pascal triangle case: params must be ``(1, 0, 1)``."""
    if tuple(d.params) != (1, 0, 1):
        raise HypothesisError(f"expected params (1, 0, 1), got ({d.params})")
    return unifying_factorization(d, 1, 1, 1, 1)


def tan_factorization(d: WrmDescriptor) -> Factorization:
    """Weighted Toeplitz middle with weight ``1 + y/(x*z)``; needs ``x*z != 0``."""
    x, _, z = d.params
    if x * z == 0:
        raise HypothesisError("weighted-Toeplitz factorization needs x*z != 0")
    return unifying_factorization(d, z, z, x, x)


def verify_factorization(f: Factorization) -> bool:
    return f.product() == build_wrm(f.claimed)
