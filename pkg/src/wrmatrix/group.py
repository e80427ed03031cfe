"""The group of Pascal-like matrices and its actions on recurrence matrices.

An element is named by ``(v, w)`` with ``v != 0`` and realized at order n as
``pascal_like(v, w, n)``.  Products follow

    (v, w) * (v', w') = (v*v', v*w' + w),

independently of n, so everything here works at the parameter level and
only builds matrices on demand.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import HypothesisError
from .exact import as_rational, parse_rational
from .sequences import BoundaryPair, binomial_transform
from .wrm import Matrix, RecurrenceParams, WrmDescriptor, pascal_like


@dataclass(frozen=True)
class GroupElement:
    v: Fraction
    w: Fraction

    def __post_init__(self):
        v, w = as_rational(self.v), as_rational(self.w)
        if v == 0:
            raise HypothesisError("group elements need v != 0")
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "w", w)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return compose(self, other)

    def __str__(self):
        return f"{self.v},{self.w}"


def identity() -> GroupElement:
    return GroupElement(1, 0)


def compose(g1: GroupElement, g2: GroupElement) -> GroupElement:
    return GroupElement(g1.v * g2.v, g1.v * g2.w + g1.w)


def inverse(g: GroupElement) -> GroupElement:
    vi = 1 / g.v
    return GroupElement(vi, -g.w * vi)


def to_matrix(g: GroupElement, n: int) -> Matrix:
    return pascal_like(g.v, g.w, n)


def left_mul_descriptor(g: GroupElement, d: WrmDescriptor) -> WrmDescriptor:
    """Descriptor of ``to_matrix(g) @ build_wrm(d)``.

    Left multiplication keeps ``x`` and the first row, maps ``(y, z)`` to
    ``(v*y - w*x, v*z + w)`` and binomially transforms the first column.
    """
    x, y, z = d.params
    v, w = g.v, g.w
    params = RecurrenceParams(x, v * y - w * x, v * z + w)
    eta = binomial_transform(d.alpha, v, w)
    return WrmDescriptor(params, BoundaryPair(eta, d.beta))


def right_mul_descriptor(g: GroupElement, d: WrmDescriptor) -> WrmDescriptor:
    """Descriptor of ``build_wrm(d) @ to_matrix(g).T``."""
    x, y, z = d.params
    v, w = g.v, g.w
    params = RecurrenceParams(v * x + w, v * y - w * z, z)
    eta = binomial_transform(d.beta, v, w)
    return WrmDescriptor(params, BoundaryPair(d.alpha, eta))


def group_action_left(g: GroupElement, d: WrmDescriptor) -> WrmDescriptor:
    """``P -> g^{-1} P``; acting by ``g1*g2`` equals acting by g1, then g2."""
    return left_mul_descriptor(inverse(g), d)


def group_action_right(g: GroupElement, d: WrmDescriptor) -> WrmDescriptor:
    """``P -> P g^t`` (no inverse).

    Acting by g1, then g2 equals acting by ``compose(g2, g1)``, since
    ``g1^t g2^t = (g2 g1)^t``.
    """
    return right_mul_descriptor(g, d)


def parse_group_element(text: str) -> GroupElement:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"group element must be 'v,w': {text!r}")
    return GroupElement(parse_rational(parts[0]), parse_rational(parts[1]))
