"""Boundary sequences and binomial transforms.

Sequences are finite prefixes stored as tuples of Fractions; their length is
always the matrix order ``n`` they feed.

The binomial transform with parameters ``(p, q)`` maps ``s`` to

    eta_i = sum_{k<=i} C(i, k) p^k q^(i-k) s_k

and is the column-0 (resp. row-0) effect of multiplying by a Pascal-like
matrix.  Its inverse is the triangular recursion that divides by ``p**i``;
every transformed sequence used by the factorizations is an instance of it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import BoundaryMismatchError, HypothesisError, SingularWeightError
from .exact import ZERO, RationalLike, as_rational, binomial, parse_rational, powers


def as_sequence(values: Iterable[RationalLike]) -> tuple:
    seq = tuple(as_rational(v) for v in values)
    if not seq:
        raise ValueError("sequence must have at least one entry")
    return seq


# --- generators -------------------------------------------------------------


@dataclass(frozen=True)
class Geometric:
    """``c * q**i`` (``q == 0`` gives ``(c, 0, 0, ...)``)."""

    c: RationalLike
    q: RationalLike

    def evaluate(self, n: int) -> tuple:
        c = as_rational(self.c)
        return tuple(c * p for p in powers(self.q, n))


@dataclass(frozen=True)
class Arithmetic:
    """``a + i*d``."""

    a: RationalLike
    d: RationalLike

    def evaluate(self, n: int) -> tuple:
        a, d = as_rational(self.a), as_rational(self.d)
        return tuple(a + i * d for i in range(n))


@dataclass(frozen=True)
class Constant:
    c: RationalLike

    def evaluate(self, n: int) -> tuple:
        return (as_rational(self.c),) * n


@dataclass(frozen=True)
class Explicit:
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", as_sequence(self.values))

    def evaluate(self, n: int) -> tuple:
        if len(self.values) < n:
            raise ValueError(
                f"explicit sequence has {len(self.values)} entries, {n} needed"
            )
        return self.values[:n]


@dataclass(frozen=True)
class Delta:
    """Kronecker sequence: 1 at index ``k``, 0 elsewhere."""

    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("delta index must be nonnegative")

    def evaluate(self, n: int) -> tuple:
        return tuple(as_rational(int(i == self.k)) for i in range(n))


SequenceSpec = Union[Geometric, Arithmetic, Constant, Explicit, Delta]


def eval_sequence(spec: SequenceSpec, n: int) -> tuple:
    if n < 1:
        raise ValueError("sequence length must be at least 1")
    return spec.evaluate(n)


def parse_sequence_spec(text: str) -> SequenceSpec:
    """Parse ``geom:c,q | arith:a,d | const:c | list:v0,v1,... | delta:k``."""
    kind, sep, body = text.strip().partition(":")
    if not sep:
        raise ValueError(f"sequence spec needs a 'kind:' prefix: {text!r}")
    args = [a for a in body.split(",")] if body.strip() else []
    kind = kind.lower()
    arity = {"geom": 2, "arith": 2, "const": 1, "delta": 1}
    if kind in arity and len(args) != arity[kind]:
        raise ValueError(f"{kind} takes {arity[kind]} argument(s), got {len(args)}")
    if kind == "geom":
        return Geometric(parse_rational(args[0]), parse_rational(args[1]))
    if kind == "arith":
        return Arithmetic(parse_rational(args[0]), parse_rational(args[1]))
    if kind == "const":
        return Constant(parse_rational(args[0]))
    if kind == "delta":
        return Delta(int(args[0]))
    if kind == "list":
        return Explicit(tuple(parse_rational(a) for a in args))
    raise ValueError(f"unknown sequence kind {kind!r}")


def format_sequence_spec(spec: SequenceSpec) -> str:
    if isinstance(spec, Geometric):
        return f"geom:{as_rational(spec.c)},{as_rational(spec.q)}"
    if isinstance(spec, Arithmetic):
        return f"arith:{as_rational(spec.a)},{as_rational(spec.d)}"
    if isinstance(spec, Constant):
        return f"const:{as_rational(spec.c)}"
    if isinstance(spec, Delta):
        return f"delta:{spec.k}"
    return "list:" + ",".join(str(v) for v in spec.values)


@dataclass(frozen=True)
class BoundaryPair:
    """First column ``alpha`` and first row ``beta`` of a recurrence matrix."""

    alpha: tuple
    beta: tuple

    def __post_init__(self):
        alpha, beta = as_sequence(self.alpha), as_sequence(self.beta)
        if len(alpha) != len(beta):
            raise ValueError(
                f"boundary lengths differ: {len(alpha)} != {len(beta)}"
            )
        if alpha[0] != beta[0]:
            raise BoundaryMismatchError(
                f"alpha[0] = {alpha[0]} but beta[0] = {beta[0]}"
            )
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @property
    def gamma(self):
        return self.alpha[0]

    def __len__(self):
        return len(self.alpha)


# --- transforms -------------------------------------------------------------


def binomial_transform(s, p: RationalLike, q: RationalLike) -> tuple:
    s = as_sequence(s)
    n = len(s)
    pp, qp = powers(p, n), powers(q, n)
    return tuple(
        sum((binomial(i, k) * pp[k] * qp[i - k] * s[k] for k in range(i + 1)), ZERO)
        for i in range(n)
    )


def inverse_binomial_transform(s, p: RationalLike, q: RationalLike) -> tuple:
    """Solve ``binomial_transform(x, p, q) == s`` for ``x``."""
    p = as_rational(p)
    if p == 0:
        raise HypothesisError("inverse binomial transform needs p != 0")
    s = as_sequence(s)
    n = len(s)
    pp, qp = powers(p, n), powers(q, n)
    x = [s[0]]
    for i in range(1, n):
        acc = s[i]
        for k in range(i):
            acc -= binomial(i, k) * pp[k] * qp[i - k] * x[k]
        x.append(acc / pp[i])
    return tuple(x)


def tilde_alpha(alpha, z: RationalLike) -> tuple:
    """Column sequence of the Toeplitz middle factor."""
    return inverse_binomial_transform(alpha, 1, z)


def tilde_beta(beta, x: RationalLike, y: RationalLike, z: RationalLike) -> tuple:
    """Row sequence of the Toeplitz middle factor; requires ``y + x*z != 0``."""
    x, y, z = as_rational(x), as_rational(y), as_rational(z)
    weight = y + x * z
    if weight == 0:
        raise SingularWeightError("y + x*z must be nonzero")
    return inverse_binomial_transform(beta, weight, x)


def hat_transform(s) -> tuple:
    """Alternating binomial sum ``sum_k (-1)**(i+k) C(i,k) s_k``."""
    return inverse_binomial_transform(s, 1, 1)
