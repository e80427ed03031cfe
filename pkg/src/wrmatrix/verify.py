"""Seeded randomized checks of every identity the library implements.

Each suite draws one random instance per trial from its own
``random.Random(f"{seed}:{suite}:{trial}")`` stream, so any failing trial can
be replayed alone from the printed seed and trial index.  A check returns
``None`` on success or a JSON-able dict describing the counterexample.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import determinants as dets
from . import factorization as fac
from . import group as grp
from .exact import ONE, ZERO, binomial, powers
from .sequences import (
    Arithmetic,
    BoundaryPair,
    Constant,
    Delta,
    Explicit,
    Geometric,
    binomial_transform,
    eval_sequence,
    hat_transform,
    inverse_binomial_transform,
    tilde_alpha,
    tilde_beta,
)
from .wrm import (
    Matrix,
    RecurrenceParams,
    WrmDescriptor,
    build_wrm,
    det_bareiss,
    det_cofactor,
    pascal_like,
    toeplitz,
    weighted_toeplitz,
)

log = logging.getLogger(__name__)

DEFAULT_SEED = 20250917
SEED_ENV_VAR = "WRMATRIX_SEED"


class Sampler:
    """Bounded random rationals, boundaries and parameters for one trial."""

    def __init__(self, rng: random.Random, bound: int = 9, den_bound: int = 5, max_n: int = 8):
        self.rng = rng
        self.bound = bound
        self.den_bound = den_bound
        self.max_n = max_n
        self.rejections = 0

    def reject(self, reason: str) -> None:
        self.rejections += 1
        log.debug("resampling: %s", reason)

    def rational(self, nonzero: bool = False) -> Fraction:
        num = self.rng.randint(-self.bound, self.bound)
        while nonzero and num == 0:
            num = self.rng.randint(-self.bound, self.bound)
        return Fraction(num, self.rng.randint(1, self.den_bound))

    def order(self, lo: int = 1) -> int:
        return self.rng.randint(lo, max(lo, self.max_n))

    def spec(self, n: int):
        kind = self.rng.randrange(5)
        if kind == 0:
            return Geometric(self.rational(), self.rational())
        if kind == 1:
            return Arithmetic(self.rational(), self.rational())
        if kind == 2:
            return Constant(self.rational())
        if kind == 3:
            return Delta(self.rng.randrange(n))
        return Explicit(tuple(self.rational() for _ in range(n)))

    def sequence(self, n: int) -> tuple:
        return eval_sequence(self.spec(n), n)

    def boundary(self, n: int) -> BoundaryPair:
        alpha = self.sequence(n)
        beta = self.sequence(n)
        return BoundaryPair(alpha, (alpha[0],) + beta[1:])

    def params(self) -> RecurrenceParams:
        return RecurrenceParams(self.rational(), self.rational(), self.rational())

    def descriptor(self, n: int | None = None) -> WrmDescriptor:
        n = self.order() if n is None else n
        return WrmDescriptor(self.params(), self.boundary(n))

    def nonsingular_descriptor(self, n: int | None = None) -> WrmDescriptor:
        """Descriptor with ``y + x*z != 0``."""
        while True:
            d = self.descriptor(n)
            x, y, z = d.params
            if y + x * z != 0:
                return d
            self.reject("y + x*z == 0")

    def group_element(self) -> grp.GroupElement:
        return grp.GroupElement(self.rational(nonzero=True), self.rational())


def _fail(**detail) -> dict:
    out = {}
    for key, value in detail.items():
        if isinstance(value, (WrmDescriptor, Matrix)):
            out[key] = value.to_json_obj()
        elif isinstance(value, (tuple, list)):
            out[key] = [str(v) for v in value]
        elif isinstance(value, (int, bool, str)) or value is None:
            out[key] = value
        else:
            out[key] = str(value)
    return out


# --- suites -----------------------------------------------------------------


def check_sequences(s: Sampler):
    n = s.order()
    seq = s.sequence(n)
    p, q = s.rational(nonzero=True), s.rational()
    if binomial_transform(inverse_binomial_transform(seq, p, q), p, q) != seq:
        return _fail(what="forward(inverse(s)) != s", s=seq, p=p, q=q)
    if inverse_binomial_transform(binomial_transform(seq, p, q), p, q) != seq:
        return _fail(what="inverse(forward(s)) != s", s=seq, p=p, q=q)
    alternating = tuple(
        sum(((-1) ** (i + k) * binomial(i, k) * seq[k] for k in range(i + 1)), ZERO)
        for i in range(n)
    )
    if hat_transform(seq) != alternating:
        return _fail(what="hat transform != alternating sum", s=seq)
    x, y, z = s.params()
    if tilde_alpha(seq, z) != inverse_binomial_transform(seq, 1, z):
        return _fail(what="tilde_alpha mismatch", s=seq, z=z)
    if y + x * z != 0 and tilde_beta(seq, x, y, z) != inverse_binomial_transform(seq, y + x * z, x):
        return _fail(what="tilde_beta mismatch", s=seq, x=x, y=y, z=z)
    c = s.rational()
    geo = eval_sequence(Geometric(c, q), n)
    if inverse_binomial_transform(geo, p, q) != (c,) + (ZERO,) * (n - 1):
        return _fail(what="geometric collapse", c=c, p=p, q=q, n=n)
    return None


def check_recurrence(s: Sampler):
    d = s.descriptor()
    P = build_wrm(d)
    x, y, z = d.params
    n = d.n
    for i in range(n):
        if P[i, 0] != d.alpha[i] or P[0, i] != d.beta[i]:
            return _fail(what="boundary not reproduced", d=d)
    for i in range(1, n):
        for j in range(1, n):
            if P[i, j] != x * P[i, j - 1] + y * P[i - 1, j - 1] + z * P[i - 1, j]:
                return _fail(what="recurrence broken", d=d, i=i, j=j)
    v, w = s.rational(), s.rational()
    lam = powers(w, n)
    mu = (ONE,) + (ZERO,) * (n - 1)
    if pascal_like(v, w, n) != build_wrm(WrmDescriptor.of((0, v, w), lam, mu)):
        return _fail(what="pascal_like closed form", v=v, w=w, n=n)
    if toeplitz(d.boundary) != build_wrm(WrmDescriptor(RecurrenceParams(ZERO, ONE, ZERO), d.boundary)):
        return _fail(what="toeplitz closed form", d=d)
    if weighted_toeplitz(d.boundary, x) != build_wrm(WrmDescriptor(RecurrenceParams(ZERO, x, ZERO), d.boundary)):
        return _fail(what="weighted toeplitz closed form", d=d)
    sym = WrmDescriptor(RecurrenceParams(x, y, x), BoundaryPair(d.alpha, d.alpha))
    if not build_wrm(sym).is_symmetric():
        return _fail(what="symmetry", d=sym)
    B = build_wrm(s.descriptor(n))
    if (P @ B).T != B.T @ P.T:
        return _fail(what="(AB)^t != B^t A^t", d=d)
    return None


def check_group(s: Sampler):
    g1, g2, g3 = s.group_element(), s.group_element(), s.group_element()
    n = s.order()
    M = grp.to_matrix
    if M(grp.compose(g1, g2), n) != M(g1, n) @ M(g2, n):
        return _fail(what="to_matrix(compose) != product", g1=g1, g2=g2, n=n)
    if grp.compose(g1, grp.inverse(g1)) != grp.identity() or grp.compose(grp.inverse(g1), g1) != grp.identity():
        return _fail(what="inverse law", g=g1)
    if M(g1, n) @ M(grp.inverse(g1), n) != Matrix.identity(n):
        return _fail(what="matrix inverse", g=g1, n=n)
    if grp.compose(grp.compose(g1, g2), g3) != grp.compose(g1, grp.compose(g2, g3)):
        return _fail(what="associativity", g1=g1, g2=g2, g3=g3)
    if grp.compose(grp.identity(), g1) != g1 or grp.compose(g1, grp.identity()) != g1:
        return _fail(what="identity law", g=g1)
    if M(g1, n).T @ M(g2, n).T != M(grp.compose(g2, g1), n).T:
        return _fail(what="transposed group closure", g1=g1, g2=g2, n=n)
    return None


def check_eq1(s: Sampler):
    g, d = s.group_element(), s.descriptor()
    if build_wrm(grp.left_mul_descriptor(g, d)) != grp.to_matrix(g, d.n) @ build_wrm(d):
        return _fail(what="left multiplication descriptor", g=g, d=d)
    return None


def check_eq7(s: Sampler):
    g, d = s.group_element(), s.descriptor()
    if build_wrm(grp.right_mul_descriptor(g, d)) != build_wrm(d) @ grp.to_matrix(g, d.n).T:
        return _fail(what="right multiplication descriptor", g=g, d=d)
    return None


def check_action_laws(s: Sampler):
    g1, g2, d = s.group_element(), s.group_element(), s.descriptor()
    e = grp.identity()
    if grp.group_action_left(e, d) != d or grp.group_action_right(e, d) != d:
        return _fail(what="identity acts trivially", d=d)
    left_seq = grp.group_action_left(g2, grp.group_action_left(g1, d))
    if left_seq != grp.group_action_left(grp.compose(g1, g2), d):
        return _fail(what="left action compatibility", g1=g1, g2=g2, d=d)
    if build_wrm(grp.group_action_left(g1, d)) != grp.to_matrix(grp.inverse(g1), d.n) @ build_wrm(d):
        return _fail(what="left action matrix", g=g1, d=d)
    right_seq = grp.group_action_right(g2, grp.group_action_right(g1, d))
    if right_seq != grp.group_action_right(grp.compose(g2, g1), d):
        return _fail(what="right action compatibility", g1=g1, g2=g2, d=d)
    return None


def check_unifying(s: Sampler):
    d = s.descriptor()
    r, v = s.rational(nonzero=True), s.rational(nonzero=True)
    sv, w = s.rational(), s.rational()
    f = fac.unifying_factorization(d, r, sv, v, w)
    if not fac.verify_factorization(f):
        return _fail(what="unifying factorization", d=d, r=r, s=sv, v=v, w=w)
    n = d.n
    if f.left != pascal_like(r, sv, n) or f.right != pascal_like(v, w, n).T:
        return _fail(what="outer factors", d=d, r=r, s=sv, v=v, w=w)
    md = f.middle_descriptor
    if md.alpha != inverse_binomial_transform(d.alpha, r, sv) or md.beta != inverse_binomial_transform(d.beta, v, w):
        return _fail(what="middle sequences", d=d, r=r, s=sv, v=v, w=w)
    return None


def check_toeplitz(s: Sampler):
    d = s.nonsingular_descriptor()
    x, y, z = d.params
    f = fac.toeplitz_factorization(d)
    if not fac.verify_factorization(f):
        return _fail(what="toeplitz factorization", d=d)
    if not f.middle.is_toeplitz() or tuple(f.middle_descriptor.params) != (0, 1, 0):
        return _fail(what="middle is not plain Toeplitz", d=d)
    md = f.middle_descriptor
    if md.alpha != tilde_alpha(d.alpha, z) or md.beta != tilde_beta(d.beta, x, y, z):
        return _fail(what="middle sequences", d=d)
    if f.middle != toeplitz(md.boundary):
        return _fail(what="middle != toeplitz(tilde pair)", d=d)
    return None


def check_special_cases(s: Sampler):
    n = s.order()
    d = WrmDescriptor(RecurrenceParams(ONE, ZERO, ONE), s.boundary(n))
    if fac.mp_factorization(d) != fac.unifying_factorization(d, 1, 1, 1, 1):
        return _fail(what="pascal-triangle case", d=d)
    while True:
        d = s.descriptor(n)
        x, y, z = d.params
        if x * z != 0:
            break
        s.reject("x*z == 0")
    f = fac.tan_factorization(d)
    if f != fac.unifying_factorization(d, z, z, x, x) or not fac.verify_factorization(f):
        return _fail(what="weighted-Toeplitz case", d=d)
    if tuple(f.middle_descriptor.params) != (0, 1 + y / (x * z), 0):
        return _fail(what="weighted-Toeplitz middle params", d=d)
    return None


def check_eq11(s: Sampler):
    d = s.nonsingular_descriptor()
    P = build_wrm(d)
    expected = det_bareiss(P)
    if dets.det_via_eq11(d) != expected:
        return _fail(what="eq11 determinant", d=d, bareiss=expected)
    f = fac.toeplitz_factorization(d)
    if det_bareiss(f.left) * det_bareiss(f.middle) * det_bareiss(f.right) != expected:
        return _fail(what="determinant not multiplicative over factors", d=d)
    return None


def _geometric_descriptor(s: Sampler, n: int) -> WrmDescriptor:
    while True:
        c = s.rational()
        x, y, z = s.params()
        if y + x * z != 0:
            break
        s.reject("y + x*z == 0")
    alpha = eval_sequence(Geometric(c, z), n)
    beta = eval_sequence(Geometric(c, x), n)
    return WrmDescriptor.of((x, y, z), alpha, beta)


def check_geometric(s: Sampler):
    d = _geometric_descriptor(s, s.order())
    c = d.alpha[0]
    if not dets.is_middle_diagonal(d):
        return _fail(what="geometric boundary but middle not diagonal", d=d)
    got, expected = dets.det_geometric(c, d.params, d.n), det_bareiss(build_wrm(d))
    if got != expected:
        return _fail(what="geometric determinant", d=d, closed=got, bareiss=expected)
    return None


def check_diagonal(s: Sampler):
    d = _geometric_descriptor(s, s.order(lo=2))
    if not dets.is_middle_diagonal(d):
        return _fail(what="geometric boundary not detected", d=d)
    n = d.n
    k = s.rng.randrange(1, n)
    delta = s.rational(nonzero=True)
    alpha, beta = list(d.alpha), list(d.beta)
    if s.rng.random() < 0.5:
        alpha[k] += delta
    else:
        beta[k] += delta
    bad = WrmDescriptor(d.params, BoundaryPair(alpha, beta))
    if dets.is_middle_diagonal(bad):
        return _fail(what="perturbed boundary reported diagonal", d=bad)
    return None


def check_k2_geometric(s: Sampler, trial: int = 0):
    n = s.order()
    while True:
        y = s.rational()
        if y != -1:
            break
        s.reject("y == -1")
    a = s.rational()
    if trial % 5 == 0:
        # force y + a + b - a*b == 0
        while a == 1:
            a = s.rational()
        b = (y + a) / (a - 1)
    else:
        b = s.rational()
    d = WrmDescriptor.of((1, y, 1), powers(a, n), powers(b, n))
    got, expected = dets.det_k2_geometric(a, b, y, n), det_bareiss(build_wrm(d))
    if got != expected:
        return _fail(what="k2 geometric determinant", a=a, b=b, y=y, n=n, closed=got, bareiss=expected)
    return None


def check_k2_arithmetic(s: Sampler, trial: int = 0):
    half_n = 1 + trial % 4
    while True:
        y = s.rational()
        if y != -1:
            break
        s.reject("y == -1")
    n = 2 * half_n
    d = WrmDescriptor.of((1, y, 1), range(n), [-i for i in range(n)])
    got, expected = dets.det_k2_arithmetic(y, half_n), det_bareiss(build_wrm(d))
    if got != expected:
        return _fail(what="k2 arithmetic determinant", y=y, half_n=half_n, closed=got, bareiss=expected)
    return None


def check_bareiss(s: Sampler):
    n = s.order()
    A = Matrix([[s.rational() for _ in range(n)] for _ in range(n)])
    if s.rng.random() < 0.2 and n > 1:
        # duplicate a row to exercise the singular path
        rows = list(A.rows)
        rows[-1] = rows[0]
        A = Matrix(rows)
    got, expected = det_bareiss(A), det_cofactor(A)
    if got != expected:
        return _fail(what="bareiss vs cofactor", A=A, bareiss=got, cofactor=expected)
    return None


@dataclass(frozen=True)
class Suite:
    name: str
    check: Callable
    max_n: int
    description: str
    uses_trial: bool = False


SUITES = {
    s.name: s
    for s in [
        Suite("sequences", check_sequences, 16, "binomial transform round trips and special transforms"),
        Suite("recurrence", check_recurrence, 12, "constructors agree with the recurrence"),
        Suite("group", check_group, 8, "group law, inverse, associativity"),
        Suite("eq1", check_eq1, 10, "left multiplication by a group element"),
        Suite("eq7", check_eq7, 10, "right multiplication by a transposed group element"),
        Suite("actions", check_action_laws, 10, "left and right action laws"),
        Suite("unifying", check_unifying, 12, "unifying factorization"),
        Suite("toeplitz", check_toeplitz, 12, "Toeplitz-middle factorization"),
        Suite("special", check_special_cases, 12, "Pascal-triangle and weighted-Toeplitz special cases"),
        Suite("eq11", check_eq11, 10, "determinant through the Toeplitz middle"),
        Suite("geometric", check_geometric, 10, "determinant for geometric boundaries"),
        Suite("k2_geometric", check_k2_geometric, 8, "(1,y,1) with boundaries a^i, b^i", uses_trial=True),
        Suite("k2_arithmetic", check_k2_arithmetic, 8, "(1,y,1) with boundaries i, -i", uses_trial=True),
        Suite("diagonal", check_diagonal, 10, "diagonal middle iff geometric boundaries"),
        Suite("bareiss", check_bareiss, 6, "Bareiss against cofactor expansion"),
    ]
}


@dataclass
class SuiteResult:
    name: str
    trials: int = 0
    passed: int = 0
    rejections: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def trial_seed(seed: int, suite: str, trial: int) -> str:
    return f"{seed}:{suite}:{trial}"


def run_trial(name: str, seed: int, trial: int, bound: int = 9, den_bound: int = 5, max_n: int | None = None):
    """Run one trial; returns ``(failure_or_None, rejections)``."""
    suite = SUITES[name]
    rng = random.Random(trial_seed(seed, name, trial))
    sampler = Sampler(rng, bound, den_bound, suite.max_n if max_n is None else max_n)
    result = suite.check(sampler, trial) if suite.uses_trial else suite.check(sampler)
    return result, sampler.rejections


def run_suite(
    name: str,
    trials: int,
    seed: int = DEFAULT_SEED,
    bound: int = 9,
    den_bound: int = 5,
    max_n: int | None = None,
    first_trial: int = 0,
) -> SuiteResult:
    res = SuiteResult(name)
    for t in range(first_trial, first_trial + trials):
        failure, rejected = run_trial(name, seed, t, bound, den_bound, max_n)
        res.trials += 1
        res.rejections += rejected
        if failure is None:
            res.passed += 1
        else:
            failure = dict(failure, trial=t, trial_seed=trial_seed(seed, name, t))
            res.failures.append(failure)
    return res
