from fractions import Fraction
from math import comb

import pytest
from hypothesis import given

from wrmatrix.errors import BoundaryMismatchError, HypothesisError, SingularWeightError
from wrmatrix.sequences import (
    Arithmetic,
    BoundaryPair,
    Constant,
    Delta,
    Explicit,
    Geometric,
    binomial_transform,
    eval_sequence,
    format_sequence_spec,
    hat_transform,
    inverse_binomial_transform,
    parse_sequence_spec,
    tilde_alpha,
    tilde_beta,
)
from oracles import forward_transform
from strategies import rationals, sequences


def test_eval_sequence():
    assert eval_sequence(Geometric(1, 2), 4) == (1, 2, 4, 8)
    assert eval_sequence(Delta(0), 3) == (1, 0, 0)
    assert eval_sequence(Arithmetic(0, -1), 4) == (0, -1, -2, -3)
    assert eval_sequence(Constant(Fraction(1, 2)), 2) == (Fraction(1, 2),) * 2
    assert eval_sequence(Geometric(5, 0), 3) == (5, 0, 0)
    assert eval_sequence(Delta(1), 3) == (0, 1, 0)


def test_explicit_too_short():
    with pytest.raises(ValueError):
        eval_sequence(Explicit((1, 2)), 3)
    with pytest.raises(ValueError):
        Explicit(())
    with pytest.raises(ValueError):
        eval_sequence(Constant(1), 0)


@pytest.mark.parametrize(
    "text,spec",
    [
        ("geom:1,2", Geometric(Fraction(1), Fraction(2))),
        ("arith:0,-1/2", Arithmetic(Fraction(0), Fraction(-1, 2))),
        ("const:3/4", Constant(Fraction(3, 4))),
        ("list:1,2,-3", Explicit((1, 2, -3))),
        ("delta:1", Delta(1)),
    ],
)
def test_parse_sequence_spec(text, spec):
    parsed = parse_sequence_spec(text)
    assert parsed == spec
    assert parse_sequence_spec(format_sequence_spec(parsed)) == parsed


@pytest.mark.parametrize("text", ["geom:1", "foo:1", "const", "delta:-1", "list:", "arith:1,x"])
def test_parse_sequence_spec_rejects(text):
    with pytest.raises(ValueError):
        parse_sequence_spec(text)


def test_boundary_pair():
    pair = BoundaryPair((1, 2), (1, 5))
    assert pair.gamma == 1 and len(pair) == 2
    with pytest.raises(BoundaryMismatchError):
        BoundaryPair((1, 2), (2, 5))
    with pytest.raises(ValueError):
        BoundaryPair((1, 2), (1,))


def test_binomial_transform_examples():
    assert binomial_transform((1, 0, 0), 3, 5) == (1, 5, 25)
    assert binomial_transform((1, 1, 1), 1, 1) == (1, 2, 4)
    assert binomial_transform((1, 2, 4), 1, 1) == (1, 3, 9)


def test_inverse_binomial_transform_examples():
    assert inverse_binomial_transform((1, 2, 4), 1, 1) == (1, 1, 1)
    assert inverse_binomial_transform((3, 6, 12), 1, 2) == (3, 0, 0)
    assert inverse_binomial_transform((1, 4, 16), 1, 1) == (1, 3, 9)
    with pytest.raises(HypothesisError):
        inverse_binomial_transform((1, 2), 0, 1)


def test_tilde_alpha_examples():
    assert tilde_alpha((1, 1, 1), 1) == (1, 0, 0)
    assert tilde_alpha((0, 1, 2, 3), 1) == (0, 1, 0, 0)
    assert tilde_alpha((1, 2, 4), 2) == (1, 0, 0)


def test_tilde_beta_examples():
    assert tilde_beta((1, 3, 9), 3, 1, 0) == (1, 0, 0)
    assert tilde_beta((0, -1, -2, -3), 1, 1, 1) == (0, Fraction(-1, 2), 0, 0)
    assert tilde_beta((1, 5, 25), 1, 1, 1) == (1, 2, 4)
    with pytest.raises(SingularWeightError):
        tilde_beta((1, 2), 1, -1, 1)


def test_hat_transform_examples():
    assert hat_transform((1, 1, 1)) == (1, 0, 0)
    assert hat_transform((1, 2, 4)) == (1, 1, 1)
    assert hat_transform((0, 1, 2)) == (0, 1, 0)


@given(sequences(max_size=16), rationals(nonzero=True), rationals())
def test_round_trip(s, p, q):
    assert binomial_transform(inverse_binomial_transform(s, p, q), p, q) == s
    assert inverse_binomial_transform(binomial_transform(s, p, q), p, q) == s


@given(sequences(max_size=10), rationals(nonzero=True), rationals())
def test_forward_matches_oracle(s, p, q):
    assert binomial_transform(s, p, q) == forward_transform(s, p, q)


@given(sequences(max_size=16))
def test_hat_is_alternating_sum(s):
    expected = tuple(sum((-1) ** (i + k) * comb(i, k) * s[k] for k in range(i + 1)) for i in range(len(s)))
    assert hat_transform(s) == expected


@given(sequences(max_size=10), rationals(), rationals(), rationals())
def test_tilde_wrappers(s, x, y, z):
    assert tilde_alpha(s, z) == inverse_binomial_transform(s, 1, z)
    if y + x * z != 0:
        assert tilde_beta(s, x, y, z) == inverse_binomial_transform(s, y + x * z, x)


@given(rationals(), rationals(), rationals(nonzero=True))
def test_geometric_collapse(c, q, p):
    seq = eval_sequence(Geometric(c, q), 9)
    assert inverse_binomial_transform(seq, p, q) == (c,) + (0,) * 8
