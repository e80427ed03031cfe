"""Brute-force reference computations on plain nested lists.

Nothing here touches the library's matrix code, so tests comparing against
these oracles exercise two independent routes.
"""
import itertools
from fractions import Fraction
from math import comb


def matmul(A, B):
    n = len(A)
    return [[sum((Fraction(A[i][k]) * B[k][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]


def transpose(A):
    return [list(r) for r in zip(*A)]


def pascal(v, w, n):
    v, w = Fraction(v), Fraction(w)
    return [[comb(i, j) * v**j * w ** (i - j) if j <= i else Fraction(0) for j in range(n)] for i in range(n)]


def recurrence_fill(x, y, z, alpha, beta):
    n = len(alpha)
    P = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        P[i][0], P[0][i] = Fraction(alpha[i]), Fraction(beta[i])
    for i in range(1, n):
        for j in range(1, n):
            P[i][j] = x * P[i][j - 1] + y * P[i - 1][j - 1] + z * P[i - 1][j]
    return P


def leibniz_det(A):
    n = len(A)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        inversions = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        term = Fraction(-1 if inversions % 2 else 1)
        for i in range(n):
            term *= A[i][perm[i]]
        total += term
    return total


def forward_transform(s, p, q):
    p, q = Fraction(p), Fraction(q)
    return tuple(sum(comb(i, k) * p**k * q ** (i - k) * s[k] for k in range(i + 1)) for i in range(len(s)))


def as_lists(m):
    return [list(r) for r in m.rows]
