"""Building weighted recurrence matrices.

Every matrix here is filled from its first column, its first row and the rule
P[i][j] = x*P[i][j-1] + y*P[i-1][j-1] + z*P[i-1][j].  Entries stay exact.
"""
from fractions import Fraction

from wrmatrix import (
    BoundaryPair,
    Constant,
    Geometric,
    WrmDescriptor,
    build_wrm,
    pascal_like,
    toeplitz,
    weighted_toeplitz,
)


def show(title, m):
    print(title)
    for row in m.rows:
        print("   ", "  ".join(f"{str(v):>6}" for v in row))
    print()


# Params (1, 0, 1) with all-ones boundaries is the symmetric Pascal matrix.
show("Pascal matrix", build_wrm(WrmDescriptor.from_specs((1, 0, 1), Constant(1), Constant(1), 5)))

# With params (0, v, w), column w**i and row (1, 0, 0, ...) we get the
# lower-triangular binomial matrix C(i, j) v**j w**(i-j).
show("pascal_like(2, 3)", pascal_like(2, 3, 4))
d = WrmDescriptor.from_specs((0, 2, 3), Geometric(1, 3), Geometric(1, 0), 4)
print("same as the recurrence fill:", build_wrm(d) == pascal_like(2, 3, 4), "\n")

# Params (0, 1, 0) give a Toeplitz matrix; (0, x, 0) scales its diagonals.
pair = BoundaryPair((1, 2, 3, 4), (1, Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)))
show("Toeplitz", toeplitz(pair))
show("weighted Toeplitz, x = 2", weighted_toeplitz(pair, 2))

# Output formats used by the command-line tool.
P = build_wrm(WrmDescriptor.from_specs((1, 1, 1), Constant(1), Constant(1), 3))
print(P.to_csv())
print(P.to_latex())
