"""Three-factor decompositions P = L @ M @ R.

L is Pascal-like, R is a transposed Pascal-like matrix, and M is again a
recurrence matrix whose boundary has been inverse binomially transformed.
"""
from wrmatrix import (
    Geometric,
    WrmDescriptor,
    mp_factorization,
    tan_factorization,
    toeplitz_factorization,
    unifying_factorization,
    verify_factorization,
)


def show(title, f):
    print(title)
    for name in ("left", "middle", "right"):
        m = getattr(f, name)
        print(f"  {name:>6}:", [[str(v) for v in row] for row in m.rows])
    print("  middle params:", tuple(str(p) for p in f.middle_descriptor.params))
    print("  verified:", verify_factorization(f), "\n")


# Column a**i, row b**i with params (b, ab, a): the Toeplitz middle is I.
a, b = 2, 3
d = WrmDescriptor.from_specs((b, a * b, a), Geometric(1, a), Geometric(1, b), 3)
show("Toeplitz middle, a=2, b=3", toeplitz_factorization(d))

# Boundaries (a+1)**i with params (a, 1 - a^2, a): the middle is all ones.
a = 2
d = WrmDescriptor.from_specs((a, 1 - a * a, a), Geometric(1, a + 1), Geometric(1, a + 1), 3)
show("Toeplitz middle, all-ones case", toeplitz_factorization(d))

# Any r, s, v, w with r*v != 0 works.
d = WrmDescriptor.of((3, -1, 2), (1, 4, 0, 2), (1, -2, 5, 1))
show("unifying with r,s,v,w = 2,1,-1,3", unifying_factorization(d, 2, 1, -1, 3))

# Named special cases.
show("weighted-Toeplitz middle (r=s=z, v=w=x)", tan_factorization(d))
show("generalized Pascal triangle", mp_factorization(WrmDescriptor.of((1, 0, 1), (1, 2, 4), (1, 1, 1))))
