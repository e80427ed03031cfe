"""The Pascal-like group and how it moves recurrence matrices around.

A group element (v, w) stands for pascal_like(v, w, n) at every order n.
Multiplying a recurrence matrix by one of them on the left (or by a
transpose on the right) gives another recurrence matrix; only the
parameters and one boundary sequence change.
"""
from wrmatrix import (
    Constant,
    GroupElement,
    WrmDescriptor,
    build_wrm,
    compose,
    group_action_left,
    inverse,
    left_mul_descriptor,
    right_mul_descriptor,
    to_matrix,
)

g, h = GroupElement(2, 3), GroupElement(5, 7)
print("g * h =", compose(g, h), "   g^-1 =", inverse(g))
for n in (3, 6):
    print(f"n={n}: to_matrix(g*h) == to_matrix(g) @ to_matrix(h):",
          to_matrix(compose(g, h), n) == to_matrix(g, n) @ to_matrix(h, n))

d = WrmDescriptor.from_specs((1, 0, 1), Constant(1), Constant(1), 5)
left = left_mul_descriptor(GroupElement(1, 1), d)
print("\nleft multiplication by (1, 1):")
print("  params", tuple(str(p) for p in left.params), " first column", [str(v) for v in left.alpha])
print("  matches the explicit product:", build_wrm(left) == to_matrix(GroupElement(1, 1), 5) @ build_wrm(d))

right = right_mul_descriptor(GroupElement(1, 1), d)
print("right multiplication by (1, 1)^t:")
print("  params", tuple(str(p) for p in right.params), " first row", [str(v) for v in right.beta])
print("  matches the explicit product:", build_wrm(right) == build_wrm(d) @ to_matrix(GroupElement(1, 1), 5).T)

# The left action multiplies by the inverse, so acting by g then h is acting by g*h.
once = group_action_left(h, group_action_left(g, d))
print("\naction compatibility:", once == group_action_left(compose(g, h), d))
