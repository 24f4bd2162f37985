"""Duality and the squaring construction.

Run with ``python demos/02_squaring_and_duality.py``.
"""

# %%
# The dual of RM(r,m) is RM(m-r-1,m): their generators are orthogonal and the
# dimensions add up to the length.
from qrm import rm_code, rm_generator
from qrm.reed_muller import rm_dual_spec

spec = (2, 5)
dual = rm_dual_spec(spec)
product = rm_generator(spec).mul_transpose(rm_generator(dual))
print(f"RM({spec[0]},{spec[1]})^perp = RM({dual.r},{dual.m}):", product.is_zero(), rm_code(spec).k + dual.k == 32)

# %%
# Computing the dual numerically from the nullspace gives the same row space.
from qrm.gf2 import same_row_space

print(same_row_space(rm_code(spec).dual().generator, rm_generator(dual)))

# %%
# MacWilliams: the weight enumerator of a code fixes that of its dual.
from qrm.gf2 import macwilliams_transform, weight_enumerator

w = weight_enumerator(rm_code((1, 5)))
print("RM(1,5):", w.coefficients)
print("its dual:", macwilliams_transform(w, rm_code((1, 5)).k).coefficients[:9], "...")

# %%
# Squaring: split RM(r,m) into cosets of RM(r-1,m).  Pairs (t1 + c, t2 + c)
# with t1, t2 in the subcode and c a coset representative span RM(r,m+1).
from qrm.reed_muller import partition, squaring_construct

for r in range(4):
    built = squaring_construct(partition((r, 3)))
    print(f"|RM({r},3)/RM({r - 1},3)|^2 -> {built.params()}",
          same_row_space(built.generator, rm_generator((r, 4))))

# %%
# Starting from the two length-1 codes and squaring repeatedly rebuilds the
# whole family.
from qrm.reed_muller import rm_code_by_squaring

print(rm_code_by_squaring(2, 6).params(), rm_code((2, 6)).params())
