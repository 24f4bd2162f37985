"""Encoded basis states of a small quantum Reed-Muller code.

Run with ``python demos/03_encoded_states.py``.
"""

# %%
# [[4,2,2]] uses C1 = RM(1,2) (even-weight words) and C2 = RM(0,2) (repetition).
from qrm import css_from_rm
from qrm.css import coset_leaders, encode_basis1, encode_basis2, hadamard_amplitude

code = css_from_rm(1, 2)
print(code, "t =", code.t)

# %%
# One logical basis state per coset of C2 in C1, labelled by its lightest word.
leaders = coset_leaders(code)
print(leaders)

# %%
# In the computational basis a state sums over all of C1 with signs from w.
state = encode_basis1(code, "0011")
for v, sign in sorted(state.terms.items()):
    print(f"{'+' if sign > 0 else '-'}|{v}>")

# %%
# In the conjugate basis the same logical state is the coset w + C2.
print(encode_basis2(code, "0011").terms)

# %%
# A Hadamard on every qubit takes one description to the other: the amplitude
# is |C1| on the coset and zero elsewhere.
print({u: hadamard_amplitude(state, u) for u in ("0011", "1100", "0000", "0101")})

# %%
# Larger example: [[16,6,4]] has 64 logical basis states of 2048 terms each.
big = css_from_rm(2, 4)
print(big, len(coset_leaders(big)), len(encode_basis1(big, coset_leaders(big)[5]).terms))
