"""Reed-Muller codes, their parameters, and the two dimension tables.

Run with ``python demos/01_codes_and_tables.py``.
"""

# %%
# A Reed-Muller generator stacks the all-ones row, the m coordinate rows, and
# every product of up to r coordinate rows.  Column j of the coordinate block is
# the binary expansion of j.
from qrm import rm_code, rm_generator
from qrm.gf2 import weight_enumerator

print(rm_generator((1, 3)).to_text())

# %%
# The code object knows (n, k, d).  The distance is the closed form 2^(m-r);
# brute force agrees for small codes.
from qrm.gf2 import min_weight_bruteforce

code = rm_code((1, 3))
print(code.params(), "brute force d =", min_weight_bruteforce(code))
print("weight enumerator:", weight_enumerator(code).coefficients)

# %%
# RM(r,m) grows with r: each code contains the previous one.
from qrm.reed_muller import check_nesting

print(all(check_nesting((r, 6), (r + 1, 6)) for r in range(6)))

# %%
# The classical table lists k for every length n = 2^m and distance d = 2^(m-r).
from qrm.reed_muller import classical_table

for row in classical_table(10):
    if row.n == 1024:
        print(f"n={row.n:5d} d={row.d:4d} k={row.k}")

# %%
# Pairing RM(r,m) with its dual RM(m-r-1,m) gives a quantum code whenever the
# dual sits inside.  k = 2 k(C1) - n logical qubits, distance 2^(m-r).
from qrm.css import quantum_table

for row in quantum_table(10):
    if row.n in (32, 1024):
        print(f"[[{row.n},{row.k},{row.d}]]")
