"""Block and qubit error rates under independent qubit errors.

Run with ``python demos/04_error_curves.py``.  Writes ``error_curves.csv`` to
the working directory; plot it with any tool you like.
"""

# %%
# A block fails when more than t of its n qubits are hit.  The tail is summed in
# the log domain so n = 1024 is no trouble.
from qrm.error_analysis import block_error_bound, block_error_exact, qubit_error_rate

pe = block_error_bound(1024, 15, 0.003)
print(f"P_e = {pe:.6e}  (exact rational: {float(block_error_exact(1024, 15, 0.003)):.6e})")
print(f"P_q = {qubit_error_rate(pe, 1024):.3e}")

# %%
# Compare the [[1024,252,32]] code with single-qubit-encoding codes of similar
# correcting power.
import numpy as np

from qrm.error_analysis import comparison_codes, curve_rows, performance_curve

codes = comparison_codes()
curves = performance_curve(codes, 1e-4, 0.2, 40, "log")
for p_index in (0, 20, 39):
    p = curves[codes[0].label][p_index].p
    print(f"p={p:.2e} " + " ".join(f"{c.label}:{curves[c.label][p_index].pq:.2e}" for c in codes))

# %%
# Where does each code's qubit rate cross the raw error rate?
for c in codes:
    pts = curves[c.label]
    helps = [pt.p for pt in pts if pt.pq < pt.p]
    print(c.label, "helps up to p ~", f"{max(helps):.3g}" if helps else "never")

# %%
# Monte Carlo with a fixed seed reproduces the analytic tail.
from qrm.error_analysis import monte_carlo_block_error

mc = monte_carlo_block_error(13, 2, 0.05, 200_000, seed=1)
print(f"MC {mc.estimate:.5f} +/- {mc.stderr:.5f}  vs  {block_error_bound(13, 2, 0.05):.5f}")

# %%
import csv

with open("error_curves.csv", "w", newline="") as fh:
    writer = csv.writer(fh)
    writer.writerow(["label", "p", "pe", "pq"])
    writer.writerows(curve_rows(curves))
grid = np.array([pt.p for pt in curves[codes[0].label]])
print("wrote", sum(len(v) for v in curves.values()), f"rows over p in [{grid.min():.0e}, {grid.max():.1f}]")
