"""QFT fidelity versus rotation noise strength.

With a shrink factor r on every rotation axis, each gate becomes an equal
mixture of two rotations offset by delta0 = arccos(r). For small delta0
the infidelity of the whole QFT grows quadratically, which shows up as a
log-log slope of 2.
"""

import math

import numpy as np

from paulisim.generators import gen_qft
from paulisim.sweep import sweep

for n in (2, 3, 4):
    rows = sweep(gen_qft(n), "r", [1.0], "fidelity")
    print(f"QFT({n}) noiseless fidelity: {rows[0].metric:.12f}")

deltas = np.geomspace(1e-3, 3e-2, 8)
rows = sweep(gen_qft(4), "r", [float(np.cos(d)) for d in deltas], "fidelity")

print("\ndelta0        1 - fidelity")
infidelity = []
for d, row in zip(deltas, rows):
    infidelity.append(1.0 - row.metric)
    print(f"{d:.6f}    {infidelity[-1]:.3e}")

slope = np.polyfit(np.log(deltas), np.log(infidelity), 1)[0]
print(f"\nlog-log slope: {slope:.4f} (quadratic response)")

# the same experiment in terms of the angle spread instead of r
r_for_one_degree = math.cos(math.radians(1.0))
rows = sweep(gen_qft(4), "r", [r_for_one_degree], "fidelity")
print(f"QFT(4) fidelity at a 1 degree spread: {rows[0].metric:.6f}")
