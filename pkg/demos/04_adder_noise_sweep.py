"""Which noise family hurts a ripple-carry adder most?

The generated adder computes 110 + 011 = 1001 (binary, MSB first). We
sweep each noise parameter separately and then compare the three families
at a matched per-step severity of 0.99.
"""

from paulisim.circuit import NoiseModel
from paulisim.engine import run_circuit
from paulisim.generators import adder_success_pattern, gen_adder
from paulisim.sweep import format_table, pattern_mass, sweep

text = gen_adder("110", "011")
pattern = adder_success_pattern("110", "011")
print("success pattern (x = don't care):", pattern)

clean = run_circuit(text)
print("noiseless success:", pattern_mass(clean.records[-1].dist, pattern))

for param in ("r", "f", "g", "d1"):
    rows = sweep(text, param, [1.0, 0.999, 0.995, 0.99], f"success:{pattern}")
    print()
    print(format_table(param, f"success:{pattern}", rows))


def success(noise: NoiseModel, init: str = "zero") -> float:
    report = run_circuit(text, noise, init=init)
    return pattern_mass(report.records[-1].dist, pattern)


# matched severity: memory noise on every partition boundary dominates,
# gate noise is next, state prep and readout matter least
err_memory = 1.0 - success(NoiseModel(f=0.99, g=0.99))
err_gate = 1.0 - success(NoiseModel(r_x=0.99, r_y=0.99, r_z=0.99, r_cx=0.99))
err_boundary = 1.0 - success(NoiseModel(d1=0.99, p=0.99), init="thermal")
print(f"\nerror at severity 0.99  memory: {err_memory:.3f}"
      f"  gate: {err_gate:.3f}  boundary: {err_boundary:.3f}")
