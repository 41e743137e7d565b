"""From circuit text to an executable schedule.

The pipeline is parse -> decompose -> merge -> partition. Decomposition
rewrites every gate over {u1, u3, cx}; merging fuses runs of single-qubit
gates; partitioning groups instructions into gate, measurement, and solo
partitions that take memory noise between them.
"""

from paulisim.circuit import format_instruction, parse_circuit
from paulisim.transpile import compile_circuit, decompose, format_schedule, merge

TEXT = """\
qubits 3
h q[0]
t q[0]
h q[0]
cx q[0],q[1]
ccx q[0],q[1],q[2]
measure q[2]
reset q[2]
expect ZZI
ensemble
"""

n, instructions = parse_circuit(TEXT)
low = decompose(instructions)
fused = merge(n, low)
print(f"source {len(instructions)} -> decomposed {len(low)} -> fused {len(fused)}")

print("\nfused program:")
for ins in fused:
    print(" ", format_instruction(ins))

# compile_circuit does the same and then partitions
merged, schedule = compile_circuit(n, instructions)
print("\nschedule:")
print(format_schedule(schedule))
