from braket.circuits import Circuit

circuit = (
    Circuit()
    .h(0)
    .cnot(0, 1)
    .measure(0)  # clbit 0
    .measure(1)  # clbit 1
)

print(circuit)
