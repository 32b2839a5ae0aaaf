from braket.circuits import Circuit

circuit = (
    Circuit()
    .h(0)
    .x(1)
    .y(2)
    .z(0)
    .rx(1, 1.5707963267948966)
    .ry(2, -0.5)
    .rz(0, 3.141592653589793)
    .cnot(2, 0)
    .ccnot(0, 2, 1)
    .swap(1, 2)
    .cphaseshift(0, 1, 0.7853981633974483)
    .measure(2)  # clbit 1
    .measure(0)  # clbit 0
)

print(circuit)
