from qiskit import QuantumCircuit

qc = QuantumCircuit(3, 2)
qc.h(0)
qc.x(1)
qc.y(2)
qc.z(0)
qc.rx(1.5707963267948966, 1)
qc.ry(-0.5, 2)
qc.rz(3.141592653589793, 0)
qc.cx(2, 0)
qc.ccx(0, 2, 1)
qc.swap(1, 2)
qc.cp(0.7853981633974483, 0, 1)
qc.measure(2, 1)
qc.measure(0, 0)

print(qc)
