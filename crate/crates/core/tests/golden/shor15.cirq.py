import cirq

q = cirq.LineQubit.range(8)
circuit = cirq.Circuit()
circuit.append(cirq.H(q[0]))
circuit.append(cirq.H(q[1]))
circuit.append(cirq.H(q[2]))
circuit.append(cirq.H(q[3]))
circuit.append(cirq.X(q[4]))
circuit.append(cirq.CNOT(q[0], q[5]))
circuit.append(cirq.CNOT(q[0], q[6]))
circuit.append(cirq.CNOT(q[1], q[4]))
circuit.append(cirq.CNOT(q[1], q[6]))
circuit.append(cirq.TOFFOLI(q[0], q[1], q[4]))
circuit.append(cirq.TOFFOLI(q[0], q[1], q[5]))
circuit.append(cirq.TOFFOLI(q[0], q[1], q[6]))
circuit.append(cirq.TOFFOLI(q[0], q[1], q[7]))
circuit.append(cirq.measure(q[4], key="c4"))
circuit.append(cirq.measure(q[5], key="c5"))
circuit.append(cirq.measure(q[6], key="c6"))
circuit.append(cirq.measure(q[7], key="c7"))
circuit.append(cirq.H(q[3]))
circuit.append(cirq.cphase(1.5707963267948966)(q[2], q[3]))
circuit.append(cirq.cphase(0.7853981633974483)(q[1], q[3]))
circuit.append(cirq.cphase(0.39269908169872414)(q[0], q[3]))
circuit.append(cirq.H(q[2]))
circuit.append(cirq.cphase(1.5707963267948966)(q[1], q[2]))
circuit.append(cirq.cphase(0.7853981633974483)(q[0], q[2]))
circuit.append(cirq.H(q[1]))
circuit.append(cirq.cphase(1.5707963267948966)(q[0], q[1]))
circuit.append(cirq.H(q[0]))
circuit.append(cirq.SWAP(q[0], q[3]))
circuit.append(cirq.SWAP(q[1], q[2]))
circuit.append(cirq.measure(q[0], key="c4"))
circuit.append(cirq.measure(q[1], key="c5"))
circuit.append(cirq.measure(q[2], key="c6"))
circuit.append(cirq.measure(q[3], key="c7"))

print(circuit)
