import pennylane as qml

dev = qml.device("default.qubit", wires=8, shots=1000)


@qml.qnode(dev)
def circuit():
    qml.Hadamard(wires=0)
    qml.Hadamard(wires=1)
    qml.Hadamard(wires=2)
    qml.Hadamard(wires=3)
    qml.PauliX(wires=4)
    qml.CNOT(wires=[0, 5])
    qml.CNOT(wires=[0, 6])
    qml.CNOT(wires=[1, 4])
    qml.CNOT(wires=[1, 6])
    qml.Toffoli(wires=[0, 1, 4])
    qml.Toffoli(wires=[0, 1, 5])
    qml.Toffoli(wires=[0, 1, 6])
    qml.Toffoli(wires=[0, 1, 7])
    # measure wire 4 -> clbit 4
    # measure wire 5 -> clbit 5
    # measure wire 6 -> clbit 6
    # measure wire 7 -> clbit 7
    qml.Hadamard(wires=3)
    qml.ControlledPhaseShift(1.5707963267948966, wires=[2, 3])
    qml.ControlledPhaseShift(0.7853981633974483, wires=[1, 3])
    qml.ControlledPhaseShift(0.39269908169872414, wires=[0, 3])
    qml.Hadamard(wires=2)
    qml.ControlledPhaseShift(1.5707963267948966, wires=[1, 2])
    qml.ControlledPhaseShift(0.7853981633974483, wires=[0, 2])
    qml.Hadamard(wires=1)
    qml.ControlledPhaseShift(1.5707963267948966, wires=[0, 1])
    qml.Hadamard(wires=0)
    qml.SWAP(wires=[0, 3])
    qml.SWAP(wires=[1, 2])
    # measure wire 0 -> clbit 4
    # measure wire 1 -> clbit 5
    # measure wire 2 -> clbit 6
    # measure wire 3 -> clbit 7
    return [qml.sample(qml.PauliZ(4)), qml.sample(qml.PauliZ(5)), qml.sample(qml.PauliZ(6)), qml.sample(qml.PauliZ(7)), qml.sample(qml.PauliZ(0)), qml.sample(qml.PauliZ(1)), qml.sample(qml.PauliZ(2)), qml.sample(qml.PauliZ(3))]


print(qml.draw(circuit)())
