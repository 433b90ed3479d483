import math
import numpy as np
import pytest
from clockforge import (Gate, Circuit, PenaltyPair, ClockWeights,
HermitianMatrix, ValidationError, HypothesisError, circuit_unitary,
history_unitary, propagation_hamiltonian, penalized_hamiltonian,
acceptance_probability, unsat_penalty, geometrical_lower_bound,
geometrical_sandwich, projector_pair_quantities, padded_construction,
clock_hamiltonian, kron, eigvals, set_cap, get_cap)
from clockforge.circuitham import (BUILTIN_GATES, qubit_values_projector,
padded_cos2_bound, padded_cos2_exact)

def test_gate_embedding():
    x = BUILTIN_GATES["X"]
    assert np.allclose(Gate.named("X", [0]).embed(2), np.kron(x, np.eye(2)))
    assert np.allclose(Gate.named("X", [1]).embed(2), np.kron(np.eye(2), x))
    # Control on qubit 1, target qubit 0
    swapped = Gate.named("CNOT", [1, 0]).embed(2)
    assert np.allclose(swapped, [
        [1, 0, 0, 0],
        [0, 0, 0, 1],
        [0, 0, 1, 0],
        [0, 1, 0, 0]
    ])

def test_gate_validation():
    with pytest.raises(ValidationError):
        Gate([[1, 1], [0, 1]], [0])
    with pytest.raises(ValidationError):
        Gate(np.eye(4), [0])
    with pytest.raises(ValidationError):
        Gate.named("CNOT", [1, 1])
    with pytest.raises(ValidationError):
        Gate.named("SWAP", [0, 1])
    with pytest.raises(ValidationError):
        Circuit(1, [Gate.named("X", [1])])

def test_circuit_string():
    circuit = Circuit(2, [
        Gate.named("H", [0]),
        Gate.named("CNOT", [0, 1]),
        Gate(np.diag([1, 1j]), [1]),
    ])
    restored = Circuit.from_string(circuit.to_string())
    assert restored.T == 3
    assert np.allclose(circuit_unitary(restored), circuit_unitary(circuit))

def test_circuit_unitary_order():
    circuit = Circuit(1, [Gate.named("H", [0]), Gate.named("S", [0])])
    assert np.allclose(circuit_unitary(circuit), BUILTIN_GATES["S"] @
    BUILTIN_GATES["H"])

def test_standard_penalties():
    penalties = PenaltyPair.standard(2, [1], 0)
    assert penalties.pi_in.allclose(np.diag([0, 1, 0, 1]))
    assert penalties.pi_out.allclose(np.diag([1, 1, 0, 0]))
    with pytest.raises(ValidationError):
        qubit_values_projector(2, [0, 0], [0, 1])
    with pytest.raises(ValidationError):
        qubit_values_projector(2, [2], [0])
    with pytest.raises(ValidationError):
        qubit_values_projector(2, [0], [2])

def test_acceptance():
    penalties = PenaltyPair.standard(1, [0], 0)
    hadamard = Circuit(1, [Gate.named("H", [0])])
    assert acceptance_probability(hadamard, penalties).epsilon == (
    pytest.approx(0.5))
    flip = Circuit(1, [Gate.named("X", [0])])
    assert acceptance_probability(flip, penalties).epsilon == pytest.approx(1.0)
    assert acceptance_probability(Circuit.identity(1, 3), penalties).epsilon == (
    pytest.approx(0.0, abs=1e-14))
    trivial = PenaltyPair(np.eye(2), np.zeros((2, 2)))
    result = acceptance_probability(hadamard, trivial)
    assert result.trivial_kernel
    assert float(result) == 0.0

def test_history_conjugation():
    circuit = Circuit.random(2, 4, np.random.default_rng(2))
    weights = ClockWeights.kitaev(4)
    W = history_unitary(circuit)
    conjugated = propagation_hamiltonian(weights, circuit).conjugate_by(W)
    expected = kron(clock_hamiltonian(weights), HermitianMatrix.identity(4))
    assert conjugated.allclose(expected, atol=1e-12)

def test_propagation_validation():
    with pytest.raises(ValidationError):
        propagation_hamiltonian(ClockWeights.kitaev(3), Circuit.identity(1, 4))
    with pytest.raises(ValidationError):
        penalized_hamiltonian(ClockWeights.kitaev(2), Circuit.identity(1, 2),
        PenaltyPair.standard(2, [], 0))

def test_dense_cap():
    previous = get_cap("max_circuit_T")
    set_cap("max_circuit_T", 4)
    try:
        with pytest.raises(ValidationError):
            propagation_hamiltonian(ClockWeights.kitaev(5), Circuit.identity(1,
            5))
    finally:
        set_cap("max_circuit_T", previous)

def test_geometrical_lower_bound():
    assert geometrical_lower_bound(0.1, 0.25, 0.25, 0.25) == pytest.approx(
    0.003125)
    assert geometrical_lower_bound(0.1, 1.0, 0.25, 0.25) == 0.0
    with pytest.raises(ValidationError):
        geometrical_lower_bound(-0.1, 0.25, 0.25, 0.25)
    with pytest.raises(ValidationError):
        geometrical_lower_bound(0.1, 1.25, 0.25, 0.25)

@pytest.mark.parametrize("T", [4, 8, 16])
def test_identity_unsat_sandwich(T):
    # Clock states |t> x |x> with the register untouched; the input penalty
    # acts on the register state |1>, the output penalty on |0>
    circuit = Circuit.identity(1, T)
    penalties = PenaltyPair.standard(1, [0], 0)
    weights = ClockWeights.kitaev(T)
    penalty = unsat_penalty(weights, circuit, penalties)
    one_sided = 2 - 2 * math.cos(math.pi / (2 * T + 3))
    assert penalty == pytest.approx(one_sided, abs=1e-10)
    sandwich = geometrical_sandwich(weights, circuit, penalties)
    assert sandwich.precondition
    assert sandwich.holds
    assert sandwich.upper == pytest.approx(2 - 2 * math.cos(math.pi / (T + 2)),
    abs=1e-10)

def test_accepting_circuit_has_no_penalty():
    circuit = Circuit(1, [Gate.named("X", [0]), Gate.named("I", [0])])
    penalties = PenaltyPair.standard(1, [0], 0)
    assert unsat_penalty(ClockWeights.kitaev(2), circuit, penalties) == (
    pytest.approx(0.0, abs=1e-10))

def test_projector_pair_hadamard():
    penalties = PenaltyPair.standard(1, [0], 0)
    report = projector_pair_quantities(penalties, BUILTIN_GATES["H"])
    assert len(report) == 1
    block = report.blocks[0]
    assert report.eps == pytest.approx(0.5)
    assert block.mu == pytest.approx(0.5)
    assert block.lambda_ == pytest.approx(0.5)
    assert block.eta == pytest.approx(1.0)
    assert block.trace == pytest.approx(1.0)
    assert not report.sharp_bounds_hold

def test_projector_pair_identity():
    penalties = PenaltyPair.standard(1, [0], 0)
    report = projector_pair_quantities(penalties, np.eye(2))
    block = report.blocks[0]
    assert report.eps == pytest.approx(0.0, abs=1e-14)
    assert block.mu == pytest.approx(1.0)
    assert block.lambda_ == pytest.approx(0.0, abs=1e-14)
    assert block.eta == pytest.approx(0.0, abs=1e-7)

def test_projector_pair_hypotheses():
    penalties = PenaltyPair.standard(1, [0], 0)
    with pytest.raises(HypothesisError) as error:
        projector_pair_quantities(penalties, BUILTIN_GATES["X"])
    assert error.value.hypothesis == "full-rank"
    with pytest.raises(HypothesisError) as error:
        projector_pair_quantities(PenaltyPair.standard(2, [], 0), np.eye(4))
    assert error.value.hypothesis == "half-rank"

def test_projector_pair_random():
    rng = np.random.default_rng(9)
    penalties = PenaltyPair.standard(2, [1], 0)
    checked = 0
    for _ in range(10):
        circuit = Circuit.random(2, 4, rng)
        try:
            report = projector_pair_quantities(penalties, circuit_unitary(
            circuit))
        except HypothesisError:
            continue
        checked += 1
        assert len(report) == 2
        for block in report.blocks:
            assert block.mu >= 1 - report.eps - 1e-9
            assert block.lambda_ <= report.eps + 1e-9
    assert checked > 0

def test_padding_identity():
    T = 4
    construction = padded_construction(Circuit.identity(1, T),
    PenaltyPair.standard(1, [0], 0))
    assert construction.hamiltonian.dim == 2 * (2 * T + 1)
    assert construction.cos2theta == pytest.approx(padded_cos2_exact(T, 0.0))
    assert construction.cos2theta <= padded_cos2_bound(0.0)
    assert construction.unsat_penalty > 0.0

def test_padding_needs_even_length():
    with pytest.raises(ValidationError):
        padded_construction(Circuit.identity(1, 3), PenaltyPair.standard(1, [0],
        0))

def test_padded_bound_values():
    assert padded_cos2_bound(0.0) == pytest.approx(0.75)
    assert padded_cos2_bound(0.25) == pytest.approx(0.875)
    assert padded_cos2_exact(4, 0.0) == pytest.approx(2 / 3)
