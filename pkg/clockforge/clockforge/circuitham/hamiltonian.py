from __future__ import annotations
from dataclasses import dataclass
import math
import numpy as np
import scipy.linalg
from ..config import get_cap, get_tolerance
from ..errors import ValidationError, NumericalError
from ..logger import log_warning
from ..spectral import HermitianMatrix, eigvals, ground_state, spectral_gap
from ..clockham import ClockWeights, clock_hamiltonian, clock_tridiagonal
from .circuit import Circuit
from .penalty import PenaltyPair

def _check_caps(circuit: Circuit):
    if circuit.n > get_cap("max_qubits"):
        raise ValidationError(f"Circuit on {circuit.n} qubits exceeds the cap "
        f"of {get_cap('max_qubits')} qubits")

def _check_dense_caps(circuit: Circuit):
    _check_caps(circuit)
    if circuit.T > get_cap("max_circuit_T"):
        raise ValidationError(f"Circuit with T={circuit.T} exceeds the cap of "
        f"T={get_cap('max_circuit_T')} for dense Hamiltonians")
    dim = (circuit.T + 1) * circuit.dim
    if dim > get_cap("max_dense_dim"):
        raise ValidationError(f"Dimension {dim} exceeds the dense cap of "
        f"{get_cap('max_dense_dim')}")

def gate_unitaries(circuit: Circuit) -> list[np.ndarray]:
    """ Each gate embedded in the full register """
    _check_caps(circuit)
    return [gate.embed(circuit.n) for gate in circuit.gates]

def circuit_unitary(circuit: Circuit) -> np.ndarray:
    """ Product U = U_T ... U_1 of all gates """
    result = np.eye(circuit.dim, dtype=complex)
    for unitary in gate_unitaries(circuit):
        result = unitary @ result
    return result

def history_unitary(circuit: Circuit) -> np.ndarray:
    """ W = sum_t |t><t| x U_t ... U_1, which conjugates the propagation
        Hamiltonian to the clock Hamiltonian tensored with the identity """
    _check_dense_caps(circuit)
    partial = np.eye(circuit.dim, dtype=complex)
    blocks = [partial]
    for unitary in gate_unitaries(circuit):
        partial = unitary @ partial
        blocks.append(partial)
    return scipy.linalg.block_diag(*blocks)

def propagation_hamiltonian(weights: ClockWeights, circuit: Circuit) -> (
HermitianMatrix):
    """ Weighted propagation Hamiltonian sum_t a_t |t><t| x I + sum_t (b_t
        |t+1><t| x U_{t+1} + h.c.) on clock and computational register """
    if weights.T != circuit.T:
        raise ValidationError(f"Clock weights have T={weights.T} but the "
        f"circuit has {circuit.T} gates")
    _check_dense_caps(circuit)
    d = circuit.dim
    size = (circuit.T + 1) * d
    dense = np.zeros((size, size), dtype=complex)
    identity = np.eye(d)
    for t, a in enumerate(weights.a):
        dense[t * d:(t + 1) * d, t * d:(t + 1) * d] = a * identity
    for t, (b, unitary) in enumerate(zip(weights.b, gate_unitaries(circuit))):
        block = b * unitary
        dense[(t + 1) * d:(t + 2) * d, t * d:(t + 1) * d] = block
        dense[t * d:(t + 1) * d, (t + 1) * d:(t + 2) * d] = block.conj().T
    return HermitianMatrix(dense)

def endpoint_penalties(T: int, penalties: PenaltyPair) -> HermitianMatrix:
    """ The penalty terms |0><0| x Pi_in + |T><T| x Pi_out """
    d = penalties.dim
    size = (T + 1) * d
    dense = np.zeros((size, size), dtype=complex)
    dense[:d, :d] = penalties.pi_in.entries
    dense[T * d:, T * d:] += penalties.pi_out.entries
    return HermitianMatrix(dense)

def penalized_hamiltonian(weights: ClockWeights, circuit: Circuit, penalties:
PenaltyPair) -> HermitianMatrix:
    """ Modified Feynman-Kitaev Hamiltonian, the propagation Hamiltonian plus
        input and output penalties at the first and last clock state """
    if penalties.dim != circuit.dim:
        raise ValidationError(f"Penalties act on dimension {penalties.dim}, "
        f"the circuit on {circuit.dim}")
    return propagation_hamiltonian(weights, circuit) + endpoint_penalties(
    circuit.T, penalties)

@dataclass(frozen=True)
class AcceptanceResult:
    """ Maximum acceptance probability over valid inputs. If one of the kernels
        is trivial there is no valid input or no accepted output, and the
        probability is defined as 0 """

    epsilon: float
    trivial_kernel: bool = False

    def __float__(self) -> float:
        return self.epsilon

def acceptance_of_unitary(unitary: np.ndarray, penalties: PenaltyPair) -> (
AcceptanceResult):
    """ Largest squared singular value of Q_out U Q_in restricted to the
        kernels of the penalties """
    kernel_in = penalties.kernel_in()
    kernel_out = penalties.kernel_out()
    if kernel_in.shape[1] == 0 or kernel_out.shape[1] == 0:
        return AcceptanceResult(0.0, True)
    overlap = kernel_out.conj().T @ unitary @ kernel_in
    singular = scipy.linalg.svdvals(overlap)
    return AcceptanceResult(float(min(1.0, singular[0] ** 2)), False)

def acceptance_probability(circuit: Circuit, penalties: PenaltyPair) -> (
AcceptanceResult):
    """ Maximum acceptance probability eps = max |<eta|U|xi>|^2 over valid
        inputs xi and accepted outputs eta """
    if penalties.dim != circuit.dim:
        raise ValidationError(f"Penalties act on dimension {penalties.dim}, "
        f"the circuit on {circuit.dim}")
    return acceptance_of_unitary(circuit_unitary(circuit), penalties)

def _clamped_difference(upper: float, lower: float, scale: float, what: str) -> (
float):
    difference = upper - lower
    if difference < -1e-10 * max(1.0, scale):
        raise NumericalError(f"{what} is negative", abs(difference))
    return max(0.0, difference)

def unsat_penalty(weights: ClockWeights, circuit: Circuit, penalties:
PenaltyPair) -> float:
    """ UNSAT penalty E(H_FK) - E(H_prop) of the given circuit """
    h_prop = propagation_hamiltonian(weights, circuit)
    h_fk = h_prop + endpoint_penalties(circuit.T, penalties)
    e_fk = float(eigvals(h_fk, 1)[0])
    e_prop = float(eigvals(h_prop, 1)[0])
    return _clamped_difference(e_fk, e_prop, h_fk.norm, "UNSAT penalty")

def geometrical_lower_bound(gap: float, eps: float, pi0: float, piT: float) -> (
float):
    """ Lower bound (gap / 4)(1 - sqrt(eps)) min(pi_0, pi_T) on the UNSAT
        penalty """
    if gap < 0.0:
        raise ValidationError(f"Spectral gap has to be non-negative, got {gap}")
    if not 0.0 <= eps <= 1.0:
        raise ValidationError(f"Acceptance probability has to lie in [0, 1], "
        f"got {eps}")
    if not (0.0 <= pi0 <= 1.0 and 0.0 <= piT <= 1.0):
        raise ValidationError(f"Endpoint weights have to lie in [0, 1], got "
        f"{pi0} and {piT}")
    return gap / 4.0 * (1.0 - math.sqrt(eps)) * min(pi0, piT)

@dataclass(frozen=True)
class GeometricalSandwich:
    """ Both sides of lower bound <= UNSAT penalty <= E(clock + |0><0| +
        |T><T|) - E(clock), and whether the gap precondition of the lower bound
        was met """

    lower: float
    penalty: float
    upper: float
    gap: float
    eps: float
    pi0: float
    piT: float
    precondition: bool

    @property
    def holds(self) -> bool:
        return (self.lower <= self.penalty + 1e-10 and self.penalty <=
        self.upper + 1e-10)

    def __str__(self) -> str:
        """ String representation for a formatted string showing results """
        items = {
            "Lower bound": f"{self.lower:.6e}",
            "UNSAT penalty": f"{self.penalty:.6e}",
            "Upper bound": f"{self.upper:.6e}",
            "Clock gap": f"{self.gap:.6e}",
            "Epsilon": f"{self.eps:.6f}",
            "Precondition": str(self.precondition),
            "Holds": str(self.holds),
        }
        output = []
        for key, value in items.items():
            output.append((key + ":").ljust(15) + " " + value)
        return "\n".join(output)

def geometrical_sandwich(weights: ClockWeights, circuit: Circuit, penalties:
PenaltyPair) -> GeometricalSandwich:
    """ Evaluate the geometrical lower bound and the endpoint-penalty upper
        bound around the UNSAT penalty of the given circuit. The lower bound
        needs the clock gap to be below the smallest nonzero eigenvalue of the
        penalty terms; this is checked rather than assumed """
    clock = clock_tridiagonal(weights)
    ground = ground_state(clock)
    gap = spectral_gap(clock)
    probabilities = np.abs(ground.vector) ** 2
    pi0, piT = float(probabilities[0]), float(probabilities[-1])
    eps = acceptance_probability(circuit, penalties).epsilon
    penalty = unsat_penalty(weights, circuit, penalties)
    endpoints = np.zeros(weights.T + 1)
    endpoints[0] = endpoints[-1] = 1.0
    penalized_clock = clock_hamiltonian(weights) + HermitianMatrix.diagonal(
    endpoints)
    upper = _clamped_difference(float(eigvals(penalized_clock, 1)[0]),
    ground.energy, penalized_clock.norm, "Endpoint penalty energy")
    penalty_values = np.concatenate([scipy.linalg.eigvalsh(
    penalties.pi_in.entries), scipy.linalg.eigvalsh(penalties.pi_out.entries)])
    nonzero = penalty_values[penalty_values > get_tolerance("kernel")]
    smallest = float(np.min(nonzero)) if len(nonzero) > 0 else math.inf
    precondition = gap < smallest
    if not precondition:
        log_warning(f"Clock gap {gap:.4g} is not below the penalty gap "
        f"{smallest:.4g}, geometrical lower bound is not guaranteed")
    lower = geometrical_lower_bound(gap, eps, min(1.0, pi0), min(1.0, piT))
    return GeometricalSandwich(lower, penalty, upper, gap, eps, pi0, piT,
    precondition)
