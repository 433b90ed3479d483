from .gates import Gate, BUILTIN_GATES, is_unitary
from .circuit import Circuit
from .penalty import PenaltyPair, qubit_values_projector
from .hamiltonian import (AcceptanceResult, GeometricalSandwich,
gate_unitaries, circuit_unitary, history_unitary, propagation_hamiltonian,
endpoint_penalties, penalized_hamiltonian, acceptance_of_unitary,
acceptance_probability, unsat_penalty, geometrical_lower_bound,
geometrical_sandwich)
from .kitaev import JordanBlock, ProjectorPairReport, projector_pair_quantities
from .padding import (PaddedConstruction, padded_construction,
padded_cos2_bound, padded_cos2_exact, window_penalty)
