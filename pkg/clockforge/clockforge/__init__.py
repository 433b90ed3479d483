from .config import (VERSION, set_tolerance, get_tolerance, set_cap, get_cap,
tolerances, caps)
from .errors import (ClockforgeError, ConfigError, ValidationError,
HypothesisError, ReducibleClockError, NumericalError, ClaimVerificationError)
from .spectral import (HermitianMatrix, SymTridiagonal, EigenDecomposition,
GroundState, eig_hermitian, eig_tridiagonal, eigvals, spectral_gap,
ground_state, kron, principal_angles, operator_norm)
from .clockham import (ClockWeights, TimeDistribution, CoupledBlockParams,
clock_hamiltonian, clock_tridiagonal, metropolis_chain, metropolis_hamiltonian,
heavy_endpoint_distribution, heavy_endpoint_distribution_exact,
heavy_endpoint_matrix, stoquastic_lower_bound, endpoint_penalized_clock,
coupled_block, coupled_block_symbolic)
from .circuitham import (Gate, Circuit, PenaltyPair, circuit_unitary,
history_unitary, propagation_hamiltonian, penalized_hamiltonian,
acceptance_probability, unsat_penalty, geometrical_lower_bound,
geometrical_sandwich, projector_pair_quantities, padded_construction)
from .markovmap import (MarkovChain, conductance, cheeger_bounds,
quantum_to_classical, orthogonal_excitation, birth_death_bounds,
tridiag_product_bound, mapping_report)
from .adiabatic import (Schedule, interpolate, gap_sweep,
monotone_excited_check, final_overlap_estimate)
from .ulg import (UnitaryLabeledGraph, ulg_hamiltonian, is_simple,
laplacian_equivalence_check, matrix_diameter, diameter_bound_check,
frustrated_pair_analysis, low_energy_unsat_upper_bound)
