from .weights import ClockWeights, clock_hamiltonian, clock_tridiagonal
from .distribution import (TimeDistribution, metropolis_chain,
metropolis_hamiltonian, heavy_endpoint_distribution,
heavy_endpoint_distribution_exact, heavy_endpoint_matrix)
from .stoquastic import (stoquastic_ratios, stoquastic_lower_bound,
endpoint_penalized_clock, dirichlet_ground_energy, sine_ansatz)
from .coupled import (CoupledBlockParams, coupled_block,
coupled_block_tridiagonal, coupled_block_symbolic, coupled_block_ansatz,
coupled_block_case_positions, coupled_block_case_values, CASES)
