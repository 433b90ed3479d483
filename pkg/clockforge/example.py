from clockforge import (ClockWeights, TimeDistribution, Circuit, PenaltyPair,
Schedule, clock_hamiltonian, metropolis_hamiltonian, heavy_endpoint_matrix,
spectral_gap, unsat_penalty, geometrical_sandwich, mapping_report, gap_sweep)
import numpy as np

T = 20
print(spectral_gap(clock_hamiltonian(ClockWeights.kitaev(T)))) # 2 - 2cos(pi/(T+1))
print(spectral_gap(heavy_endpoint_matrix(T))) # Clock with weight 1/4 on both ends
print(mapping_report(metropolis_hamiltonian(TimeDistribution.uniform(T))))

circuit = Circuit.random(2, 8, np.random.default_rng(0)) # 2 qubits, 8 gates
penalties = PenaltyPair.standard(2, [1], 0) # Ancilla qubit 1, output qubit 0
print(unsat_penalty(ClockWeights.kitaev(8), circuit, penalties))
print(geometrical_sandwich(ClockWeights.kitaev(8), circuit, penalties))

print(gap_sweep(Schedule.modified_clock(T), 51).gap_min) # Stays open for the heavy-endpoint clock
