from .graph import (LabeledEdge, UnitaryLabeledGraph, EquivalenceReport,
ulg_hamiltonian, is_simple, laplacian_equivalence_check)
from .diameter import (DiameterReport, distance_matrix, matrix_diameter,
chebyshev_diameter_bound, diameter_bound_check)
from .frustrated import (FrustratedPair, LowEnergyCertificate,
frustrated_pair_analysis, low_energy_unsat_upper_bound)
