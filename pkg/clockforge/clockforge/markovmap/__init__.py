from .chain import MarkovChain, stationary_distribution
from .conductance import conductance, cheeger_bounds, Strategy
from .birth_death import (BirthDeathReport, birth_death_bounds, median_state,
path_quantity)
from .mapping import (ClassicalMapping, ProductBound, MappingReport,
quantum_to_classical, orthogonal_excitation, positive_ground_ratios,
tridiag_product_bound, mapping_report)
