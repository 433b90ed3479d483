from .schedule import (Schedule, ScheduleKind, interpolate,
clock_initial_hamiltonian, combine, dense_form)
from .sweep import (GapCurve, MonotoneReport, OverlapEstimate, gap_sweep,
monotone_excited_check, final_overlap_estimate, endpoint_probability,
trial_energy_check)
