from .hermitian import HermitianMatrix, as_array
from .tridiagonal import SymTridiagonal
from .eigen import (EigenDecomposition, GroundState, SpectralMatrix,
eig_hermitian, eig_tridiagonal, eigvals, spectral_gap, ground_state, kron,
principal_angles, range_basis, kernel_basis, fix_phase, operator_norm)
