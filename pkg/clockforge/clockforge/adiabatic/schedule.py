from __future__ import annotations
from typing import Literal, get_args
import numpy as np
from ..errors import ValidationError
from ..spectral import HermitianMatrix, SymTridiagonal, SpectralMatrix
from ..clockham import (ClockWeights, clock_tridiagonal, heavy_endpoint_matrix)

ScheduleKind = Literal["standard-linear", "modified-scaled"]
FinalClock = Literal["kitaev", "heavy-endpoint"]

def clock_initial_hamiltonian(T: int) -> SymTridiagonal:
    """ Initial Hamiltonian I - |0><0| on the clock register, which has the
        start state as unique ground state and gap 1 """
    if T < 1:
        raise ValidationError(f"Clock needs T >= 1, got T={T}")
    diag = np.ones(T + 1)
    diag[0] = 0.0
    return SymTridiagonal(diag, np.zeros(T))

def dense_form(matrix: SpectralMatrix) -> HermitianMatrix:
    """ Dense Hermitian form of either matrix type, in the original basis """
    if isinstance(matrix, SymTridiagonal):
        return matrix.to_hermitian()
    return matrix

def combine(x: SpectralMatrix, y: SpectralMatrix, alpha: float, beta: float
) -> SpectralMatrix:
    """ alpha x + beta y, kept tridiagonal when both operands are tridiagonal in
        the same gauge """
    if isinstance(x, SymTridiagonal) and isinstance(y, SymTridiagonal):
        same_gauge = (x.phases is None and y.phases is None) or (x.phases is
        not None and y.phases is not None and np.allclose(x.phases, y.phases,
        atol=1e-14))
        if same_gauge:
            return SymTridiagonal(alpha * x.diag + beta * y.diag, alpha *
            x.offdiag + beta * y.offdiag, x.phases)
    return alpha * dense_form(x) + beta * dense_form(y)

class Schedule:
    """ Interpolation between an initial and a final Hamiltonian. The standard
        schedule is (1 - s) H_init + s H_final, the modified one H_init + s A
        H_final with a large scale A """

    def __init__(self, kind: ScheduleKind, h_init: SpectralMatrix, h_final:
    SpectralMatrix, A: float | None = None):
        """ Constructor with the kind of schedule and both endpoints. The scale
            A is only used by the modified schedule and defaults to T^4 with T
            the dimension minus one, i.e. the clock length """
        if kind not in get_args(ScheduleKind):
            raise ValidationError(f"Unknown schedule '{kind}', expected one of "
            f"{', '.join(get_args(ScheduleKind))}")
        if h_init.dim != h_final.dim:
            raise ValidationError(f"Initial and final Hamiltonian have "
            f"dimensions {h_init.dim} and {h_final.dim}")
        if A is None:
            A = float(max(1, h_init.dim - 1) ** 4)
        if not A > 0.0:
            raise ValidationError(f"Scale A has to be positive, got {A}")
        self._kind = kind
        self._h_init = h_init
        self._h_final = h_final
        self._A = float(A)

    def __repr__(self) -> str:
        """ Canonical representation """
        return (f"{self.__class__.__name__}({self._kind!r}, {self._h_init!r}, "
        f"{self._h_final!r}, A={self._A!r})")

    @classmethod
    def standard_clock(cls, T: int, final: FinalClock = "kitaev") -> Schedule:
        """ Standard linear schedule from I - |0><0| to the unweighted clock or
            to the heavy-endpoint clock """
        if final == "kitaev":
            h_final = clock_tridiagonal(ClockWeights.kitaev(T)).gauged()
        elif final == "heavy-endpoint":
            h_final = heavy_endpoint_matrix(T)
        else:
            raise ValidationError(f"Unknown final clock '{final}'")
        return cls("standard-linear", clock_initial_hamiltonian(T), h_final)

    @classmethod
    def modified_clock(cls, T: int, A: float | None = None) -> Schedule:
        """ Modified schedule H_init + s A H with the heavy-endpoint clock H and
            A = T^4 by default """
        return cls("modified-scaled", clock_initial_hamiltonian(T),
        heavy_endpoint_matrix(T), A)

    @property
    def kind(self) -> ScheduleKind:
        return self._kind

    @property
    def h_init(self) -> SpectralMatrix:
        return self._h_init

    @property
    def h_final(self) -> SpectralMatrix:
        return self._h_final

    @property
    def A(self) -> float:
        return self._A

    @property
    def dim(self) -> int:
        return self._h_init.dim

def interpolate(schedule: Schedule, s: float) -> SpectralMatrix:
    """ The scheduled Hamiltonian at s in [0, 1] """
    if not 0.0 <= s <= 1.0:
        raise ValidationError(f"Schedule parameter has to lie in [0, 1], got "
        f"s={s}")
    if schedule.kind == "standard-linear":
        return combine(schedule.h_init, schedule.h_final, 1.0 - s, s)
    return combine(schedule.h_init, schedule.h_final, 1.0, s * schedule.A)
