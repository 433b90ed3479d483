from __future__ import annotations
from typing import Iterable
import numpy as np
from ..config import get_tolerance
from ..errors import ValidationError
from ..spectral import HermitianMatrix, kernel_basis

def qubit_values_projector(n: int, qubits: Iterable[int], values: Iterable[int]
) -> HermitianMatrix:
    """ Projector penalizing every basis state in which one of the given qubits
        differs from its accepted value, i.e. I - (x |v_q><v_q|). An empty qubit
        list gives the zero projector """
    qubits = list(qubits)
    values = list(values)
    if len(qubits) != len(values):
        raise ValidationError(f"Got {len(qubits)} qubits but {len(values)} "
        f"values")
    if len(qubits) == 0:
        return HermitianMatrix.zeros(2 ** n)
    if len(set(qubits)) != len(qubits):
        raise ValidationError(f"Penalty qubits {qubits} are not distinct")
    if min(qubits) < 0 or max(qubits) >= n:
        raise ValidationError(f"Penalty qubits {qubits} out of range for {n} "
        f"qubits")
    if any(value not in (0, 1) for value in values):
        raise ValidationError(f"Qubit values have to be 0 or 1, got {values}")
    states = np.arange(2 ** n)
    accepted = np.ones(2 ** n, dtype=bool)
    for qubit, value in zip(qubits, values):
        accepted &= ((states >> (n - 1 - qubit)) & 1) == value
    return HermitianMatrix.diagonal((~accepted).astype(float))

class PenaltyPair:
    """ Input and output penalty projectors on the computational register """

    def __init__(self, pi_in: HermitianMatrix | np.ndarray, pi_out:
    HermitianMatrix | np.ndarray):
        """ Constructor from two orthogonal projectors of equal dimension """
        if not isinstance(pi_in, HermitianMatrix):
            pi_in = HermitianMatrix(pi_in)
        if not isinstance(pi_out, HermitianMatrix):
            pi_out = HermitianMatrix(pi_out)
        if pi_in.dim != pi_out.dim:
            raise ValidationError(f"Penalties act on different dimensions "
            f"{pi_in.dim} and {pi_out.dim}")
        tol = get_tolerance("idempotent")
        if not pi_in.is_projector(tol):
            raise ValidationError("Input penalty is not a projector")
        if not pi_out.is_projector(tol):
            raise ValidationError("Output penalty is not a projector")
        self._pi_in = pi_in
        self._pi_out = pi_out

    def __repr__(self) -> str:
        """ Canonical representation """
        return f"{self.__class__.__name__}({self._pi_in!r}, {self._pi_out!r})"

    @classmethod
    def from_qubits(cls, n: int, in_qubits: Iterable[int], in_values:
    Iterable[int], out_qubits: Iterable[int], out_values: Iterable[int]) -> (
    PenaltyPair):
        """ Penalties by qubit lists: inputs have to carry in_values on the
            in_qubits, and the circuit accepts when the out_qubits carry
            out_values """
        return cls(qubit_values_projector(n, in_qubits, in_values),
        qubit_values_projector(n, out_qubits, out_values))

    @classmethod
    def standard(cls, n: int, ancillas: Iterable[int] = (), output: int = 0) -> (
    PenaltyPair):
        """ Standard convention: ancillas are fixed to |0> at the input and the
            output qubit is penalized in state |0> """
        ancillas = list(ancillas)
        return cls.from_qubits(n, ancillas, [0] * len(ancillas), [output], [1])

    @classmethod
    def zero(cls, n: int) -> PenaltyPair:
        """ No penalties at all """
        return cls(HermitianMatrix.zeros(2 ** n), HermitianMatrix.zeros(2 ** n))

    @property
    def dim(self) -> int:
        return self._pi_in.dim

    @property
    def pi_in(self) -> HermitianMatrix:
        return self._pi_in

    @property
    def pi_out(self) -> HermitianMatrix:
        return self._pi_out

    def kernel_in(self) -> np.ndarray:
        """ Orthonormal basis of ker Pi_in, the valid inputs """
        return kernel_basis(self._pi_in)

    def kernel_out(self) -> np.ndarray:
        """ Orthonormal basis of ker Pi_out, the accepted outputs """
        return kernel_basis(self._pi_out)
