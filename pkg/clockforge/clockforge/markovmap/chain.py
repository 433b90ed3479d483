from __future__ import annotations
from typing import Iterable, Any
import os
import json
import jsonschema
import numpy as np
import scipy.linalg
from ..config import get_tolerance
from ..errors import ValidationError

JSON_SCHEMA = json.loads(open(os.path.join(os.path.dirname(__file__),
"chain_schema.json"), "r").read())

class MarkovChain:
    """ Reversible discrete-time Markov chain on the states 0,..,T, given by a
        row-stochastic transition matrix and its stationary distribution """

    def __init__(self, P: np.ndarray | Iterable[Iterable[float]], pi:
    Iterable[float] | None = None):
        """ Constructor from a transition matrix. If no stationary distribution
            is given, it is computed from the matrix. Rows have to sum to one,
            entries have to be non-negative and detailed balance has to hold
            within the configured tolerances """
        matrix = np.array(P, dtype=float)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValidationError(f"Transition matrix has to be square, got "
            f"shape {matrix.shape}")
        if matrix.shape[0] < 1:
            raise ValidationError("Markov chain needs at least one state")
        if np.min(matrix) < -1e-12:
            raise ValidationError(f"Transition matrix has negative entry "
            f"{np.min(matrix):.3e}")
        row_defect = float(np.max(np.abs(matrix.sum(axis=1) - 1.0)))
        if row_defect > get_tolerance("stochastic"):
            raise ValidationError(f"Rows of the transition matrix do not sum to "
            f"one (defect {row_defect:.3e})")
        matrix = np.clip(matrix, 0.0, None)
        if pi is None:
            stationary = stationary_distribution(matrix)
        else:
            stationary = np.array(list(pi), dtype=float)
            if stationary.shape != (matrix.shape[0],):
                raise ValidationError(f"Stationary distribution has length "
                f"{len(stationary)}, expected {matrix.shape[0]}")
            if np.min(stationary) < 0.0 or abs(stationary.sum() - 1.0) > 1e-10:
                raise ValidationError("Stationary distribution has to be a "
                "probability vector")
        flows = stationary[:, None] * matrix
        balance = float(np.max(np.abs(flows - flows.T)))
        if balance > get_tolerance("balance"):
            raise ValidationError(f"Detailed balance violated by {balance:.3e}")
        matrix.setflags(write=False)
        stationary.setflags(write=False)
        self._P = matrix
        self._pi = stationary

    def __len__(self) -> int:
        """ Returns the number of states """
        return self._P.shape[0]

    def __repr__(self) -> str:
        """ Canonical representation """
        return (f"{self.__class__.__name__}({self._P.tolist()!r}, "
        f"{self._pi.tolist()!r})")

    def __str__(self) -> str:
        return self.to_string()

    @classmethod
    def from_string(cls, text: str) -> MarkovChain:
        """ Convert JSON to a MarkovChain object """
        data = json.loads(text)
        jsonschema.validate(data, JSON_SCHEMA)
        return cls(data["P"], data.get("pi"))

    def to_string(self) -> str:
        """ Convert this chain to JSON """
        return json.dumps({"P": self._P.tolist(), "pi": self._pi.tolist()})

    @property
    def P(self) -> np.ndarray:
        return self._P

    @property
    def pi(self) -> np.ndarray:
        return self._pi

    @property
    def T(self) -> int:
        """ Index of the last state """
        return self._P.shape[0] - 1

    def flows(self) -> np.ndarray:
        """ Ergodic flows Q(x, y) = pi(x) P(x, y) """
        return self._pi[:, None] * self._P

    def is_birth_death(self) -> bool:
        """ Check that only transitions between neighbouring states occur """
        n = len(self)
        band = np.abs(np.subtract.outer(np.arange(n), np.arange(n))) <= 1
        return bool(np.all(self._P[~band] == 0.0))

    def symmetrized(self) -> np.ndarray:
        """ The symmetric matrix D^(1/2) P D^(-1/2), computed as
            sqrt(P(x, y) P(y, x)) off the diagonal, which is valid for
            reversible chains and does not divide by small stationary weights
            """
        root = np.sqrt(self._P * self._P.T)
        np.fill_diagonal(root, self._P.diagonal())
        return root

    def eigenvalues(self) -> np.ndarray:
        """ Real eigenvalues of the transition matrix in descending order """
        if self.is_birth_death() and len(self) > 1:
            sym = self.symmetrized()
            values = scipy.linalg.eigvalsh_tridiagonal(sym.diagonal(),
            sym.diagonal(1), lapack_driver="stebz")
        else:
            values = scipy.linalg.eigvalsh(self.symmetrized())
        return values[::-1]

    def spectral_gap(self) -> float:
        """ One minus the second largest eigenvalue """
        if len(self) < 2:
            raise ValidationError("Spectral gap is undefined for a single state")
        values = self.eigenvalues()
        return float(1.0 - values[1])

def stationary_distribution(P: np.ndarray) -> np.ndarray:
    """ Stationary distribution of a transition matrix. Birth-death chains with
        positive transitions use the product formula from detailed balance,
        other chains the left eigenvector for eigenvalue one """
    n = P.shape[0]
    upper = P.diagonal(1)
    lower = P.diagonal(-1)
    band = np.abs(np.subtract.outer(np.arange(n), np.arange(n))) <= 1
    if n == 1:
        return np.ones(1)
    if np.all(P[~band] == 0.0) and np.all(upper > 0.0) and np.all(lower > 0.0):
        log_weights = np.concatenate([[0.0], np.cumsum(np.log(upper) - np.log(
        lower))])
        weights = np.exp(log_weights - np.max(log_weights))
        return weights / weights.sum()
    values, vectors = scipy.linalg.eig(P.T)
    index = int(np.argmin(np.abs(values - 1.0)))
    vector = np.abs(vectors[:, index].real)
    return vector / vector.sum()
