from __future__ import annotations
from typing import Iterable
import os
import json
import math
import jsonschema
import numpy as np
import sympy
from ..errors import ValidationError
from ..logger import log_warning
from ..markovmap.chain import MarkovChain
from ..spectral import SymTridiagonal

JSON_SCHEMA = json.loads(open(os.path.join(os.path.dirname(__file__),
"distribution_schema.json"), "r").read())

class TimeDistribution:
    """ Probability distribution over the clock states 0,..,T with support on
        every state """

    def __init__(self, T: int, pi: Iterable[float]):
        """ Constructor with the number of steps and T + 1 probabilities """
        self._T = T
        self._pi = np.array(list(pi), dtype=float)
        if T < 1:
            raise ValidationError(f"Distribution needs T >= 1, got T={T}")
        if len(self._pi) != T + 1:
            raise ValidationError(f"Expected {T + 1} probabilities, got "
            f"{len(self._pi)}")
        if not np.all(self._pi > 0.0):
            raise ValidationError("Distribution needs support on every clock "
            "state")
        if abs(self._pi.sum() - 1.0) > 1e-12:
            raise ValidationError(f"Probabilities sum to {self._pi.sum():.15g}, "
            f"expected 1")
        self._pi.setflags(write=False)

    def __repr__(self) -> str:
        """ Canonical representation """
        return f"{self.__class__.__name__}({self._T!r}, {self._pi.tolist()!r})"

    def __str__(self) -> str:
        return self.to_string()

    def __len__(self) -> int:
        return len(self._pi)

    @classmethod
    def uniform(cls, T: int) -> TimeDistribution:
        return cls(T, np.full(T + 1, 1.0 / (T + 1)))

    @classmethod
    def random(cls, T: int, rng: np.random.Generator) -> TimeDistribution:
        """ Distribution drawn uniformly from the probability simplex """
        weights = rng.dirichlet(np.ones(T + 1))
        weights = np.maximum(weights, np.finfo(float).tiny)
        return cls(T, weights / weights.sum())

    @classmethod
    def from_string(cls, text: str) -> TimeDistribution:
        """ Convert JSON to a TimeDistribution object """
        data = json.loads(text)
        jsonschema.validate(data, JSON_SCHEMA)
        return cls(data["T"], data["pi"])

    def to_string(self) -> str:
        """ Convert this distribution to JSON """
        return json.dumps({"T": self._T, "pi": self._pi.tolist()})

    @property
    def T(self) -> int:
        return self._T

    @property
    def pi(self) -> np.ndarray:
        return self._pi

    def amplitudes(self) -> np.ndarray:
        """ Ground state amplitudes sqrt(pi_t) of the associated Hamiltonian """
        return np.sqrt(self._pi)

def _metropolis_rates(pi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """ Forward rates P(t, t+1) and backward rates P(t+1, t) """
    forward = 0.25 * np.minimum(1.0, pi[1:] / pi[:-1])
    backward = 0.25 * np.minimum(1.0, pi[:-1] / pi[1:])
    return forward, backward

def metropolis_chain(distribution: TimeDistribution) -> MarkovChain:
    """ Metropolis chain for the distribution, moving to a neighbouring state
        with probability 1/4 min(1, pi_next / pi_current) and staying otherwise
        """
    pi = distribution.pi
    forward, backward = _metropolis_rates(pi)
    P = np.diag(forward, 1) + np.diag(backward, -1)
    np.fill_diagonal(P, 1.0 - P.sum(axis=1))
    return MarkovChain(P, pi)

def metropolis_hamiltonian(distribution: TimeDistribution) -> SymTridiagonal:
    """ Frustration-free Hamiltonian H = 1 - D^(1/2) P D^(-1/2) of the
        Metropolis chain. Its ground energy is 0 with ground state sqrt(pi) """
    pi = distribution.pi
    forward, backward = _metropolis_rates(pi)
    diag = np.zeros(len(pi))
    diag[:-1] += forward
    diag[1:] += backward
    ratio = np.sqrt(pi[1:] / pi[:-1])
    offdiag = -0.25 * np.minimum(ratio, 1.0 / ratio)
    return SymTridiagonal(diag, offdiag)

def heavy_endpoint_distribution_exact(T: int) -> list[sympy.Rational]:
    """ Exact distribution with pi_0 = pi_T = 1/4 and the remaining weight 1/2
        spread evenly over the interior """
    if T < 2:
        raise ValidationError(f"Heavy-endpoint distribution needs T >= 2, got "
        f"T={T}")
    quarter = sympy.Rational(1, 4)
    interior = sympy.Rational(1, 2 * (T - 1))
    values = [quarter] + [interior] * (T - 1) + [quarter]
    assert sum(values) == 1
    return values

def heavy_endpoint_distribution(T: int) -> TimeDistribution:
    """ Floating point version of the heavy-endpoint distribution, converted
        once from exact rationals """
    return TimeDistribution(T, [float(value) for value in
    heavy_endpoint_distribution_exact(T)])

def heavy_endpoint_matrix(T: int) -> SymTridiagonal:
    """ Closed form of the Metropolis Hamiltonian of the heavy-endpoint
        distribution: 1/2 times the matrix with corner diagonals 1/(T-1),
        interior diagonals 1, corner off-diagonals -1/sqrt(2T-2) and interior
        off-diagonals -1/2. For T = 2 the interior state outweighs the endpoints
        and the closed form no longer applies, the Metropolis construction is
        returned instead """
    if T < 2:
        raise ValidationError(f"Heavy-endpoint matrix needs T >= 2, got T={T}")
    if T == 2:
        log_warning("Closed form heavy-endpoint matrix does not apply at T=2, "
        "using the Metropolis construction")
        return metropolis_hamiltonian(heavy_endpoint_distribution(T))
    diag = np.ones(T + 1)
    diag[0] = diag[-1] = 1.0 / (T - 1)
    offdiag = np.full(T, -0.5)
    offdiag[0] = offdiag[-1] = -1.0 / math.sqrt(2 * T - 2)
    return SymTridiagonal(0.5 * diag, 0.5 * offdiag)
