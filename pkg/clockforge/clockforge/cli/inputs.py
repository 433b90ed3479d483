from __future__ import annotations
from typing import Literal
import json
import numpy as np
from ..errors import ConfigError
from ..spectral import HermitianMatrix, SymTridiagonal, SpectralMatrix
from ..clockham import (ClockWeights, TimeDistribution, clock_tridiagonal,
heavy_endpoint_distribution, heavy_endpoint_matrix, endpoint_penalized_clock,
metropolis_hamiltonian)
from ..circuitham import Circuit, PenaltyPair
from ..markovmap import MarkovChain
from ..ulg import UnitaryLabeledGraph, ulg_hamiltonian
from .experiment import ExperimentConfig, parse_indices

ClockKind = Literal["kitaev", "heavy-endpoint", "penalized", "uniform"]
CLOCK_KINDS = ("kitaev", "heavy-endpoint", "penalized", "uniform")
DistributionKind = Literal["uniform", "heavy-endpoint", "random"]
DISTRIBUTION_KINDS = ("uniform", "heavy-endpoint", "random")
CircuitKind = Literal["identity", "random"]
CIRCUIT_KINDS = ("identity", "random")
WEIGHT_KINDS = ("kitaev", "heavy-endpoint")

def read_text(path: str) -> str:
    try:
        with open(path, "r") as file:
            return file.read()
    except OSError as error:
        raise ConfigError(f"Cannot read '{path}': {error}") from error

def clock_matrix(kind: ClockKind, T: int) -> SymTridiagonal:
    """ The clock Hamiltonians the commands work with. The uniform clock is
        the Metropolis Hamiltonian of the uniform distribution """
    if kind == "kitaev":
        return clock_tridiagonal(ClockWeights.kitaev(T)).gauged()
    if kind == "heavy-endpoint":
        return heavy_endpoint_matrix(T)
    if kind == "penalized":
        return endpoint_penalized_clock(T)
    if kind == "uniform":
        return metropolis_hamiltonian(TimeDistribution.uniform(T))
    raise ConfigError(f"Unknown clock '{kind}', expected one of "
    f"{', '.join(CLOCK_KINDS)}")

def distribution(kind: DistributionKind, T: int, rng: np.random.Generator) -> (
TimeDistribution):
    if kind == "uniform":
        return TimeDistribution.uniform(T)
    if kind == "heavy-endpoint":
        return heavy_endpoint_distribution(T)
    if kind == "random":
        return TimeDistribution.random(T, rng)
    raise ConfigError(f"Unknown distribution '{kind}', expected one of "
    f"{', '.join(DISTRIBUTION_KINDS)}")

def clock_weights(kind: str, T: int) -> ClockWeights:
    """ Kitaev weights, or the weights of the heavy-endpoint clock """
    if kind == "kitaev":
        return ClockWeights.kitaev(T)
    if kind == "heavy-endpoint":
        return ClockWeights.from_tridiagonal(heavy_endpoint_matrix(T))
    raise ConfigError(f"Unknown weights '{kind}', expected one of "
    f"{', '.join(WEIGHT_KINDS)}")

def circuit(config: ExperimentConfig, T: int) -> Circuit:
    """ Circuit from --file, or generated with T gates on --n qubits """
    path = config.get("file")
    if path is not None:
        return Circuit.from_string(read_text(path))
    kind = config.get("circuit", "identity")
    n = int(config.get("n", 1))
    if kind == "identity":
        return Circuit.identity(n, T)
    if kind == "random":
        return Circuit.random(n, T, config.rng(T))
    raise ConfigError(f"Unknown circuit '{kind}', expected one of "
    f"{', '.join(CIRCUIT_KINDS)}")

def penalties(config: ExperimentConfig, n: int) -> PenaltyPair:
    """ Standard penalties: ancillas fixed to |0>, output qubit penalized in
        |0> """
    ancillas = parse_indices(str(config.get("ancillas", "0")))
    return PenaltyPair.standard(n, ancillas, int(config.get("output_qubit", 0)))

def matrix_file(path: str) -> SpectralMatrix:
    """ A SymTridiagonal, HermitianMatrix or UnitaryLabeledGraph JSON file,
        told apart by its keys """
    text = read_text(path)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as error:
        raise ConfigError(f"'{path}' is not valid JSON: {error}") from error
    if not isinstance(data, dict):
        raise ConfigError(f"'{path}' does not contain a JSON object")
    if "diag" in data:
        return SymTridiagonal.from_string(text)
    if "entries" in data:
        return HermitianMatrix.from_string(text)
    if "edges" in data:
        return ulg_hamiltonian(UnitaryLabeledGraph.from_string(text))
    raise ConfigError(f"'{path}' is neither a matrix nor a graph")

def chain_file(path: str) -> MarkovChain:
    return MarkovChain.from_string(read_text(path))

def graph_file(path: str) -> UnitaryLabeledGraph:
    return UnitaryLabeledGraph.from_string(read_text(path))
