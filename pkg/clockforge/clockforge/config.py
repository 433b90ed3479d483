from __future__ import annotations
from typing import Literal, get_args
import os
from .errors import ConfigError

VERSION = "0.3.1"
TOL_ENV_VAR = "CLOCKFORGE_TOL"

Tolerance = Literal["tol", "hermitian", "degeneracy", "stoquastic", "kernel",
"idempotent", "unitary", "stochastic", "balance"]
Cap = Literal["max_qubits", "max_circuit_T", "max_dense_dim",
"max_exact_conductance_T"]

_tolerances: dict[str, float] = {
    "tol": 1e-10,
    "hermitian": 1e-12,
    "degeneracy": 1e-9,
    "stoquastic": 1e-12,
    "kernel": 1e-9,
    "idempotent": 1e-10,
    "unitary": 1e-10,
    "stochastic": 1e-10,
    "balance": 1e-9,
}

_caps: dict[str, int] = {
    "max_qubits": 6,
    "max_circuit_T": 64,
    "max_dense_dim": 8192,
    "max_exact_conductance_T": 20,
}

def set_tolerance(name: Tolerance, value: float):
    """ Change one of the default tolerances. The solver tolerance "tol" is
        relative to the matrix norm, the others are absolute """
    if name not in get_args(Tolerance):
        raise ConfigError(f"Unknown tolerance '{name}', expected one of "
        f"{', '.join(get_args(Tolerance))}")
    if not value > 0.0:
        raise ConfigError(f"Tolerance '{name}' has to be positive, got "
        f"{value}")
    _tolerances[name] = float(value)

def get_tolerance(name: Tolerance) -> float:
    """ Get the current value of a default tolerance """
    if name not in _tolerances:
        raise ConfigError(f"Unknown tolerance '{name}'")
    return _tolerances[name]

def set_cap(name: Cap, value: int):
    """ Change one of the size caps for dense computations """
    if name not in get_args(Cap):
        raise ConfigError(f"Unknown cap '{name}', expected one of "
        f"{', '.join(get_args(Cap))}")
    if int(value) < 1:
        raise ConfigError(f"Cap '{name}' has to be at least 1, got {value}")
    _caps[name] = int(value)

def get_cap(name: Cap) -> int:
    """ Get the current value of a size cap """
    if name not in _caps:
        raise ConfigError(f"Unknown cap '{name}'")
    return _caps[name]

def tolerances() -> dict[str, float]:
    """ Snapshot of all tolerances, used for config hashing """
    return dict(_tolerances)

def caps() -> dict[str, int]:
    """ Snapshot of all size caps """
    return dict(_caps)

def load_environment():
    """ Apply overrides from environment variables. Called once on import """
    raw = os.environ.get(TOL_ENV_VAR)
    if raw is None or raw.strip() == "":
        return
    try:
        value = float(raw)
    except ValueError as error:
        raise ConfigError(f"{TOL_ENV_VAR} has to be a number, got '{raw}'") from (
        error)
    set_tolerance("tol", value)

load_environment()
