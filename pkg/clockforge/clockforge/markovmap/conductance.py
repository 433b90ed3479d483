from __future__ import annotations
from typing import Literal
import numpy as np
from ..config import get_cap
from ..errors import ValidationError, NumericalError
from ..logger import log_warning
from .chain import MarkovChain

Strategy = Literal["interval", "exact"]

_CHUNK = 1 << 15

def _ratio(boundary: np.ndarray, mass: np.ndarray, complement: np.ndarray) -> (
np.ndarray):
    """ Q(S, S^c) / min(pi(S), pi(S^c)), infinite for cuts whose smaller side
        has no stationary mass """
    denominator = np.minimum(mass, complement)
    ratio = np.full(len(boundary), np.inf)
    positive = denominator > 0.0
    ratio[positive] = boundary[positive] / denominator[positive]
    return ratio

def _clip(best: float) -> float:
    if not np.isfinite(best):
        raise NumericalError("Every cut has zero stationary mass on one side")
    return 0.0 if best <= 0.0 else min(best, 1.0)

def _interval_conductance(flows: np.ndarray, pi: np.ndarray) -> float:
    """ Minimum over all contiguous intervals [i, j] except the full range.
        Boundary flows and both masses are sums of non-negative terms, never
        differences, so intervals in a tail of tiny stationary mass keep their
        relative accuracy """
    n = len(pi)
    # below[x, i]: flow from x into states < i, above[x, j]: into states > j
    below = np.zeros((n, n + 1))
    below[:, 1:] = np.cumsum(flows, axis=1)
    above = np.zeros((n, n))
    above[:, :-1] = np.cumsum(flows[:, ::-1], axis=1)[:, ::-1][:, 1:]
    heads = np.concatenate([[0.0], np.cumsum(pi)])
    tails = np.concatenate([np.cumsum(pi[::-1])[::-1], [0.0]])
    best = np.inf
    for i in range(n):
        j = np.arange(i, n)
        outgoing = np.cumsum(below[i:, i]) + np.cumsum(above[i:, :], axis=0)[
        j - i, j]
        mass = np.cumsum(pi[i:])
        complement = heads[i] + tails[j + 1]
        if i == 0:
            outgoing, mass, complement = outgoing[:-1], mass[:-1], complement[
            :-1]
        if len(mass) == 0:
            continue
        best = min(best, float(np.min(_ratio(outgoing, mass, complement))))
    return _clip(best)

def _exact_conductance(flows: np.ndarray, pi: np.ndarray) -> float:
    """ Minimum over all 2^n - 2 proper subsets, enumerated as bitmasks in
        chunks """
    n = len(pi)
    powers = 1 << np.arange(n)
    best = np.inf
    for start in range(1, (1 << n) - 1, _CHUNK):
        masks = np.arange(start, min(start + _CHUNK, (1 << n) - 1))
        inside = ((masks[:, None] & powers[None, :]) > 0).astype(float)
        outside = 1.0 - inside
        boundary = np.einsum("ki,ij,kj->k", inside, flows, outside)
        best = min(best, float(np.min(_ratio(boundary, inside @ pi, outside @
        pi))))
    return _clip(best)

def conductance(chain: MarkovChain, strategy: Strategy = "interval") -> float:
    """ Conductance min_S Q(S, S^c) / min(pi(S), pi(S^c)) with ergodic flows
        Q(x, y) = pi(x) P(x, y). The interval strategy is exact for birth-death
        chains, since every set splits into intervals and the ratio of a
        disjoint union is at least the smallest ratio of its parts. The exact
        strategy enumerates all subsets and is capped in the number of states
        """
    if len(chain) < 2:
        raise ValidationError("Conductance needs at least two states")
    flows = chain.flows()
    if strategy == "interval":
        if not chain.is_birth_death():
            log_warning("Interval conductance of a non birth-death chain is "
            "only an upper bound")
        return _interval_conductance(flows, chain.pi)
    elif strategy == "exact":
        if chain.T > get_cap("max_exact_conductance_T"):
            raise ValidationError(f"Exact conductance is capped at T="
            f"{get_cap('max_exact_conductance_T')}, got T={chain.T}")
        return _exact_conductance(flows, chain.pi)
    raise ValidationError(f"Unknown conductance strategy '{strategy}'")

def cheeger_bounds(phi: float) -> tuple[float, float]:
    """ Cheeger inequality phi^2 / 2 <= gap <= 2 phi for reversible chains """
    if not 0.0 <= phi <= 1.0:
        raise ValidationError(f"Conductance has to lie in [0, 1], got {phi}")
    phi = abs(float(phi))
    return phi * phi / 2.0, 2.0 * phi
