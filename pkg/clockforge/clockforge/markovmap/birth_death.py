from __future__ import annotations
from dataclasses import dataclass
import numpy as np
from ..errors import ValidationError, ClaimVerificationError
from .chain import MarkovChain

@dataclass(frozen=True)
class BirthDeathReport:
    """ Path quantity ell of a birth-death chain around its median state and
        the gap sandwich 1/(2 ell) <= gap <= 4/ell """

    ell: float
    ell_plus: float
    ell_minus: float
    median: int
    gap: float

    @property
    def lower(self) -> float:
        return 1.0 / (2.0 * self.ell)

    @property
    def upper(self) -> float:
        return 4.0 / self.ell

    def __str__(self) -> str:
        """ String representation for a formatted string showing results """
        items = {
            "ell": f"{self.ell:.6g}",
            "Median state": str(self.median),
            "Gap": f"{self.gap:.6e}",
            "Lower bound": f"{self.lower:.6e}",
            "Upper bound": f"{self.upper:.6e}",
        }
        output = []
        for key, value in items.items():
            output.append((key + ":").ljust(15) + " " + value)
        return "\n".join(output)

def median_state(pi: np.ndarray) -> int:
    """ Smallest t with pi([0, t]) >= 1/2, which also gives pi([t, T]) >= 1/2
        """
    return int(np.searchsorted(np.cumsum(pi), 0.5 - 1e-15))

def path_quantity(chain: MarkovChain) -> tuple[float, float, float, int]:
    """ ell = max(ell_plus, ell_minus) with
        ell_plus = max_{j > m} sum_{k=m+1}^{j} 1 / (pi_k P(k, k-1)) pi([j, T])
        ell_minus = max_{j < m} sum_{k=j}^{m-1} 1 / (pi_k P(k, k+1)) pi([0, j])
        around the median state m. Returns (ell, ell_plus, ell_minus, m) """
    if len(chain) < 2:
        raise ValidationError("Birth-death bounds need at least two states")
    if not chain.is_birth_death():
        raise ValidationError("Chain is not a birth-death chain")
    P = chain.P
    pi = chain.pi
    up = P.diagonal(1)
    down = P.diagonal(-1)
    if not (np.all(up > 0.0) and np.all(down > 0.0) and np.all(pi > 0.0)):
        raise ValidationError("Birth-death chain is not irreducible")
    m = median_state(pi)
    T = chain.T
    ell_plus = 0.0
    if m < T:
        resistance = np.cumsum(1.0 / (pi[m + 1:] * down[m:]))
        tails = np.cumsum(pi[::-1])[::-1][m + 1:]
        ell_plus = float(np.max(resistance * tails))
    ell_minus = 0.0
    if m > 0:
        resistance = np.cumsum((1.0 / (pi[:m] * up[:m]))[::-1])[::-1]
        heads = np.cumsum(pi)[:m]
        ell_minus = float(np.max(resistance * heads))
    return max(ell_plus, ell_minus), ell_plus, ell_minus, m

def birth_death_bounds(chain: MarkovChain) -> BirthDeathReport:
    """ Evaluate ell for a birth-death chain and check that the spectral gap
        lies within [1/(2 ell), 4/ell]. Both sides of the median are evaluated,
        the distribution need not be symmetric """
    ell, ell_plus, ell_minus, m = path_quantity(chain)
    gap = chain.spectral_gap()
    slack = 1e-12
    if not 1.0 / (2.0 * ell) - slack <= gap <= 4.0 / ell + slack:
        raise ClaimVerificationError(f"Gap {gap:.6e} outside of [1/(2 ell), "
        f"4/ell] = [{1.0 / (2.0 * ell):.6e}, {4.0 / ell:.6e}]")
    return BirthDeathReport(ell, ell_plus, ell_minus, m, gap)
