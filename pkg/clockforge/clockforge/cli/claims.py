from __future__ import annotations
from typing import Any
import math
import numpy as np
from ..errors import ClaimVerificationError, ConfigError, HypothesisError
from ..logger import log_info, log_warning
from ..spectral import (HermitianMatrix, SymTridiagonal, eigvals, ground_state,
kron)
from ..clockham import (TimeDistribution, CoupledBlockParams,
ClockWeights, clock_hamiltonian, clock_tridiagonal, metropolis_hamiltonian,
heavy_endpoint_distribution, heavy_endpoint_matrix, endpoint_penalized_clock,
dirichlet_ground_energy, sine_ansatz, stoquastic_lower_bound,
stoquastic_ratios, coupled_block_tridiagonal, coupled_block_ansatz,
coupled_block_case_positions, coupled_block_case_values)
from ..circuitham import (Circuit, Gate, PenaltyPair, circuit_unitary,
history_unitary, propagation_hamiltonian, geometrical_sandwich,
geometrical_lower_bound, padded_construction, projector_pair_quantities)
from ..markovmap import (mapping_report, quantum_to_classical,
tridiag_product_bound)
from ..adiabatic import (Schedule, gap_sweep, monotone_excited_check,
endpoint_probability, trial_energy_check)
from ..ulg import (UnitaryLabeledGraph,
laplacian_equivalence_check, matrix_diameter, diameter_bound_check,
frustrated_pair_analysis, low_energy_unsat_upper_bound)
from . import inputs
from .commands import Command
from .experiment import ExperimentConfig, Table, Result, parse_sizes

def _require(condition: bool, message: str):
    if not condition:
        raise ClaimVerificationError(message)

def _sizes(config: ExperimentConfig, default: str) -> list[int]:
    return parse_sizes(str(config.get("T", default)))

def _samples(config: ExperimentConfig, default: int) -> int:
    samples = int(config.get("samples", default))
    if samples < 1:
        raise ConfigError(f"Number of samples has to be positive, got {samples}")
    return samples

def _doubling_bracket(scaled: dict[int, float], name: str, low: float, high:
float):
    """ Each scaled value is positive and changes by a factor in (low, high)
        whenever T doubles """
    for T, value in scaled.items():
        _require(value > 1e-6, f"{name} {value:.3e} vanishes at T={T}")
    for T, value in scaled.items():
        if 2 * T in scaled:
            ratio = scaled[2 * T] / value
            _require(low < ratio < high, f"{name} changes by a factor "
            f"{ratio:.4g} from T={T} to T={2 * T}")

def metropolis_ground(config: ExperimentConfig) -> Result:
    """ Metropolis Hamiltonians are frustration-free with ground state
        sqrt(pi), and the heavy-endpoint closed form agrees with the
        Metropolis construction """
    samples = _samples(config, 50)

    def row(T: int) -> tuple[Any, ...]:
        distributions = [TimeDistribution.random(T, config.rng(T, k)) for k in
        range(samples)] + [heavy_endpoint_distribution(T)]
        energy, amplitude = 0.0, 0.0
        for distribution in distributions:
            state = ground_state(metropolis_hamiltonian(distribution))
            energy = max(energy, abs(state.energy))
            amplitude = max(amplitude, float(np.max(np.abs(state.vector -
            distribution.amplitudes()))))
        defect = 0.0
        if T >= 3:
            closed = heavy_endpoint_matrix(T).real_matrix()
            construction = metropolis_hamiltonian(heavy_endpoint_distribution(
            T)).real_matrix()
            defect = float(np.max(np.abs(closed - construction)))
        _require(energy <= 1e-10, f"Ground energy {energy:.3e} at T={T}")
        _require(amplitude <= 1e-8, f"Ground state deviates from sqrt(pi) by "
        f"{amplitude:.3e} at T={T}")
        _require(defect <= 1e-12, f"Closed form differs by {defect:.3e} at "
        f"T={T}")
        return (T, len(distributions), energy, amplitude, defect)

    return Table(("T", "distributions", "max_E0", "max_amplitude_error",
    "matrix_defect"), config.sweep(row, _sizes(config, "25,50,100,200,400")))

def heavy_endpoint_gap(config: ExperimentConfig) -> Result:
    """ gap * T^2 of the heavy-endpoint clock stays in a positive bracket,
        drifting by less than 10% per doubling of T """
    sizes = _sizes(config, "25,50,100,200,400")

    def row(T: int) -> tuple[Any, ...]:
        values = eigvals(heavy_endpoint_matrix(T), 2)
        gap = float(values[1] - values[0])
        return (T, gap, gap * T * T)

    rows = config.sweep(row, sizes)
    _doubling_bracket({row[0]: row[2] for row in rows}, "gap * T^2", 0.9, 1.1)
    return Table(("T", "gap", "gap_T2"), rows)

def endpoint_clock(config: ExperimentConfig) -> Result:
    """ Dirichlet ground energy of the endpoint-penalized clock, its exact
        reproduction by the sine ansatz, and the five local energies of the
        coupled block ansatz """
    mu = float(config.get("mu", 0.9))
    eta = float(config.get("eta", 0.3))
    rows = []
    for T in _sizes(config, "10,100"):
        matrix = endpoint_penalized_clock(T)
        closed = dirichlet_ground_energy(T)
        energy = float(eigvals(matrix, 1)[0])
        bound = stoquastic_lower_bound(matrix, sine_ansatz(T))
        rows.append((T, "ground_energy", energy, closed, abs(energy - closed)))
        rows.append((T, "sine_lower_bound", bound, closed, abs(bound - closed)))
        if T >= 2:
            params = CoupledBlockParams(T, mu, eta)
            ratios = stoquastic_ratios(coupled_block_tridiagonal(params),
            coupled_block_ansatz(T))
            values = coupled_block_case_values(params)
            for case, positions in coupled_block_case_positions(T).items():
                if len(positions) == 0:
                    continue
                defect = float(np.max(np.abs(ratios[positions] - values[case])))
                rows.append((T, case, float(ratios[positions[0]]), values[case],
                defect))
    for T, name, _, _, defect in rows:
        _require(defect <= 1e-10, f"{name} off by {defect:.3e} at T={T}")
    return Table(("T", "quantity", "computed", "closed_form", "defect"), rows)

def _rejecting_identity(n: int, T: int) -> tuple[Circuit, PenaltyPair]:
    """ Identity circuit whose output qubit is also an ancilla, so it rejects
        every valid input """
    return Circuit.identity(n, T), PenaltyPair.standard(n, [0], 0)

def full_circuit_unsat(config: ExperimentConfig) -> Result:
    """ UNSAT penalty of rejecting identity circuits times T^2 is bounded away
        from zero for both clocks, inside the geometrical sandwich. Between
        doublings of T the scaled penalty changes by less than a factor 2,
        which rules out decay like T^-3 or faster """
    qubits = parse_sizes(str(config.get("qubits", "1,2,3")))
    items = [(weights, n, T) for weights in ("kitaev", "heavy-endpoint") for n
    in qubits for T in _sizes(config, "8,16,32")]

    def row(item: tuple[str, int, int]) -> tuple[Any, ...]:
        weights, n, T = item
        circuit, penalties = _rejecting_identity(n, T)
        sandwich = geometrical_sandwich(inputs.clock_weights(weights, T),
        circuit, penalties)
        scaled = sandwich.penalty * T * T
        _require(sandwich.penalty <= sandwich.upper + 1e-10, f"UNSAT penalty "
        f"above the endpoint bound for {weights} weights at T={T}")
        if sandwich.precondition:
            _require(sandwich.lower <= sandwich.penalty + 1e-10, f"UNSAT "
            f"penalty below the geometrical bound for {weights} weights at "
            f"T={T}")
        return (weights, n, T, sandwich.penalty, scaled, sandwich.lower,
        sandwich.upper, sandwich.precondition)

    rows = config.sweep(row, items)
    for weights in ("kitaev", "heavy-endpoint"):
        for n in qubits:
            scaled = {row[2]: row[4] for row in rows if row[0] == weights and
            row[1] == n}
            _doubling_bracket(scaled, f"UNSAT penalty * T^2 for {weights} "
            f"weights at n={n}", 0.5, 2.0)
    return Table(("weights", "n", "T", "penalty", "penalty_T2", "lower",
    "upper", "precondition"), rows)

def mapping(config: ExperimentConfig) -> Result:
    """ Random complex tridiagonal clocks map to stochastic reversible chains
        with pi = |psi|^2 and the predicted gap, inside the Cheeger and
        birth-death sandwiches """
    samples = _samples(config, 34)
    items = [(T, k) for T in _sizes(config, "20,100,200") for k in range(
    samples)]

    def row(item: tuple[int, int]) -> tuple[Any, ...]:
        T, k = item
        matrix = SymTridiagonal.random(T, config.rng(T, k))
        state = ground_state(matrix)
        psi = state.vector
        classical = quantum_to_classical(matrix, ground=(state.energy, psi))
        weight_defect = float(np.max(np.abs(classical.chain.pi - np.abs(psi) **
        2)))
        report = mapping_report(matrix)
        _require(not report.reducible, f"Random clock T={T}, sample {k} is "
        f"reducible")
        _require(weight_defect <= 1e-9, f"pi differs from |psi|^2 by "
        f"{weight_defect:.3e}")
        _require(report.gap_defect <= 1e-9, f"Chain gap off by "
        f"{report.gap_defect:.3e}")
        lower, upper = report.cheeger
        _require(lower - 1e-9 <= report.chain_gap <= upper + 1e-9, f"Cheeger "
        f"sandwich fails for T={T}, sample {k}")
        return (T, k, report.hamiltonian_gap, report.chain_gap,
        report.gap_defect, weight_defect, report.conductance,
        report.birth_death.ell)

    return Table(("T", "sample", "hamiltonian_gap", "chain_gap", "gap_defect",
    "weight_defect", "conductance", "ell"), config.sweep(row, items))

def product_bound(config: ExperimentConfig) -> Result:
    """ gap * min(|psi_0|^2, |psi_T|^2) * T^2 over random bounded clocks and
        the two structured families. The heavy-endpoint family comes within a
        factor 10 of the largest value """
    samples = _samples(config, 20)
    sizes = _sizes(config, "10,20,40,80")
    items: list[tuple[str, int, int]] = [("random", T, k) for T in sizes for k
    in range(samples)]
    items += [(family, T, 0) for family in ("kitaev", "heavy-endpoint") for T in
    sizes]

    def row(item: tuple[str, int, int]) -> tuple[Any, ...]:
        family, T, k = item
        if family == "random":
            matrix = SymTridiagonal.random(T, config.rng(T, k))
        elif family == "kitaev":
            matrix = clock_tridiagonal(ClockWeights.kitaev(T)).shifted(0.0, 2.0)
        else:
            matrix = heavy_endpoint_matrix(T)
        bound = tridiag_product_bound(matrix)
        return (family, T, k, bound.gap, bound.endpoint, bound.product * T * T)

    rows = config.sweep(row, items)
    values = [row[5] for row in rows]
    _require(all(math.isfinite(value) for value in values), "Product is not "
    "finite")
    largest = max(values)
    heavy = max(row[5] for row in rows if row[0] == "heavy-endpoint")
    log_info(f"Largest product * T^2 is {largest:.6g}, heavy-endpoint family "
    f"reaches {heavy:.6g}")
    _require(heavy * 10.0 >= largest, f"Heavy-endpoint family {heavy:.3e} is "
    f"not within a factor 10 of the maximum {largest:.3e}")
    return Table(("family", "T", "sample", "gap", "endpoint", "product_T2"),
    rows)

def adiabatic(config: ExperimentConfig) -> Result:
    """ The modified schedule keeps the gap above 1/4 with a non-decreasing
        first excited energy, and the endpoint weights are 1/4 against 1/(T +
        1). The standard schedule into the heavy-endpoint clock has its minimum
        gap at s = 1. Into the unweighted clock the minimum only approaches
        s = 1 as T grows, so its distance to the end has to shrink """
    grid = int(config.get("grid", 201))
    rows = []
    for T in sorted(set(_sizes(config, "10,20,40"))):
        modified = Schedule.modified_clock(T)
        curve = gap_sweep(modified, grid, config.jobs)
        _require(float(np.min(curve.gap)) >= 0.25 - 1e-9, f"Modified gap "
        f"{np.min(curve.gap):.6g} below 1/4 at T={T}")
        monotone = monotone_excited_check(modified, grid)
        _require(monotone.monotone, f"E1 drops by {monotone.max_drop:.3e} at "
        f"s={monotone.first_violation} for T={T}")
        resolution = 1.0 / (grid - 1)
        heavy = gap_sweep(Schedule.standard_clock(T, "heavy-endpoint"), grid,
        config.jobs)
        _require(heavy.s_min >= 1.0 - resolution - 1e-4, f"Standard schedule "
        f"into the heavy-endpoint clock has its minimum gap at "
        f"s={heavy.s_min:.4f} for T={T}")
        standard = gap_sweep(Schedule.standard_clock(T), grid, config.jobs)
        if rows:
            _require(standard.s_min > rows[-1][3], f"Minimum gap of the "
            f"standard schedule moves away from s = 1, s={rows[-1][3]:.4f} at "
            f"T={rows[-1][0]} and s={standard.s_min:.4f} at T={T}")
        pi_modified = endpoint_probability(heavy_endpoint_matrix(T), T)
        pi_standard = endpoint_probability(Schedule.standard_clock(T).h_final,
        T)
        _require(abs(pi_modified - 0.25) <= 1e-9, f"Endpoint weight "
        f"{pi_modified:.6g} of the modified construction at T={T}")
        _require(abs(pi_standard - 1.0 / (T + 1)) <= 1e-9, f"Endpoint weight "
        f"{pi_standard:.6g} of the standard construction at T={T}")
        trial = trial_energy_check(T)
        _require(abs(trial - 0.75) <= 1e-9, f"Trial energy {trial:.6g} at T={T}")
        if curve.s_min < 1.0 - resolution:
            log_warning(f"Modified schedule has its minimum gap at "
            f"s={curve.s_min:.4f} for T={T}")
        rows.append((T, float(np.min(curve.gap)), curve.s_min, standard.s_min,
        standard.gap_min, heavy.s_min, monotone.monotone, pi_modified,
        pi_standard))
    return Table(("T", "modified_gap_min", "modified_s_min", "standard_s_min",
    "standard_gap_min", "heavy_s_min", "monotone", "pi_T_modified",
    "pi_T_standard"), rows)

def diameter(config: ExperimentConfig) -> Result:
    """ Chebyshev diameter bound on clocks, Metropolis matrices and random
        banded matrices, and diam = T for the path Laplacian """
    samples = _samples(config, 50)
    sizes = _sizes(config, "8,16,32,64")
    items: list[tuple[str, int, int]] = [(family, T, 0) for family in (
    "kitaev", "heavy-endpoint") for T in sizes]
    items += [("banded", int(config.get("dim", 12)), k) for k in range(samples)]

    def row(item: tuple[str, int, int]) -> tuple[Any, ...]:
        family, T, k = item
        if family == "banded":
            matrix: HermitianMatrix | SymTridiagonal = (
            HermitianMatrix.random_banded(T, 2, config.rng(T, k)))
        else:
            matrix = inputs.clock_matrix(family, T)
        report = diameter_bound_check(matrix)
        if family == "kitaev":
            diam, _ = matrix_diameter(matrix)
            _require(diam == T, f"Path Laplacian on {T + 1} sites has diameter "
            f"{diam}")
        return (family, T, k, report.diam, report.chebyshev_bound,
        report.stated_holds, report.refined_holds)

    return Table(("family", "T", "sample", "diam", "chebyshev_bound",
    "stated_holds", "refined_holds"), config.sweep(row, items))

def ulg(config: ExperimentConfig) -> Result:
    """ Laplacian equivalence of random simple graphs, the double-edge sigma_x
        example, and the low-energy certificate for output-penalized path
        clocks """
    samples = _samples(config, 20)
    residuals = []
    for k in range(samples):
        graph = UnitaryLabeledGraph.random_simple(int(config.get("vertices",
        5)), int(config.get("d", 2)), config.rng(k))
        report = laplacian_equivalence_check(graph)
        _require(report.holds, f"Random graph {k} has residual "
        f"{report.residual:.3e}")
        residuals.append(report.residual)
    sigma_x = np.array([[0, 1], [1, 0]], dtype=complex)
    pair = frustrated_pair_analysis(sigma_x)
    coupling = np.eye(2) + sigma_x
    expected = np.block([[2 * np.eye(2), -coupling], [-coupling, 2 *
    np.eye(2)]])
    transformed = np.array([[2, 0, -2, 0], [0, 2, 0, 0], [-2, 0, 2, 0], [0, 0,
    0, 2]])
    _require(pair.hamiltonian.allclose(expected, 1e-12), "Double-edge "
    "Hamiltonian differs from the block form")
    _require(pair.transformed.allclose(transformed, 1e-12), "Transformed "
    "double-edge Hamiltonian differs from the decoupled form")
    _require(np.allclose(pair.penalties, [0.0, 2.0], atol=1e-12), f"Penalties "
    f"{pair.penalties} differ from (0, 2)")
    certified = []
    for T in _sizes(config, "4,8,16"):
        clock = clock_tridiagonal(ClockWeights.kitaev(T)).gauged()
        excited = float(eigvals(clock, 2)[1])
        certificate = low_energy_unsat_upper_bound(clock, [T], excited)
        penalized = clock.to_hermitian() + HermitianMatrix.basis_projector(T +
        1, T)
        energy = float(eigvals(penalized, 1)[0])
        _require(energy <= certificate.energy + 1e-10 and certificate.energy <=
        excited + 1e-10, f"Certificate fails at T={T}")
        certified.append((T, energy, certificate.energy, excited))
    return {
        "graphs": samples,
        "max_residual": max(residuals),
        "transformed": pair.transformed.entries,
        "penalties": pair.penalties,
        "certificates": certified,
    }

def padding(config: ExperimentConfig) -> Result:
    """ Kernel angle bound of the padded construction on random circuits, and
        the padded UNSAT penalty of rejecting identity circuits, which times
        T^2 changes by less than a factor 2 per doubling """
    samples = _samples(config, 20)
    n = int(config.get("n", 2))
    T = int(config.get("gates", 4))
    rows = []
    sharp = 0
    for k in range(samples):
        circuit = Circuit.random(n, T, config.rng(T, k))
        padded = padded_construction(circuit, PenaltyPair.standard(n, [0], 0))
        holds = padded.cos2theta <= (3.0 + padded.eps) / 4.0 + 1e-9
        sharp += int(holds)
        rows.append(("random", k, padded.T, padded.eps, padded.cos2theta,
        padded.bound, holds, padded.unsat_penalty))
    scaled = {}
    for size in _sizes(config, "4,8,16"):
        circuit, penalties = _rejecting_identity(1, size)
        padded = padded_construction(circuit, penalties)
        scaled[size] = padded.unsat_penalty * size * size
        rows.append(("identity", 0, size, padded.eps, padded.cos2theta,
        padded.bound, padded.cos2theta <= (3.0 + padded.eps) / 4.0 + 1e-9,
        padded.unsat_penalty))
    _doubling_bracket(scaled, "Padded UNSAT penalty * T^2", 0.5, 2.0)
    log_info(f"(3 + eps) / 4 held on {sharp} of {samples} random circuits")
    return Table(("circuit", "sample", "T", "eps", "cos2theta", "bound",
    "sharp_holds", "unsat_penalty"), rows)

def conjugation(config: ExperimentConfig) -> Result:
    """ W^dagger H_prop W equals the clock Hamiltonian tensored with the
        identity for random circuits and random clock weights """
    samples = _samples(config, 20)
    items = [(n, T, k) for n in parse_sizes(str(config.get("qubits", "1,2,3")))
    for T in _sizes(config, "4,8") for k in range(samples)]

    def row(item: tuple[int, int, int]) -> tuple[Any, ...]:
        n, T, k = item
        rng = config.rng(n, T, k)
        circuit = Circuit.random(n, T, rng)
        weights = ClockWeights.from_tridiagonal(SymTridiagonal.random(T, rng))
        conjugated = propagation_hamiltonian(weights, circuit).conjugate_by(
        history_unitary(circuit))
        expected = kron(clock_hamiltonian(weights), HermitianMatrix.identity(
        circuit.dim))
        residual = float(np.max(np.abs(conjugated.entries - expected.entries)))
        _require(residual <= 1e-9, f"Conjugated propagation Hamiltonian off by "
        f"{residual:.3e} for n={n}, T={T}, sample {k}")
        return (n, T, k, residual)

    return Table(("n", "T", "sample", "residual"), config.sweep(row, items))

def projector_pair(config: ExperimentConfig) -> Result:
    """ Jordan block quantities of the Hadamard example and of random two-qubit
        circuits """
    samples = _samples(config, 20)
    hadamard = Circuit(1, [Gate.named("H", [0])])
    report = projector_pair_quantities(PenaltyPair.standard(1, [0], 0),
    circuit_unitary(hadamard))
    _require(abs(report.eps - 0.5) <= 1e-12 and abs(report.blocks[0].mu - 0.5)
    <= 1e-12, "Hadamard example does not give eps = mu = 1/2")
    rows = [("hadamard", 0, report.eps, len(report), min(b.mu for b in
    report.blocks), max(b.eta for b in report.blocks),
    report.sharp_bounds_hold)]
    T = int(config.get("gates", 4))
    for k in range(samples):
        circuit = Circuit.random(2, T, config.rng(T, k))
        try:
            report = projector_pair_quantities(PenaltyPair.standard(2, [1], 0),
            circuit_unitary(circuit))
        except HypothesisError as error:
            log_warning(f"Skipping random circuit {k}: {error}")
            rows.append(("random", k, None, 0, None, None, None))
            continue
        rows.append(("random", k, report.eps, len(report), min(b.mu for b in
        report.blocks), max(b.eta for b in report.blocks),
        report.sharp_bounds_hold))
    return Table(("circuit", "sample", "eps", "blocks", "min_mu", "max_eta",
    "sharp_bounds_hold"), rows)

def geometrical(config: ExperimentConfig) -> Result:
    """ Geometrical lower bound against the UNSAT penalty of random circuits
        for both clocks """
    _require(abs(geometrical_lower_bound(0.1, 0.25, 0.25, 0.25) - 0.003125) <=
    1e-15, "Geometrical bound closed form")
    samples = _samples(config, 5)
    n = int(config.get("n", 2))
    items = [(weights, T, k) for weights in ("kitaev", "heavy-endpoint") for T
    in _sizes(config, "4,8") for k in range(samples)]

    def row(item: tuple[str, int, int]) -> tuple[Any, ...]:
        weights, T, k = item
        circuit = Circuit.random(n, T, config.rng(T, k))
        sandwich = geometrical_sandwich(inputs.clock_weights(weights, T),
        circuit, PenaltyPair.standard(n, [0], 0))
        _require(sandwich.penalty <= sandwich.upper + 1e-10, f"UNSAT penalty "
        f"above the endpoint bound for {weights} weights, T={T}, sample {k}")
        if sandwich.precondition:
            _require(sandwich.lower <= sandwich.penalty + 1e-10, f"UNSAT "
            f"penalty below the geometrical bound for {weights} weights, "
            f"T={T}, sample {k}")
        return (weights, T, k, sandwich.eps, sandwich.lower, sandwich.penalty,
        sandwich.upper, sandwich.precondition)

    return Table(("weights", "T", "sample", "eps", "lower", "penalty", "upper",
    "precondition"), config.sweep(row, items))

CLAIMS: dict[str, Command] = {
    "metropolis-ground": metropolis_ground,
    "heavy-endpoint-gap": heavy_endpoint_gap,
    "endpoint-clock": endpoint_clock,
    "full-circuit-unsat": full_circuit_unsat,
    "mapping": mapping,
    "product-bound": product_bound,
    "adiabatic": adiabatic,
    "diameter": diameter,
    "ulg": ulg,
    "padding": padding,
    "projector-pair": projector_pair,
    "conjugation": conjugation,
    "geometrical": geometrical,
}
