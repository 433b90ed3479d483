from __future__ import annotations
from typing import Any, Callable
import json
import numpy as np
from scipy.stats import unitary_group
from ..errors import ConfigError
from ..logger import log_info, log_stat
from ..spectral import HermitianMatrix, SymTridiagonal, eigvals, ground_state
from ..clockham import (TimeDistribution, CoupledBlockParams,
metropolis_chain, metropolis_hamiltonian, stoquastic_lower_bound,
endpoint_penalized_clock, dirichlet_ground_energy, sine_ansatz,
coupled_block_tridiagonal, coupled_block_ansatz, coupled_block_case_values)
from ..circuitham import (BUILTIN_GATES, acceptance_probability,
circuit_unitary, geometrical_sandwich, padded_construction,
padded_cos2_exact, projector_pair_quantities)
from ..markovmap import (MarkovChain, mapping_report, conductance,
cheeger_bounds, birth_death_bounds)
from ..adiabatic import (Schedule, gap_sweep, final_overlap_estimate,
endpoint_probability, interpolate, trial_energy_check)
from ..ulg import (UnitaryLabeledGraph, is_simple,
laplacian_equivalence_check, diameter_bound_check, frustrated_pair_analysis)
from . import inputs
from .experiment import ExperimentConfig, Table, Document, Result, parse_sizes

Command = Callable[[ExperimentConfig], Result]

def _sizes(config: ExperimentConfig, default: str) -> list[int]:
    return parse_sizes(str(config.get("T", default)))

def clock_build(config: ExperimentConfig) -> Result:
    """ Spectrum summary of a clock Hamiltonian for every T """
    kind = config.get("clock", "kitaev")

    def row(T: int) -> tuple[Any, ...]:
        matrix = inputs.clock_matrix(kind, T)
        values = eigvals(matrix, 2)
        weights = np.abs(ground_state(matrix).vector) ** 2
        return (T, values[0], values[1], values[1] - values[0], weights[0],
        weights[-1])

    return Table(("T", "E0", "E1", "gap", "pi_0", "pi_T"), config.sweep(row,
    _sizes(config, "10")))

def _distributions(config: ExperimentConfig) -> list[TimeDistribution]:
    path = config.get("file")
    if path is not None:
        return [TimeDistribution.from_string(inputs.read_text(path))]
    kind = config.get("pi", "uniform")
    return [inputs.distribution(kind, T, config.rng(T)) for T in _sizes(config,
    "10")]

def clock_metropolis(config: ExperimentConfig) -> Result:
    """ Ground energy, gap and ground state error of the Metropolis
        Hamiltonian of a distribution """

    def row(distribution: TimeDistribution) -> tuple[Any, ...]:
        matrix = metropolis_hamiltonian(distribution)
        state = ground_state(matrix)
        values = eigvals(matrix, 2)
        error = float(np.max(np.abs(state.vector - distribution.amplitudes())))
        return (distribution.T, values[0], values[1] - values[0], error)

    return Table(("T", "E0", "gap", "amplitude_error"), config.sweep(row,
    _distributions(config)))

def clock_bound(config: ExperimentConfig) -> Result:
    """ Stoquastic lower bound of a trial state against the exact ground
        energy, for the endpoint-penalized clock or the coupled block """
    target = config.get("target", "dirichlet")
    if target == "dirichlet":
        def row(T: int) -> tuple[Any, ...]:
            matrix = endpoint_penalized_clock(T)
            return (T, stoquastic_lower_bound(matrix, sine_ansatz(T)), eigvals(
            matrix, 1)[0], dirichlet_ground_energy(T))
        columns = ("T", "lower_bound", "E0", "closed_form")
    elif target == "coupled":
        mu = float(config.get("mu", 1.0))
        eta = float(config.get("eta", 0.0))
        def row(T: int) -> tuple[Any, ...]:
            params = CoupledBlockParams(T, mu, eta)
            matrix = coupled_block_tridiagonal(params)
            cases = coupled_block_case_values(params)
            return (T, stoquastic_lower_bound(matrix, coupled_block_ansatz(T)),
            eigvals(matrix, 1)[0], *cases.values())
        columns = ("T", "lower_bound", "E0", "first", "bulk", "left_junction",
        "right_junction", "far_end")
    else:
        raise ConfigError(f"Unknown bound target '{target}'")
    return Table(columns, config.sweep(row, _sizes(config, "10")))

def _circuit_sizes(config: ExperimentConfig, default: str) -> list[int]:
    if config.get("file") is not None:
        return [inputs.circuit(config, 1).T]
    return _sizes(config, default)

def circuit_unsat(config: ExperimentConfig) -> Result:
    """ UNSAT penalty with both sides of the geometrical sandwich """
    weights_kind = config.get("weights", "kitaev")

    def row(T: int) -> tuple[Any, ...]:
        circuit = inputs.circuit(config, T)
        penalties = inputs.penalties(config, circuit.n)
        sandwich = geometrical_sandwich(inputs.clock_weights(weights_kind,
        circuit.T), circuit, penalties)
        return (circuit.T, sandwich.eps, sandwich.penalty, sandwich.penalty *
        circuit.T ** 2, sandwich.lower, sandwich.upper, sandwich.gap,
        sandwich.precondition)

    return Table(("T", "eps", "penalty", "penalty_T2", "lower", "upper", "gap",
    "precondition"), config.sweep(row, _circuit_sizes(config, "8,16")))

def _blocks(report: Any) -> list[dict[str, Any]]:
    return [{"cosine": block.cosine, "lambda": block.lambda_, "mu": block.mu,
    "xi": block.xi, "eta": block.eta} for block in report.blocks]

def circuit_accept(config: ExperimentConfig) -> Result:
    """ Acceptance probability of a single circuit, optionally with the
        Jordan blocks of its projector pair """
    circuit = inputs.circuit(config, _sizes(config, "4")[0])
    penalties = inputs.penalties(config, circuit.n)
    result = acceptance_probability(circuit, penalties)
    report: dict[str, Any] = {"n": circuit.n, "T": circuit.T, "eps":
    result.epsilon, "trivial_kernel": result.trivial_kernel}
    if config.get("blocks", False):
        pair = projector_pair_quantities(penalties, circuit_unitary(circuit))
        report["blocks"] = _blocks(pair)
        report["sharp_bounds_hold"] = pair.sharp_bounds_hold
    return report

def circuit_padded(config: ExperimentConfig) -> Result:
    """ Kernel angle and UNSAT penalty of the padded construction """

    def row(T: int) -> tuple[Any, ...]:
        circuit = inputs.circuit(config, T)
        padded = padded_construction(circuit, inputs.penalties(config,
        circuit.n))
        return (padded.T, padded.eps, padded.cos2theta, padded.bound,
        padded_cos2_exact(padded.T, padded.eps), padded.unsat_penalty,
        padded.unsat_penalty * padded.T ** 2)

    return Table(("T", "eps", "cos2theta", "bound", "cos2_uniform",
    "unsat_penalty", "penalty_T2"), config.sweep(row, _circuit_sizes(config,
    "4,8")))

def _mapping_row(T: int, sample: int, matrix: SymTridiagonal |
HermitianMatrix) -> tuple[Any, ...]:
    report = mapping_report(matrix)
    if report.reducible:
        return (T, sample, report.hamiltonian_gap, None, None, None, None, None,
        None, report.cut)
    return (T, sample, report.hamiltonian_gap, report.chain_gap,
    report.gap_defect, report.conductance, report.cheeger[0],
    report.cheeger[1], report.birth_death.ell, None)

MAPPING_COLUMNS = ("T", "sample", "hamiltonian_gap", "chain_gap", "gap_defect",
"conductance", "cheeger_lower", "cheeger_upper", "ell", "cut")

def markov_map(config: ExperimentConfig) -> Result:
    """ Map tridiagonal Hamiltonians from --file or the random ensemble to
        Markov chains and report the gap relations """
    path = config.get("file")
    if path is not None:
        matrix = inputs.matrix_file(path)
        if isinstance(matrix, HermitianMatrix):
            matrix = SymTridiagonal.from_hermitian(matrix)
        return Table(MAPPING_COLUMNS, [_mapping_row(matrix.T, 0, matrix)])
    samples = int(config.get("samples", 1))
    items = [(T, k) for T in _sizes(config, "10") for k in range(samples)]
    return Table(MAPPING_COLUMNS, config.sweep(lambda item: _mapping_row(
    item[0], item[1], SymTridiagonal.random(item[0], config.rng(*item))),
    items))

def _chains(config: ExperimentConfig) -> list[MarkovChain]:
    path = config.get("file")
    if path is not None:
        return [inputs.chain_file(path)]
    return [metropolis_chain(distribution) for distribution in
    _distributions(config)]

def markov_cheeger(config: ExperimentConfig) -> Result:
    """ Conductance and the Cheeger sandwich of Metropolis chains """
    strategy = config.get("strategy", "interval")

    def row(chain: MarkovChain) -> tuple[Any, ...]:
        phi = conductance(chain, strategy)
        lower, upper = cheeger_bounds(min(1.0, phi))
        return (chain.T, chain.spectral_gap(), phi, lower, upper)

    return Table(("T", "gap", "conductance", "lower", "upper"), config.sweep(
    row, _chains(config)))

def markov_bd(config: ExperimentConfig) -> Result:
    """ Path quantity and gap sandwich of birth-death chains """

    def row(chain: MarkovChain) -> tuple[Any, ...]:
        report = birth_death_bounds(chain)
        return (chain.T, report.ell, report.median, report.gap, report.lower,
        report.upper)

    return Table(("T", "ell", "median", "gap", "lower", "upper"), config.sweep(
    row, _chains(config)))

def _schedule(config: ExperimentConfig, T: int) -> Schedule:
    kind = config.get("schedule", "modified")
    if kind == "modified":
        A = config.get("A")
        return Schedule.modified_clock(T, None if A is None else float(A))
    if kind == "standard":
        return Schedule.standard_clock(T, config.get("final", "kitaev"))
    raise ConfigError(f"Unknown schedule '{kind}'")

def adiabatic_sweep(config: ExperimentConfig) -> Result:
    """ Gap curves along the schedule, or only their minima with --summary.
        Grid points of one curve are spread over the jobs """
    grid = int(config.get("grid", 201))
    rows = []
    for T in _sizes(config, "10"):
        curve = gap_sweep(_schedule(config, T), grid, config.jobs)
        log_stat(f"Minimum gap at T={T}", f"{curve.gap_min:.6e} (s="
        f"{curve.s_min:.4f})")
        if config.get("summary", False):
            rows.append((T, curve.s_min, curve.gap_min))
        else:
            rows.extend((T, *row) for row in curve.rows())
    if config.get("summary", False):
        return Table(("T", "s_min", "gap_min"), rows)
    return Table(("T", "s", "E0", "E1", "gap"), rows)

def adiabatic_overlap(config: ExperimentConfig) -> Result:
    """ Final overlap of the modified schedule and the endpoint weights of
        both constructions """

    def row(T: int) -> tuple[Any, ...]:
        A = config.get("A")
        schedule = Schedule.modified_clock(T, None if A is None else float(A))
        estimate = final_overlap_estimate(schedule)
        modified = endpoint_probability(interpolate(schedule, 1.0), T)
        standard = endpoint_probability(Schedule.standard_clock(T).h_final, T)
        return (T, schedule.A, estimate.overlap, estimate.deviation,
        estimate.first_order_bound, estimate.norm_deviation, modified,
        standard, trial_energy_check(T))

    return Table(("T", "A", "overlap", "deviation", "first_order_bound",
    "norm_deviation", "pi_T_modified", "pi_T_standard", "trial_energy"),
    config.sweep(row, _sizes(config, "10")))

def random_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    if d == 1:
        return np.exp(2j * np.pi * rng.random()) * np.ones((1, 1))
    return unitary_group.rvs(d, random_state=rng)

def named_unitary(name: str) -> np.ndarray:
    if name not in BUILTIN_GATES:
        raise ConfigError(f"Unknown gate '{name}', expected one of "
        f"{', '.join(BUILTIN_GATES)}")
    return BUILTIN_GATES[name]

def ulg_build(config: ExperimentConfig) -> Result:
    """ Generate a graph and write it as JSON input for the other ulg commands
        """
    kind = config.get("kind", "path")
    n = int(config.get("vertices", 4))
    d = int(config.get("d", 2))
    rng = config.rng()
    if kind == "path":
        graph = UnitaryLabeledGraph.path([random_unitary(d, rng) for _ in
        range(n - 1)])
    elif kind == "double-edge":
        gate = config.get("gate")
        unitary = named_unitary(gate) if gate is not None else random_unitary(
        d, rng)
        graph = UnitaryLabeledGraph.double_edge(unitary)
    elif kind == "random":
        graph = UnitaryLabeledGraph.random_simple(n, d, rng, int(config.get(
        "extra_edges", 2)))
    else:
        raise ConfigError(f"Unknown graph kind '{kind}'")
    log_info(f"Built graph with {len(graph.vertices)} vertices and "
    f"{len(graph.edges)} edges")
    return Document(json.dumps(json.loads(graph.to_string()), indent=2))

def ulg_check(config: ExperimentConfig) -> Result:
    """ Simplicity verdict and, for simple graphs, the Laplacian equivalence
        residual """
    path = config.get("file")
    if path is None:
        raise ConfigError("ulg check needs --file")
    graph = inputs.graph_file(path)
    simple, cycle = is_simple(graph)
    report: dict[str, Any] = {"vertices": len(graph.vertices), "d": graph.d,
    "simple": simple, "cycle": cycle}
    if simple:
        equivalence = laplacian_equivalence_check(graph)
        report["residual"] = equivalence.residual
        report["spectrum_defect"] = equivalence.spectrum_defect
        report["holds"] = equivalence.holds
    return report

def ulg_diam(config: ExperimentConfig) -> Result:
    """ Diameter bounds of a matrix or graph from --file, or of a clock """
    path = config.get("file")
    if path is not None:
        matrix = inputs.matrix_file(path)
    else:
        matrix = inputs.clock_matrix(config.get("clock", "kitaev"), _sizes(
        config, "10")[0])
    report = diameter_bound_check(matrix)
    return {
        "diam": report.diam,
        "diam_support": report.diam_support,
        "pi_min": report.pi_min,
        "pi_min_support": report.pi_min_support,
        "gap": report.gap,
        "normalized_gap": report.normalized_gap,
        "norm": report.norm,
        "stated_bound": report.stated_bound,
        "stated_holds": report.stated_holds,
        "refined_bound": report.refined_bound,
        "refined_holds": report.refined_holds,
        "chebyshev_bound": report.chebyshev_bound,
        "support_mode": report.support_mode,
    }

def ulg_frustrated(config: ExperimentConfig) -> Result:
    """ Double-edge analysis of a named gate or a random unitary """
    gate = config.get("gate")
    if gate is not None:
        unitary = named_unitary(gate)
    else:
        unitary = random_unitary(int(config.get("d", 2)), config.rng())
    pair = frustrated_pair_analysis(unitary)
    return {
        "hamiltonian": pair.hamiltonian.entries,
        "transformed": pair.transformed.entries,
        "eigenvalues": pair.eigenvalues,
        "penalties": pair.penalties,
    }

COMMANDS: dict[str, dict[str, Command]] = {
    "clock": {"build": clock_build, "metropolis": clock_metropolis, "bound":
    clock_bound},
    "circuit": {"unsat": circuit_unsat, "accept": circuit_accept, "padded":
    circuit_padded},
    "markov": {"map": markov_map, "cheeger": markov_cheeger, "bd": markov_bd},
    "adiabatic": {"sweep": adiabatic_sweep, "overlap": adiabatic_overlap},
    "ulg": {"build": ulg_build, "check": ulg_check, "diam": ulg_diam,
    "frustrated": ulg_frustrated},
}
