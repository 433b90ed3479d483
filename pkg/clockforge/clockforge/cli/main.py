from __future__ import annotations
from argparse import ArgumentParser, Namespace
from typing import Sequence
import jsonschema
from ..config import VERSION, set_tolerance
from ..errors import (ConfigError, ValidationError, NumericalError,
ClaimVerificationError)
from ..logger import log_error, log_info, set_verbose
from .commands import COMMANDS
from .claims import CLAIMS
from .experiment import ExperimentConfig, write_result
from .inputs import (CLOCK_KINDS, DISTRIBUTION_KINDS, CIRCUIT_KINDS,
WEIGHT_KINDS)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3
EXIT_CLAIM = 4

SIZES_HELP = ("A comma-separated list of clock lengths, or a string in the "
"format start:stop:step where stop is not included")

_COMMON = {"group", "command", "output", "format", "seed", "jobs", "quiet",
"tol"}

def _common_parser() -> ArgumentParser:
    parser = ArgumentParser(add_help=False)
    parser.add_argument("-o", "--output", type=str, default=None, help="File to "
    "write the result to. Defaults to stdout")
    parser.add_argument("-f", "--format", type=str, choices=["csv", "json"],
    default="csv", help="Output format. Sweeps are tables, single reports are "
    "key-value pairs in CSV. Defaults to csv")
    parser.add_argument("-s", "--seed", type=int, default=0, help="Seed of the "
    "PCG64 generator for random instances. Defaults to 0")
    parser.add_argument("-j", "--jobs", type=int, default=1, help="Number of "
    "threads for sweeps. Results keep parameter order. Defaults to 1")
    parser.add_argument("-q", "--quiet", action="store_true", default=False,
    help="Only show warnings and errors")
    parser.add_argument("--tol", type=float, default=None, help="Override the "
    "solver tolerance for this run")
    return parser

def _circuit_options(parser: ArgumentParser, default_sizes: str):
    parser.add_argument("-T", "--T", type=str, default=default_sizes,
    help=SIZES_HELP)
    parser.add_argument("-n", "--n", type=int, default=1, help="Number of "
    "qubits of generated circuits. Defaults to 1")
    parser.add_argument("-c", "--circuit", type=str, choices=CIRCUIT_KINDS,
    default="identity", help="Generated circuit. Defaults to identity")
    parser.add_argument("--file", type=str, default=None, help="Circuit JSON "
    "file, used instead of a generated circuit")
    parser.add_argument("--ancillas", type=str, default="0", help="Comma-"
    "separated ancilla qubits fixed to |0> at the input. Defaults to 0")
    parser.add_argument("--output-qubit", type=int, default=0, help="Qubit "
    "penalized in state |0> at the output. Defaults to 0")

def build_parser() -> ArgumentParser:
    """ Argument parser with one sub-parser per command group """
    common = _common_parser()
    parser = ArgumentParser(prog="clockforge", description="Weighted clock "
    "Hamiltonians, UNSAT penalties, adiabatic gaps, Markov chain bounds and "
    "unitary labeled graphs. Results go to stdout or --output, log messages "
    "to stderr")
    parser.add_argument("--version", action="version", version=VERSION)
    groups = parser.add_subparsers(dest="group", required=True)

    clock = groups.add_parser("clock", help="Clock Hamiltonians").add_subparsers(
    dest="command", required=True)
    build = clock.add_parser("build", parents=[common], help="Spectrum of a "
    "clock Hamiltonian")
    build.add_argument("-T", "--T", type=str, default="10", help=SIZES_HELP)
    build.add_argument("--clock", type=str, choices=CLOCK_KINDS, default=
    "kitaev", help="Clock construction. Defaults to kitaev")
    metropolis = clock.add_parser("metropolis", parents=[common], help=
    "Metropolis Hamiltonian of a distribution")
    metropolis.add_argument("-T", "--T", type=str, default="10", help=SIZES_HELP)
    metropolis.add_argument("--pi", type=str, choices=DISTRIBUTION_KINDS,
    default="uniform", help="Distribution over clock states. Defaults to "
    "uniform")
    metropolis.add_argument("--file", type=str, default=None, help=
    "Distribution JSON file, used instead of --pi")
    bound = clock.add_parser("bound", parents=[common], help="Stoquastic lower "
    "bound of a trial state")
    bound.add_argument("-T", "--T", type=str, default="10", help=SIZES_HELP)
    bound.add_argument("--target", type=str, choices=["dirichlet", "coupled"],
    default="dirichlet", help="Endpoint-penalized clock or coupled block")
    bound.add_argument("--mu", type=float, default=1.0, help="Weight of the "
    "output penalty block. Defaults to 1")
    bound.add_argument("--eta", type=float, default=0.0, help="Ratio of the "
    "output penalty block. Defaults to 0")

    circuit = groups.add_parser("circuit", help="Circuit Hamiltonians"
    ).add_subparsers(dest="command", required=True)
    unsat = circuit.add_parser("unsat", parents=[common], help="UNSAT penalty "
    "and geometrical sandwich")
    _circuit_options(unsat, "8,16")
    unsat.add_argument("-w", "--weights", type=str, choices=WEIGHT_KINDS,
    default="kitaev", help="Clock weights. Defaults to kitaev")
    accept = circuit.add_parser("accept", parents=[common], help="Acceptance "
    "probability of a circuit")
    _circuit_options(accept, "4")
    accept.add_argument("--blocks", action="store_true", default=False, help=
    "Include the Jordan blocks of the projector pair")
    padded = circuit.add_parser("padded", parents=[common], help="Padded "
    "construction")
    _circuit_options(padded, "4,8")

    markov = groups.add_parser("markov", help="Markov chains").add_subparsers(
    dest="command", required=True)
    mapping = markov.add_parser("map", parents=[common], help="Map tridiagonal "
    "Hamiltonians to Markov chains")
    mapping.add_argument("-T", "--T", type=str, default="10", help=SIZES_HELP)
    mapping.add_argument("--samples", type=int, default=1, help="Random "
    "instances per clock length. Defaults to 1")
    mapping.add_argument("--file", type=str, default=None, help="Matrix JSON "
    "file, used instead of random instances")
    for name, text in (("cheeger", "Conductance and Cheeger bounds"), ("bd",
    "Birth-death bounds")):
        command = markov.add_parser(name, parents=[common], help=text)
        command.add_argument("-T", "--T", type=str, default="10", help=
        SIZES_HELP)
        command.add_argument("--pi", type=str, choices=DISTRIBUTION_KINDS,
        default="uniform", help="Stationary distribution of the Metropolis "
        "chain. Defaults to uniform")
        command.add_argument("--file", type=str, default=None, help="Markov "
        "chain JSON file, used instead of a Metropolis chain")
        if name == "cheeger":
            command.add_argument("--strategy", type=str, choices=["interval",
            "exact"], default="interval", help="Set enumeration. Defaults to "
            "interval")

    adiabatic = groups.add_parser("adiabatic", help="Adiabatic schedules"
    ).add_subparsers(dest="command", required=True)
    sweep = adiabatic.add_parser("sweep", parents=[common], help="Gap along a "
    "schedule")
    sweep.add_argument("-T", "--T", type=str, default="10", help=SIZES_HELP)
    sweep.add_argument("--schedule", type=str, choices=["modified", "standard"],
    default="modified", help="Schedule. Defaults to modified")
    sweep.add_argument("--final", type=str, choices=["kitaev",
    "heavy-endpoint"], default="kitaev", help="Final clock of the standard "
    "schedule. Defaults to kitaev")
    sweep.add_argument("--grid", type=int, default=201, help="Number of grid "
    "points. Defaults to 201")
    sweep.add_argument("-A", "--A", type=float, default=None, help="Scale of "
    "the modified schedule. Defaults to T^4")
    sweep.add_argument("--summary", action="store_true", default=False, help=
    "Only output the minimum gap per clock length")
    overlap = adiabatic.add_parser("overlap", parents=[common], help="Final "
    "overlap of the modified schedule")
    overlap.add_argument("-T", "--T", type=str, default="10", help=SIZES_HELP)
    overlap.add_argument("-A", "--A", type=float, default=None, help="Scale of "
    "the modified schedule. Defaults to T^4")

    graph = groups.add_parser("ulg", help="Unitary labeled graphs"
    ).add_subparsers(dest="command", required=True)
    generate = graph.add_parser("build", parents=[common], help="Generate a "
    "graph as JSON")
    generate.add_argument("--kind", type=str, choices=["path", "double-edge",
    "random"], default="path", help="Graph shape. Defaults to path")
    generate.add_argument("--vertices", type=int, default=4, help="Number of "
    "vertices. Defaults to 4")
    generate.add_argument("-d", "--d", type=int, default=2, help="Dimension of "
    "the edge labels. Defaults to 2")
    generate.add_argument("--gate", type=str, default=None, help="Built-in gate "
    "labeling the double edge. Defaults to a random unitary")
    generate.add_argument("--extra-edges", type=int, default=2, help="Edges "
    "added to the random tree. Defaults to 2")
    check = graph.add_parser("check", parents=[common], help="Simplicity and "
    "Laplacian equivalence")
    check.add_argument("--file", type=str, required=True, help="Graph JSON file")
    diam = graph.add_parser("diam", parents=[common], help="Diameter bounds")
    diam.add_argument("--file", type=str, default=None, help="Matrix or graph "
    "JSON file")
    diam.add_argument("--clock", type=str, choices=CLOCK_KINDS, default=
    "kitaev", help="Clock used without --file. Defaults to kitaev")
    diam.add_argument("-T", "--T", type=str, default="10", help="Clock length "
    "used without --file")
    frustrated = graph.add_parser("frustrated", parents=[common], help=
    "Double-edge analysis")
    frustrated.add_argument("--gate", type=str, default=None, help="Built-in "
    "gate. Defaults to a random unitary")
    frustrated.add_argument("-d", "--d", type=int, default=2, help="Dimension "
    "of the random unitary. Defaults to 2")

    verify = groups.add_parser("verify", parents=[common], help="Check a claim "
    "on its instance family")
    verify.add_argument("command", type=str, choices=list(CLAIMS), help="Claim "
    "to verify")
    verify.add_argument("-T", "--T", type=str, default=None, help=SIZES_HELP +
    ". Defaults depend on the claim")
    verify.add_argument("--samples", type=int, default=None, help="Random "
    "instances. Defaults depend on the claim")
    verify.add_argument("--grid", type=int, default=None, help="Grid points of "
    "the adiabatic claim")
    verify.add_argument("--qubits", type=str, default=None, help="Qubit counts "
    "of the circuit claims, in the format of -T")
    return parser

def config_from_args(args: Namespace) -> ExperimentConfig:
    parameters = {key: value for key, value in vars(args).items() if key not in
    _COMMON and value is not None}
    return ExperimentConfig(args.group, args.command, parameters, args.output,
    args.format, args.seed, args.jobs)

def run(config: ExperimentConfig) -> int:
    """ Run one command and write its result. Returns the exit code: 0 on
        success, 2 for invalid configuration or input, 3 for numerical
        failures and 4 for a claim that did not hold """
    try:
        if config.group == "verify":
            if config.command not in CLAIMS:
                raise ConfigError(f"Unknown claim '{config.command}'")
            command = CLAIMS[config.command]
        elif config.group in COMMANDS and config.command in COMMANDS[
        config.group]:
            command = COMMANDS[config.group][config.command]
        else:
            raise ConfigError(f"Unknown command '{config.group} "
            f"{config.command}'")
        log_info(f"Running {config.group} {config.command} (config "
        f"{config.config_hash()[:12]})")
        write_result(config, command(config))
    except ClaimVerificationError as error:
        log_error(f"Claim failed: {error}")
        return EXIT_CLAIM
    except NumericalError as error:
        log_error(str(error))
        return EXIT_NUMERICAL
    except (ConfigError, ValidationError) as error:
        log_error(str(error))
        return EXIT_CONFIG
    except jsonschema.ValidationError as error:
        log_error(f"Input does not match its schema: {error.message}")
        return EXIT_CONFIG
    return EXIT_OK

def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    set_verbose(not args.quiet)
    try:
        if args.tol is not None:
            set_tolerance("tol", args.tol)
        config = config_from_args(args)
    except ConfigError as error:
        log_error(str(error))
        return EXIT_CONFIG
    return run(config)
