from .experiment import (ExperimentConfig, Table, Document, parse_sizes,
format_result, write_result)
from .main import build_parser, config_from_args, run, main
from .commands import COMMANDS
from .claims import CLAIMS
