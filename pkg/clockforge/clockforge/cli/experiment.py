from __future__ import annotations
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any, Callable, Iterable, Literal, TypeVar, get_args
import csv
import hashlib
import io
import json
import math
import numpy as np
from ..config import VERSION, tolerances, caps
from ..errors import ConfigError

OutputFormat = Literal["csv", "json"]

Item = TypeVar("Item")
Value = TypeVar("Value")

def parse_sizes(text: str) -> list[int]:
    """ Clock lengths given as a comma-separated list, or as start:stop:step
        where stop is not included """
    try:
        if ":" in text:
            bounds = [int(x) for x in text.split(":")]
            if len(bounds) not in (2, 3):
                raise ConfigError(f"Range '{text}' needs the format "
                f"start:stop[:step]")
            sizes = list(range(*bounds))
        else:
            sizes = [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as error:
        raise ConfigError(f"Invalid list of sizes '{text}'") from error
    if len(sizes) == 0:
        raise ConfigError(f"Size list '{text}' is empty")
    if min(sizes) < 1:
        raise ConfigError(f"Sizes have to be at least 1, got {min(sizes)}")
    return sizes

def parse_indices(text: str) -> list[int]:
    """ Comma-separated list of non-negative integers, possibly empty """
    try:
        values = [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as error:
        raise ConfigError(f"Invalid list of indices '{text}'") from error
    if any(value < 0 for value in values):
        raise ConfigError(f"Indices have to be non-negative, got '{text}'")
    return values

@dataclass(frozen=True)
class ExperimentConfig:
    """ One invocation of the command line tool: the command, its parameters,
        and where and how the result is written """

    group: str
    command: str
    parameters: dict[str, Any] = field(default_factory=dict)
    output: str | None = None
    format: OutputFormat = "csv"
    seed: int = 0
    jobs: int = 1

    def __post_init__(self):
        if self.format not in get_args(OutputFormat):
            raise ConfigError(f"Unknown output format '{self.format}'")
        if self.jobs < 1:
            raise ConfigError(f"Number of jobs has to be positive, got "
            f"{self.jobs}")
        if self.seed < 0:
            raise ConfigError(f"Seed has to be non-negative, got {self.seed}")

    def get(self, name: str, default: Any = None) -> Any:
        value = self.parameters.get(name)
        return default if value is None else value

    def config_hash(self) -> str:
        """ SHA-256 of everything that determines the result. The number of
            jobs and the output path are left out """
        payload = {
            "group": self.group,
            "command": self.command,
            "parameters": self.parameters,
            "format": self.format,
            "seed": self.seed,
            "tolerances": tolerances(),
            "caps": caps(),
        }
        text = json.dumps(payload, sort_keys=True, default=str)
        return hashlib.sha256(text.encode("utf-8")).hexdigest()

    def rng(self, *keys: int) -> np.random.Generator:
        """ PCG64 generator seeded by the config seed and the given keys, so
            every sweep item draws the same numbers independent of the order in
            which items are evaluated """
        return np.random.default_rng([self.seed, *keys])

    def sweep(self, function: Callable[[Item], Value], items: Iterable[Item]) -> (
    list[Value]):
        """ Evaluate the function on every item with the configured number of
            threads. Results are in the order of the items """
        items = list(items)
        if self.jobs == 1 or len(items) < 2:
            return [function(item) for item in items]
        with ThreadPoolExecutor(max_workers=self.jobs) as pool:
            return list(pool.map(function, items))

@dataclass(frozen=True)
class Table:
    """ Result of a sweep, written as CSV rows """

    columns: tuple[str, ...]
    rows: list[tuple[Any, ...]]

    def __post_init__(self):
        for row in self.rows:
            if len(row) != len(self.columns):
                raise ValueError(f"Row {row} does not match columns "
                f"{self.columns}")

@dataclass(frozen=True)
class Document:
    """ Result that is written verbatim, e.g. a JSON input file for another
        command """

    text: str

Result = Table | Document | dict[str, Any]

def plain(value: Any) -> Any:
    """ Convert numpy and complex values to JSON-compatible Python values.
        Non-finite floats become strings """
    if isinstance(value, dict):
        return {str(key): plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(item) for item in value]
    if isinstance(value, np.ndarray):
        return plain(value.tolist())
    if isinstance(value, np.generic):
        return plain(value.item())
    if isinstance(value, complex):
        return [plain(value.real), plain(value.imag)]
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    return value

def header(config: ExperimentConfig) -> dict[str, Any]:
    timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return {
        "version": VERSION,
        "config_hash": config.config_hash(),
        "seed": config.seed,
        "timestamp": timestamp,
    }

def _csv_cell(value: Any) -> Any:
    value = plain(value)
    if value is None:
        return ""
    if isinstance(value, (list, dict)):
        return json.dumps(value)
    return value

def format_result(config: ExperimentConfig, result: Result) -> str:
    """ Render a result in the configured format. CSV output starts with
        comment lines for the version, config hash, seed and timestamp """
    if isinstance(result, Document):
        return result.text if result.text.endswith("\n") else result.text + "\n"
    info = header(config)
    if config.format == "json":
        if isinstance(result, Table):
            body: dict[str, Any] = {"columns": list(result.columns), "rows":
            plain(result.rows)}
        else:
            body = {"report": plain(result)}
        return json.dumps({"header": info, **body}, indent=2) + "\n"
    buffer = io.StringIO()
    buffer.write(f"# clockforge {info['version']}\n")
    buffer.write(f"# config sha256 {info['config_hash']}\n")
    buffer.write(f"# seed {info['seed']}\n")
    buffer.write(f"# timestamp {info['timestamp']}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    if isinstance(result, Table):
        writer.writerow(result.columns)
        for row in result.rows:
            writer.writerow([_csv_cell(value) for value in row])
    else:
        writer.writerow(("key", "value"))
        for key, value in result.items():
            writer.writerow((key, _csv_cell(value)))
    return buffer.getvalue()

def write_result(config: ExperimentConfig, result: Result):
    """ Write to the output file, or to stdout if there is none """
    text = format_result(config, result)
    if config.output is None:
        print(text, end="")
    else:
        with open(config.output, "w") as file:
            file.write(text)
