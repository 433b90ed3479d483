import csv
import json
import pytest
from clockforge import ConfigError, ClaimVerificationError, NumericalError
from clockforge.cli import (ExperimentConfig, Table, Document, parse_sizes,
format_result, run, main, COMMANDS, CLAIMS)
from clockforge.cli.claims import _doubling_bracket

def _rows(path):
    with open(path) as file:
        lines = [line for line in file if not line.startswith("#")]
    return list(csv.reader(lines))

def test_parse_sizes():
    assert parse_sizes("4:10:2") == [4, 6, 8]
    assert parse_sizes("3,5") == [3, 5]
    assert parse_sizes("2:5") == [2, 3, 4]
    for text in ["a", "0", "1:2:3:4", "", "5:3"]:
        with pytest.raises(ConfigError):
            parse_sizes(text)

def test_config_validation():
    with pytest.raises(ConfigError):
        ExperimentConfig("clock", "build", format="xml")
    with pytest.raises(ConfigError):
        ExperimentConfig("clock", "build", jobs=0)
    with pytest.raises(ConfigError):
        ExperimentConfig("clock", "build", seed=-1)

def test_config_hash():
    config = ExperimentConfig("clock", "build", {"T": "4"})
    assert config.config_hash() == ExperimentConfig("clock", "build", {"T":
    "4"}, jobs=4, output="elsewhere.csv").config_hash()
    assert config.config_hash() != ExperimentConfig("clock", "build", {"T":
    "4"}, seed=1).config_hash()
    assert config.config_hash() != ExperimentConfig("clock", "build", {"T":
    "5"}).config_hash()

def test_format_csv():
    config = ExperimentConfig("clock", "build", seed=7)
    text = format_result(config, Table(("T", "gap"), [(4, 0.5), (8, float(
    "inf"))]))
    lines = text.splitlines()
    assert lines[0].startswith("# clockforge ")
    assert lines[1] == f"# config sha256 {config.config_hash()}"
    assert lines[2] == "# seed 7"
    assert lines[3].startswith("# timestamp ")
    assert lines[4:] == ["T,gap", "4,0.5", "8,inf"]
    report = format_result(config, {"holds": True, "cycle": None})
    assert report.splitlines()[4:] == ["key,value", "holds,True", "cycle,"]

def test_format_json():
    config = ExperimentConfig("ulg", "check", format="json")
    data = json.loads(format_result(config, Table(("z",), [(1 + 2j,)])))
    assert data["header"]["config_hash"] == config.config_hash()
    assert data["columns"] == ["z"]
    assert data["rows"] == [[[1.0, 2.0]]]
    assert format_result(config, Document("{}")) == "{}\n"

def test_table_rows_match_columns():
    with pytest.raises(ValueError):
        Table(("T", "gap"), [(4,)])

def test_clock_build(tmp_path):
    output = tmp_path / "clock.csv"
    assert main(["clock", "build", "-T", "4,8", "-q", "-o", str(output)]) == 0
    assert output.read_text().startswith("# clockforge")
    rows = _rows(output)
    assert rows[0] == ["T", "E0", "E1", "gap", "pi_0", "pi_T"]
    assert [row[0] for row in rows[1:]] == ["4", "8"]
    assert abs(float(rows[1][1])) <= 1e-10

def test_jobs_do_not_change_rows(tmp_path):
    single, threaded = tmp_path / "single.csv", tmp_path / "threaded.csv"
    arguments = ["clock", "metropolis", "--pi", "random", "-T", "5,6,7", "-s",
    "3", "-q"]
    assert main(arguments + ["-o", str(single)]) == 0
    assert main(arguments + ["-j", "3", "-o", str(threaded)]) == 0
    assert _rows(single) == _rows(threaded)

def test_invalid_input_exit_code(tmp_path):
    assert main(["clock", "build", "-T", "0", "-q"]) == 2
    missing = tmp_path / "missing.json"
    assert main(["ulg", "check", "--file", str(missing), "-q"]) == 2
    broken = tmp_path / "broken.json"
    broken.write_text('{"vertices": 3}')
    assert main(["ulg", "check", "--file", str(broken), "-q"]) == 2

def test_unknown_command():
    assert run(ExperimentConfig("clock", "rewind")) == 2
    assert run(ExperimentConfig("verify", "everything")) == 2

def test_ulg_build_feeds_check(tmp_path):
    graph = tmp_path / "graph.json"
    report = tmp_path / "report.json"
    assert main(["ulg", "build", "--kind", "random", "--vertices", "5", "-q",
    "-o", str(graph)]) == 0
    assert main(["ulg", "check", "--file", str(graph), "-f", "json", "-q", "-o",
    str(report)]) == 0
    data = json.loads(report.read_text())["report"]
    assert data["vertices"] == 5
    assert data["simple"]
    assert data["holds"]

def test_verify_claim(tmp_path):
    output = tmp_path / "claim.csv"
    assert main(["verify", "metropolis-ground", "-T", "5,10", "--samples", "2",
    "-q", "-o", str(output)]) == 0
    rows = _rows(output)
    assert rows[0][0] == "T"
    assert len(rows) == 3

REDUCED_CLAIM_ARGUMENTS = {
    "metropolis-ground": ["-T", "25,50", "--samples", "2"],
    "heavy-endpoint-gap": ["-T", "25,50"],
    "endpoint-clock": ["-T", "10,20"],
    "full-circuit-unsat": ["-T", "4,8", "--qubits", "1,2"],
    "mapping": ["-T", "20,40", "--samples", "6"],
    "product-bound": ["-T", "10,20", "--samples", "3"],
    "adiabatic": ["-T", "10,20", "--grid", "51"],
    "diameter": ["-T", "8,16", "--samples", "3"],
    "ulg": ["-T", "4,8", "--samples", "3"],
    "padding": ["-T", "4,8", "--samples", "3"],
    "projector-pair": ["--samples", "3"],
    "conjugation": ["-T", "4", "--qubits", "1,2", "--samples", "2"],
    "geometrical": ["-T", "4", "--samples", "2"],
}

def test_every_claim_has_reduced_arguments():
    assert sorted(REDUCED_CLAIM_ARGUMENTS) == sorted(CLAIMS)

@pytest.mark.parametrize("claim", sorted(REDUCED_CLAIM_ARGUMENTS))
def test_claim_holds(claim, tmp_path):
    output = tmp_path / "claim.csv"
    assert main(["verify", claim, *REDUCED_CLAIM_ARGUMENTS[claim], "-q", "-o",
    str(output)]) == 0
    assert output.read_text().startswith("# clockforge")

def test_adiabatic_claim_columns(tmp_path):
    output = tmp_path / "adiabatic.csv"
    assert main(["verify", "adiabatic", "-T", "10,20", "--grid", "51", "-q",
    "-o", str(output)]) == 0
    rows = _rows(output)
    columns = rows[0]
    heavy = [float(row[columns.index("heavy_s_min")]) for row in rows[1:]]
    standard = [float(row[columns.index("standard_s_min")]) for row in rows[1:]]
    assert min(heavy) >= 0.98 - 1e-4
    assert standard[0] < standard[1] < 1.0

def test_doubling_bracket():
    _doubling_bracket({8: 0.6, 16: 0.7, 32: 0.75}, "penalty * T^2", 0.5, 2.0)
    # A penalty decaying like T^-4 halves twice per doubling once scaled
    with pytest.raises(ClaimVerificationError):
        _doubling_bracket({8: 1.0, 16: 0.25}, "penalty * T^2", 0.5, 2.0)
    with pytest.raises(ClaimVerificationError):
        _doubling_bracket({8: 1.0, 16: 4.0}, "penalty * T^2", 0.5, 2.0)
    with pytest.raises(ClaimVerificationError):
        _doubling_bracket({8: 1e-9, 32: 1.0}, "penalty * T^2", 0.5, 2.0)

def test_claim_failure_exit_code(monkeypatch):
    def failing(config):
        raise ClaimVerificationError("gap closed")
    monkeypatch.setitem(CLAIMS, "mapping", failing)
    assert run(ExperimentConfig("verify", "mapping")) == 4

def test_numerical_failure_exit_code(monkeypatch):
    def failing(config):
        raise NumericalError("eigensolver did not converge", 1e-3)
    monkeypatch.setitem(COMMANDS["clock"], "build", failing)
    assert run(ExperimentConfig("clock", "build")) == 3
