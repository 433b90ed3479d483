import pytest
from clockforge import (ConfigError, set_tolerance, get_tolerance, set_cap,
get_cap, tolerances)
from clockforge.config import load_environment, TOL_ENV_VAR
from clockforge.logger import (set_verbose, log_info, log_warning, log_error,
log_stat)

def test_tolerance():
    previous = get_tolerance("kernel")
    try:
        set_tolerance("kernel", 1e-6)
        assert get_tolerance("kernel") == 1e-6
        assert tolerances()["kernel"] == 1e-6
    finally:
        set_tolerance("kernel", previous)
    with pytest.raises(ConfigError):
        set_tolerance("loose", 1e-3)
    with pytest.raises(ConfigError):
        set_tolerance("tol", 0.0)
    with pytest.raises(ConfigError):
        get_tolerance("loose")

def test_cap():
    with pytest.raises(ConfigError):
        set_cap("max_qubits", 0)
    with pytest.raises(ConfigError):
        set_cap("max_gates", 10)
    assert get_cap("max_qubits") == 6

def test_environment_override(monkeypatch):
    previous = get_tolerance("tol")
    try:
        monkeypatch.setenv(TOL_ENV_VAR, "1e-8")
        load_environment()
        assert get_tolerance("tol") == 1e-8
        monkeypatch.setenv(TOL_ENV_VAR, "tight")
        with pytest.raises(ConfigError):
            load_environment()
    finally:
        set_tolerance("tol", previous)

def test_logger_streams(capsys):
    try:
        set_verbose(False)
        log_info("hidden")
        log_stat("gap", 0.5)
        log_warning("shown")
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "hidden" not in captured.err
        assert "WARNING: shown" in captured.err
        set_verbose(True)
        log_stat("gap", 0.5)
        log_error("failed")
        captured = capsys.readouterr()
        assert "gap:" in captured.err
        assert "ERROR: failed" in captured.err
    finally:
        set_verbose(True)
