import math
import numpy as np
import pytest
from clockforge import (Schedule, ValidationError, interpolate, gap_sweep,
monotone_excited_check, final_overlap_estimate, heavy_endpoint_matrix,
eigvals)
from clockforge.adiabatic import (clock_initial_hamiltonian,
endpoint_probability, trial_energy_check)

def test_interpolation_endpoints():
    schedule = Schedule.standard_clock(6)
    assert interpolate(schedule, 0.0) == clock_initial_hamiltonian(6)
    assert np.allclose(eigvals(interpolate(schedule, 1.0)), eigvals(
    schedule.h_final))
    with pytest.raises(ValidationError):
        interpolate(schedule, 1.5)

def test_modified_scale():
    schedule = Schedule.modified_clock(5)
    assert schedule.A == 5 ** 4
    at_one = interpolate(schedule, 1.0)
    expected = clock_initial_hamiltonian(5).diag + 625 * heavy_endpoint_matrix(
    5).diag
    assert np.allclose(at_one.diag, expected)

def test_schedule_validation():
    with pytest.raises(ValidationError):
        Schedule("cubic", clock_initial_hamiltonian(3), heavy_endpoint_matrix(3))
    with pytest.raises(ValidationError):
        Schedule("standard-linear", clock_initial_hamiltonian(3),
        heavy_endpoint_matrix(4))
    with pytest.raises(ValidationError):
        Schedule("modified-scaled", clock_initial_hamiltonian(3),
        heavy_endpoint_matrix(3), A=0.0)
    with pytest.raises(ValidationError):
        Schedule.standard_clock(3, "uniform")

def test_standard_gap_closes_at_end():
    T = 10
    grid = 101
    curve = gap_sweep(Schedule.standard_clock(T), grid)
    assert len(curve) == grid
    assert curve.gap[0] == pytest.approx(1.0)
    assert curve.gap[-1] == pytest.approx(2 - 2 * math.cos(math.pi / (T + 1)))
    assert curve.gap_min <= curve.gap[-1] + 1e-12
    heavy = gap_sweep(Schedule.standard_clock(T, "heavy-endpoint"), grid)
    assert heavy.s_min >= 1 - 1 / (grid - 1) - 1e-4

def test_standard_minimum_approaches_end():
    # The unweighted clock has its minimum inside the interval at finite T
    minima = [gap_sweep(Schedule.standard_clock(T), 101).s_min for T in [10,
    20, 40]]
    assert minima[0] < minima[1] < minima[2] < 1.0
    assert 1 - minima[2] < (1 - minima[0]) / 2

def test_sweep_threads_keep_order():
    schedule = Schedule.standard_clock(8, "heavy-endpoint")
    single = gap_sweep(schedule, 21)
    threaded = gap_sweep(schedule, 21, jobs=3)
    assert np.array_equal(single.gap, threaded.gap)
    assert single.rows() == threaded.rows()

def test_grid_validation():
    schedule = Schedule.standard_clock(4)
    with pytest.raises(ValidationError):
        gap_sweep(schedule, 1)
    with pytest.raises(ValidationError):
        gap_sweep(schedule, [0.0, 0.5, 0.5, 1.0])
    with pytest.raises(ValidationError):
        gap_sweep(schedule, [0.0, 1.5])
    with pytest.raises(ValidationError):
        gap_sweep(schedule, 5, jobs=0)

@pytest.mark.parametrize("T", [10, 20, 40])
def test_modified_gap_stays_open(T):
    curve = gap_sweep(Schedule.modified_clock(T), 51)
    assert curve.gap_min >= 0.25 - 1e-9
    assert np.min(curve.gap) >= 0.25 - 1e-9

def test_monotone_excited_energy():
    report = monotone_excited_check(Schedule.modified_clock(10), 51)
    assert report.monotone
    assert report.first_violation is None
    with pytest.raises(ValidationError):
        monotone_excited_check(Schedule.standard_clock(10))

def test_final_overlap():
    estimate = final_overlap_estimate(Schedule.modified_clock(10))
    assert estimate.overlap == pytest.approx(1.0, abs=1e-4)
    assert estimate.deviation <= estimate.first_order_bound
    assert estimate.norm_deviation <= 2 * estimate.first_order_bound + 1e-6
    with pytest.raises(ValidationError):
        final_overlap_estimate(Schedule.standard_clock(10))

def test_final_overlap_unperturbed_limit():
    estimate = final_overlap_estimate(Schedule.modified_clock(10, A=1e12))
    assert estimate.overlap == pytest.approx(1.0, abs=1e-6)
    assert estimate.first_order_bound <= 1e-6

def test_final_overlap_scaling():
    estimates = {T: final_overlap_estimate(Schedule.modified_clock(T)) for T in
    [8, 12, 16]}
    for estimate in estimates.values():
        assert estimate.deviation <= 1.1 * estimate.first_order_bound
    bounds = [estimates[T].first_order_bound for T in [8, 12, 16]]
    assert bounds[0] > bounds[1] > bounds[2] > 0.0
    # Deviation bound times T stays bounded
    assert max(T * estimates[T].first_order_bound for T in [12, 16]) <= (
    1.5 * 8 * bounds[0])

def test_final_overlap_commuting_initial():
    final = heavy_endpoint_matrix(6)
    estimate = final_overlap_estimate(Schedule("modified-scaled", final, final))
    assert estimate.overlap == pytest.approx(1.0, abs=1e-12)
    assert estimate.first_order_bound == pytest.approx(0.0, abs=1e-12)

@pytest.mark.parametrize("T", [10, 20, 40])
def test_endpoint_weights(T):
    assert endpoint_probability(heavy_endpoint_matrix(T), T) == pytest.approx(
    0.25)
    kitaev = Schedule.standard_clock(T).h_final
    assert endpoint_probability(kitaev, T) == pytest.approx(1 / (T + 1))
    assert trial_energy_check(T) == pytest.approx(0.75)
    with pytest.raises(ValidationError):
        endpoint_probability(kitaev, T + 1)
