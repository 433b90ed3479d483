import math
import numpy as np
import pytest
import sympy
from hypothesis import given, seed, settings, strategies as st
from clockforge import (ClockWeights, TimeDistribution, CoupledBlockParams,
ValidationError, clock_hamiltonian, clock_tridiagonal, metropolis_chain,
metropolis_hamiltonian, heavy_endpoint_distribution,
heavy_endpoint_distribution_exact, heavy_endpoint_matrix,
stoquastic_lower_bound, endpoint_penalized_clock, coupled_block,
coupled_block_symbolic, eigvals, ground_state)
from clockforge.clockham import (stoquastic_ratios, dirichlet_ground_energy,
sine_ansatz, coupled_block_tridiagonal, coupled_block_ansatz,
coupled_block_case_positions, coupled_block_case_values)

def test_kitaev_weights():
    weights = ClockWeights.kitaev(3)
    assert weights.bound == 2.0
    assert clock_hamiltonian(weights).allclose([
        [1, -1, 0, 0],
        [-1, 2, -1, 0],
        [0, -1, 2, -1],
        [0, 0, -1, 1]
    ])

def test_weights_validation():
    with pytest.raises(ValidationError):
        ClockWeights(2, [0, 0, 0], [0.5])
    with pytest.raises(ValidationError):
        ClockWeights(1, [0, 1.5], [0.5])
    with pytest.raises(ValidationError):
        ClockWeights(0, [0], [])

def test_complex_weights_reduce():
    weights = ClockWeights(3, [0.5, 1, 1, 0.5], [-0.5j, 0.5, 0.5 * np.exp(
    0.3j)])
    reduced = clock_tridiagonal(weights)
    assert reduced.is_stoquastic()
    assert np.allclose(eigvals(reduced), eigvals(clock_hamiltonian(weights)))
    restored = ClockWeights.from_tridiagonal(reduced)
    assert np.allclose(restored.b, weights.b)
    assert np.allclose(restored.a, weights.a)

def test_metropolis_uniform():
    chain = metropolis_chain(TimeDistribution.uniform(2))
    assert np.allclose(chain.P, [
        [0.75, 0.25, 0],
        [0.25, 0.5, 0.25],
        [0, 0.25, 0.75]
    ])
    T = 10
    clock = metropolis_hamiltonian(TimeDistribution.uniform(T))
    values = eigvals(clock)
    assert values[0] == pytest.approx(0.0, abs=1e-12)
    assert values[1] == pytest.approx((1 - math.cos(math.pi / (T + 1))) / 2)

@seed(20241018)
@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=1, max_value=30), st.integers(min_value=0,
max_value=2 ** 32 - 1))
def test_metropolis_ground_state(T, entropy):
    distribution = TimeDistribution.random(T, np.random.default_rng(entropy))
    energy, vector = ground_state(metropolis_hamiltonian(distribution))
    assert abs(energy) <= 1e-10
    assert np.max(np.abs(vector - distribution.amplitudes())) <= 1e-8

def test_distribution_validation():
    with pytest.raises(ValidationError):
        TimeDistribution(2, [0.5, 0.5, 0.0])
    with pytest.raises(ValidationError):
        TimeDistribution(1, [0.5, 0.6])
    distribution = TimeDistribution(2, [0.25, 0.5, 0.25])
    assert TimeDistribution.from_string(distribution.to_string()).pi.tolist() == [
    0.25, 0.5, 0.25]

def test_heavy_endpoint_exact():
    values = heavy_endpoint_distribution_exact(5)
    assert values[0] == values[-1] == sympy.Rational(1, 4)
    assert values[2] == sympy.Rational(1, 8)
    assert sum(values) == 1
    with pytest.raises(ValidationError):
        heavy_endpoint_distribution_exact(1)

@pytest.mark.parametrize("T", [3, 4, 10, 57])
def test_heavy_endpoint_closed_form(T):
    closed = heavy_endpoint_matrix(T)
    metropolis = metropolis_hamiltonian(heavy_endpoint_distribution(T))
    assert np.allclose(closed.diag, metropolis.diag, atol=1e-14)
    assert np.allclose(closed.offdiag, metropolis.offdiag, atol=1e-14)
    energy, vector = ground_state(closed)
    assert abs(energy) <= 1e-10
    assert abs(vector[0]) ** 2 == pytest.approx(0.25)
    assert abs(vector[-1]) ** 2 == pytest.approx(0.25)

def test_heavy_endpoint_small():
    assert heavy_endpoint_matrix(2) == metropolis_hamiltonian(
    heavy_endpoint_distribution(2))
    with pytest.raises(ValidationError):
        heavy_endpoint_matrix(1)

@pytest.mark.parametrize("T", [1, 5, 40, 300])
def test_dirichlet_energy(T):
    clock = endpoint_penalized_clock(T)
    bound = stoquastic_lower_bound(clock, sine_ansatz(T))
    assert bound == pytest.approx(dirichlet_ground_energy(T), abs=1e-10)
    assert eigvals(clock, 1)[0] == pytest.approx(dirichlet_ground_energy(T),
    abs=1e-10)

def test_stoquastic_bound_is_lower():
    clock = endpoint_penalized_clock(20)
    bound = stoquastic_lower_bound(clock, np.ones(21))
    assert bound <= eigvals(clock, 1)[0]

def test_stoquastic_validation():
    with pytest.raises(ValidationError):
        stoquastic_ratios(endpoint_penalized_clock(2), [1, 0, 1])
    with pytest.raises(ValidationError):
        stoquastic_ratios(endpoint_penalized_clock(2), [1, 1])
    with pytest.raises(ValidationError):
        stoquastic_ratios(clock_hamiltonian(ClockWeights(1, [0, 0], [0.5])),
        [1, 1])

def test_coupled_block_forms():
    params = CoupledBlockParams(4, 0.9, 0.3)
    dense = coupled_block(params)
    assert dense.allclose(coupled_block_tridiagonal(params).to_hermitian())
    symbolic, mu, eta = coupled_block_symbolic(4)
    substituted = np.array(symbolic.subs({mu: 0.9, eta: 0.3}), dtype=float)
    assert np.allclose(substituted, dense.entries.real)

@pytest.mark.parametrize("T,mu,eta", [
    (2, 0.9, 0.3),
    (6, 1.0, 0.0),
    (16, 0.75, 0.5),
])
def test_coupled_block_cases(T, mu, eta):
    params = CoupledBlockParams(T, mu, eta)
    ratios = stoquastic_ratios(coupled_block_tridiagonal(params),
    coupled_block_ansatz(T))
    values = coupled_block_case_values(params)
    for case, positions in coupled_block_case_positions(T).items():
        assert np.allclose(ratios[positions], values[case], atol=1e-10)

def test_coupled_block_admissible():
    assert CoupledBlockParams(3, 0.9, 0.3).admissible(0.1)
    assert not CoupledBlockParams(3, 0.8, 0.3).admissible(0.1)
    assert not CoupledBlockParams(3, 0.9, 0.5).admissible(0.1)
    with pytest.raises(ValidationError):
        CoupledBlockParams(3, 1.5, 0.3)
