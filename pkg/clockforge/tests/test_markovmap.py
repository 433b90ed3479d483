import math
import numpy as np
import pytest
from hypothesis import given, seed, settings, strategies as st
from clockforge import (MarkovChain, SymTridiagonal, TimeDistribution,
ValidationError, ReducibleClockError, conductance, cheeger_bounds,
quantum_to_classical, orthogonal_excitation, birth_death_bounds,
tridiag_product_bound, mapping_report, metropolis_chain,
metropolis_hamiltonian, heavy_endpoint_matrix, spectral_gap, ground_state)
from clockforge.markovmap import median_state, path_quantity

def test_chain_validation():
    with pytest.raises(ValidationError):
        MarkovChain([[0.5, 0.4], [0.5, 0.5]])
    with pytest.raises(ValidationError):
        MarkovChain([[1.5, -0.5], [0.5, 0.5]])
    with pytest.raises(ValidationError):
        MarkovChain([[0.5, 0.5], [0.5, 0.5]], [0.9, 0.1])

def test_stationary_distribution():
    chain = MarkovChain([
        [0.5, 0.5, 0],
        [0.25, 0.5, 0.25],
        [0, 0.5, 0.5]
    ])
    assert np.allclose(chain.pi, [0.25, 0.5, 0.25])
    assert chain.is_birth_death()
    assert MarkovChain.from_string(chain.to_string()).pi == pytest.approx(
    chain.pi)

def test_uniform_conductance():
    chain = metropolis_chain(TimeDistribution.uniform(2))
    assert conductance(chain) == pytest.approx(0.25)
    assert conductance(chain, "exact") == pytest.approx(0.25)

def test_conductance_strategies_agree():
    rng = np.random.default_rng(11)
    chain = metropolis_chain(TimeDistribution.random(9, rng))
    assert conductance(chain) == pytest.approx(conductance(chain, "exact"))
    with pytest.raises(ValidationError):
        conductance(chain, "greedy")
    with pytest.raises(ValidationError):
        conductance(MarkovChain([[1.0]]))

def test_cheeger():
    assert cheeger_bounds(0.25) == pytest.approx((1 / 32, 0.5))
    chain = metropolis_chain(TimeDistribution.uniform(12))
    lower, upper = cheeger_bounds(conductance(chain))
    assert lower <= chain.spectral_gap() <= upper
    with pytest.raises(ValidationError):
        cheeger_bounds(1.5)

def test_two_state_path_quantity():
    chain = MarkovChain([
        [0.5, 0.5],
        [0.5, 0.5]
    ])
    ell, ell_plus, ell_minus, m = path_quantity(chain)
    assert m == 0
    assert ell == pytest.approx(2.0)
    assert ell_minus == 0.0
    report = birth_death_bounds(chain)
    assert report.gap == pytest.approx(1.0)
    assert report.lower <= report.gap <= report.upper

def test_uniform_path_quantity():
    T = 10
    chain = metropolis_chain(TimeDistribution.uniform(T))
    assert median_state(chain.pi) == 5
    report = birth_death_bounds(chain)
    assert report.ell == pytest.approx(36.0)
    assert report.ell_plus == pytest.approx(36.0)
    assert report.ell_minus == pytest.approx(36.0)
    assert report.gap == pytest.approx((1 - math.cos(math.pi / (T + 1))) / 2)
    assert report.lower == pytest.approx(1 / 72)
    assert report.lower <= report.gap <= report.upper

def test_path_quantity_rejects_jumps():
    chain = MarkovChain([
        [0.5, 0.25, 0.25],
        [0.25, 0.5, 0.25],
        [0.25, 0.25, 0.5]
    ])
    with pytest.raises(ValidationError):
        path_quantity(chain)

def test_mapping_recovers_metropolis():
    distribution = TimeDistribution.random(15, np.random.default_rng(5))
    mapping = quantum_to_classical(metropolis_hamiltonian(distribution))
    expected = metropolis_chain(distribution)
    assert np.allclose(mapping.chain.P, expected.P, atol=1e-10)
    assert np.allclose(mapping.chain.pi, distribution.pi, atol=1e-10)

@pytest.mark.parametrize("T", [20, 100, 200])
@pytest.mark.parametrize("seed", [0, 1, 2, 3, 4, 5])
def test_mapping_gap_relation(T, seed):
    clock = SymTridiagonal.random(T, np.random.default_rng([seed, T]))
    mapping = quantum_to_classical(clock)
    gap = spectral_gap(clock)
    assert mapping.chain.spectral_gap() == pytest.approx(mapping.expected_gap(
    gap), abs=1e-9)
    assert np.allclose(np.abs(mapping.psi) ** 2, mapping.chain.pi, atol=1e-10)
    report = mapping_report(clock)
    assert not report.reducible
    assert report.gap_defect <= 1e-9
    lower, upper = report.cheeger
    assert lower - 1e-12 <= report.chain_gap <= upper + 1e-12
    assert report.birth_death.lower <= report.chain_gap <= (
    report.birth_death.upper)

@pytest.mark.parametrize("k", range(34))
def test_cheeger_with_decaying_ground_state(k):
    # Cuts in the decaying tails have tiny mass on the smaller side
    clock = SymTridiagonal.random(20, np.random.default_rng([0, 20, k]))
    report = mapping_report(clock)
    assert report.conductance > 0.0
    lower, upper = report.cheeger
    assert 0.0 < lower <= report.chain_gap + 1e-12
    assert report.chain_gap <= upper + 1e-12

@pytest.mark.parametrize("k", [0, 2, 5, 31])
def test_conductance_strategies_agree_on_tails(k):
    clock = SymTridiagonal.random(20, np.random.default_rng([0, 20, k]))
    chain = quantum_to_classical(clock).chain
    exact = conductance(chain, "exact")
    assert exact > 0.0
    assert conductance(chain) == pytest.approx(exact, rel=1e-9)

def test_cheeger_negative_zero():
    assert cheeger_bounds(-0.0) == (0.0, 0.0)
    assert math.copysign(1.0, cheeger_bounds(-0.0)[1]) == 1.0

def test_mapping_from_supplied_ground_state():
    clock = SymTridiagonal.random(40, np.random.default_rng(8))
    state = ground_state(clock)
    seeded = quantum_to_classical(clock, ground=(state.energy, state.vector))
    computed = quantum_to_classical(clock)
    assert np.allclose(seeded.chain.P, computed.chain.P, atol=1e-10)
    assert np.allclose(seeded.chain.pi, np.abs(state.vector) ** 2, atol=1e-10)
    with pytest.raises(ValidationError):
        quantum_to_classical(clock, ground=(state.energy, np.ones(41)))
    with pytest.raises(ValidationError):
        quantum_to_classical(clock, ground=(state.energy, state.vector[:-1]))

def test_mapping_shifts_large_clock():
    clock = SymTridiagonal([2, 3, 2, 3], [-1, -1.5, -1])
    mapping = quantum_to_classical(clock)
    assert mapping.shifted_energy == pytest.approx(0.0, abs=1e-12)
    assert mapping.scale >= 1.0
    assert mapping.chain.spectral_gap() == pytest.approx(mapping.expected_gap(
    spectral_gap(clock)), abs=1e-9)

def test_reducible_clock():
    clock = SymTridiagonal([0.5, 0.5, 0.5, 0.5], [-0.5, 0, -0.5])
    with pytest.raises(ReducibleClockError) as error:
        quantum_to_classical(clock)
    assert error.value.cut == 1
    report = mapping_report(clock)
    assert report.reducible
    assert report.cut == 1
    assert report.hamiltonian_gap == pytest.approx(0.0, abs=1e-12)

def test_orthogonal_excitation():
    clock = SymTridiagonal([0.5, 0.5, 0.5, 0.5], [-0.5, 0, -0.5])
    psi = np.full(4, 0.5)
    excitation = orthogonal_excitation(clock, psi, 1)
    assert np.allclose(excitation, [1, 1, -1, -1])
    assert abs(np.vdot(psi, excitation)) <= 1e-14
    assert np.allclose(clock.matvec(excitation.real), 0.0)
    with pytest.raises(ValidationError):
        orthogonal_excitation(clock, psi, 0)

def test_product_bound():
    T = 40
    bound = tridiag_product_bound(heavy_endpoint_matrix(T))
    assert bound.endpoint == pytest.approx(0.25)
    assert not bound.degenerate
    assert bound.product == pytest.approx(bound.gap / 4)
    uniform = tridiag_product_bound(metropolis_hamiltonian(
    TimeDistribution.uniform(T)))
    assert uniform.product * (T + 1) ** 3 <= 10.0

@seed(20241018)
@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=1, max_value=10), st.integers(min_value=0,
max_value=2 ** 32 - 1))
def test_metropolis_chain_properties(T, entropy):
    distribution = TimeDistribution.random(T, np.random.default_rng(entropy))
    chain = metropolis_chain(distribution)
    assert np.allclose(chain.P.sum(axis=1), 1.0)
    flows = chain.flows()
    assert np.allclose(flows, flows.T, atol=1e-14)
    assert np.allclose(chain.pi, distribution.pi)
    assert conductance(chain) == pytest.approx(conductance(chain, "exact"))
