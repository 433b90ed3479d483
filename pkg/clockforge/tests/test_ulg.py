import math
import numpy as np
import pytest
from clockforge import (UnitaryLabeledGraph, Circuit, ClockWeights,
HermitianMatrix, ValidationError, HypothesisError,
ulg_hamiltonian, is_simple, laplacian_equivalence_check, matrix_diameter,
diameter_bound_check, frustrated_pair_analysis, low_energy_unsat_upper_bound,
propagation_hamiltonian, clock_hamiltonian, eigvals)
from clockforge.circuitham import gate_unitaries
from clockforge.ulg import LabeledEdge, distance_matrix, chebyshev_diameter_bound

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)

def test_path_matches_propagation():
    circuit = Circuit.random(2, 5, np.random.default_rng(4))
    graph = UnitaryLabeledGraph.path(gate_unitaries(circuit))
    assert ulg_hamiltonian(graph).allclose(propagation_hamiltonian(
    ClockWeights.kitaev(5), circuit), atol=1e-12)

def test_graph_validation():
    identity = np.eye(2)
    with pytest.raises(ValidationError):
        UnitaryLabeledGraph([0, 1], 2, [LabeledEdge(0, 0, identity)])
    with pytest.raises(ValidationError):
        UnitaryLabeledGraph([0, 1], 2, [LabeledEdge(0, 2, identity)])
    with pytest.raises(ValidationError):
        UnitaryLabeledGraph([0, 1], 2, [LabeledEdge(0, 1, 2 * identity)])
    with pytest.raises(ValidationError):
        UnitaryLabeledGraph([0, 1], 2, [LabeledEdge(0, 1, identity),
        LabeledEdge(1, 0, identity)])
    with pytest.raises(ValidationError):
        UnitaryLabeledGraph([0, 0], 2, [])

def test_disconnected_graph():
    graph = UnitaryLabeledGraph([0, 1, 2], 1, [LabeledEdge(0, 1, np.eye(1))])
    with pytest.raises(ValidationError):
        ulg_hamiltonian(graph)

def test_graph_string():
    graph = UnitaryLabeledGraph.random_simple(5, 2, np.random.default_rng(1))
    restored = UnitaryLabeledGraph.from_string(graph.to_string())
    assert restored.vertices == graph.vertices
    assert ulg_hamiltonian(restored).allclose(ulg_hamiltonian(graph),
    atol=1e-12)

@pytest.mark.parametrize("seed", range(10))
def test_simple_graph_equivalence(seed):
    rng = np.random.default_rng(seed)
    graph = UnitaryLabeledGraph.random_simple(int(rng.integers(3, 8)), 2, rng)
    simple, cycle = is_simple(graph)
    assert simple and cycle is None
    report = laplacian_equivalence_check(graph)
    assert report.holds

def test_frustrated_triangle():
    identity = np.eye(2)
    graph = UnitaryLabeledGraph(["a", "b", "c"], 2, [
        LabeledEdge("a", "b", identity),
        LabeledEdge("b", "c", identity),
        LabeledEdge("a", "c", -identity),
    ])
    simple, cycle = is_simple(graph)
    assert not simple
    assert set(cycle) == {"a", "b", "c"}
    with pytest.raises(HypothesisError):
        laplacian_equivalence_check(graph)
    # No loop product has eigenvalue one, so no state has zero energy
    assert eigvals(ulg_hamiltonian(graph), 1)[0] > 1e-6

def test_double_edge_sigma_x():
    pair = frustrated_pair_analysis(SIGMA_X)
    assert pair.hamiltonian.allclose([
        [2, 0, -1, -1],
        [0, 2, -1, -1],
        [-1, -1, 2, 0],
        [-1, -1, 0, 2]
    ])
    assert np.allclose(pair.penalties, [0, 2])
    assert pair.transformed.allclose([
        [2, 0, -2, 0],
        [0, 2, 0, 0],
        [-2, 0, 2, 0],
        [0, 0, 0, 2]
    ], atol=1e-12)

def test_double_edge_phase():
    pair = frustrated_pair_analysis(np.diag([1, 1j]))
    assert np.allclose(pair.penalties, [0, 2 - math.sqrt(2)])
    assert np.allclose(np.abs(pair.eigenvalues), [2, math.sqrt(2)])

def test_double_edge_validation():
    with pytest.raises(ValidationError):
        frustrated_pair_analysis(np.array([[1, 1], [0, 1]]))

def test_distance_matrix():
    path = clock_hamiltonian(ClockWeights.kitaev(2)).entries
    assert np.array_equal(distance_matrix(path), [
        [0, 1, 2],
        [1, 0, 1],
        [2, 1, 0]
    ])
    assert np.array_equal(distance_matrix(np.diag([0.0, 1.0])), [
        [0, -1],
        [-1, 0]
    ])

@pytest.mark.parametrize("T", [3, 8, 20])
def test_path_diameter(T):
    clock = clock_hamiltonian(ClockWeights.kitaev(T))
    assert matrix_diameter(clock) == (T, T)
    report = diameter_bound_check(clock)
    assert report.diam == T
    assert not report.support_mode
    assert report.diam <= report.chebyshev_bound

def test_disconnected_diameter():
    diam, diam_support = matrix_diameter(HermitianMatrix.diagonal([0, 1, 2]))
    assert math.isinf(diam)
    assert diam_support == 0
    report = diameter_bound_check(HermitianMatrix.diagonal([0, 1, 2]))
    assert report.support_mode

def test_two_state_diameter():
    report = diameter_bound_check(HermitianMatrix([
        [1, -1],
        [-1, 1]
    ]))
    assert report.diam == 1
    assert report.pi_min == pytest.approx(0.5)
    assert report.normalized_gap == pytest.approx(1.0)
    assert report.stated_bound == pytest.approx(math.log(4) ** 2)
    assert not report.stated_holds
    assert report.refined_holds

def test_diameter_in_basis():
    clock = clock_hamiltonian(ClockWeights.kitaev(4))
    _, vectors = np.linalg.eigh(clock.entries)
    diam, _ = matrix_diameter(clock, vectors)
    assert diam == math.inf
    with pytest.raises(ValidationError):
        matrix_diameter(clock, 2 * np.eye(5))

def test_chebyshev_bound():
    assert chebyshev_diameter_bound(0.5, 0.0) == math.inf
    assert chebyshev_diameter_bound(0.5, 1.0) == pytest.approx(1 + math.log(4) /
    math.log(1 + math.sqrt(2)))

@pytest.mark.parametrize("T", [4, 8, 16])
def test_low_energy_certificate(T):
    clock = clock_hamiltonian(ClockWeights.kitaev(T))
    excited = float(eigvals(clock)[1])
    certificate = low_energy_unsat_upper_bound(clock, [T], excited)
    assert certificate.subspace_dim == 2
    assert abs(certificate.state[T]) <= 1e-10
    penalized = clock + HermitianMatrix.basis_projector(T + 1, T)
    energy = float(eigvals(penalized, 1)[0])
    assert energy <= certificate.energy + 1e-10
    assert certificate.energy <= excited + 1e-10

def test_low_energy_certificate_needs_states():
    clock = clock_hamiltonian(ClockWeights.kitaev(4))
    with pytest.raises(ValidationError):
        low_energy_unsat_upper_bound(clock, [4], 0.0)
    with pytest.raises(ValidationError):
        low_energy_unsat_upper_bound(clock, [7], 1.0)
