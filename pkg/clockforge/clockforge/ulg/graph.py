from __future__ import annotations
from dataclasses import dataclass
from typing import Iterable, Hashable, Any
import os
import json
import jsonschema
import networkx as nx
import numpy as np
from scipy.stats import unitary_group
from ..config import get_cap
from ..errors import ValidationError, HypothesisError
from ..spectral import HermitianMatrix
from ..circuitham import is_unitary

JSON_SCHEMA = json.loads(open(os.path.join(os.path.dirname(__file__),
"ulg_schema.json"), "r").read())

@dataclass(frozen=True, eq=False)
class LabeledEdge:
    """ Edge from a to b carrying the unitary U_ab. Traversing it backwards
        applies U_ab^dagger """

    a: Hashable
    b: Hashable
    unitary: np.ndarray
    weight: float = 1.0

    def reversed(self) -> LabeledEdge:
        return LabeledEdge(self.b, self.a, self.unitary.conj().T, self.weight)

class UnitaryLabeledGraph:
    """ Graph whose edges carry d x d unitaries. Each edge contributes the
        transition term w (|a><a| x I + |b><b| x I - |b><a| x U - |a><b| x
        U^dagger) to the Hamiltonian """

    def __init__(self, vertices: Iterable[Hashable], d: int, edges:
    Iterable[LabeledEdge], vertex_weights: Iterable[float] | None = None, *,
    double_edge: bool = False):
        """ Constructor with the vertex labels, the local dimension and the
            labeled edges. Parallel edges are only accepted for the two-vertex
            double edge """
        self._vertices = list(vertices)
        self._d = d
        self._edges = list(edges)
        self._index = {vertex: i for i, vertex in enumerate(self._vertices)}
        if len(self._index) != len(self._vertices):
            raise ValidationError("Vertex labels are not distinct")
        if d < 1:
            raise ValidationError(f"Local dimension has to be positive, got {d}")
        if vertex_weights is None:
            self._vertex_weights = np.zeros(len(self._vertices))
        else:
            self._vertex_weights = np.array(list(vertex_weights), dtype=float)
            if len(self._vertex_weights) != len(self._vertices):
                raise ValidationError(f"Expected {len(self._vertices)} vertex "
                f"weights, got {len(self._vertex_weights)}")
        pairs = set()
        for edge in self._edges:
            if edge.a not in self._index or edge.b not in self._index:
                raise ValidationError(f"Edge ({edge.a}, {edge.b}) has an unknown "
                f"vertex")
            if edge.a == edge.b:
                raise ValidationError(f"Self loop at vertex {edge.a}")
            if edge.unitary.shape != (d, d) or not is_unitary(edge.unitary):
                raise ValidationError(f"Label of edge ({edge.a}, {edge.b}) is "
                f"not a {d}x{d} unitary")
            if not edge.weight > 0.0:
                raise ValidationError(f"Edge ({edge.a}, {edge.b}) needs a "
                f"positive weight")
            pair = frozenset((edge.a, edge.b))
            if pair in pairs and not (double_edge and len(self._vertices) == 2):
                raise ValidationError(f"Parallel edges between {edge.a} and "
                f"{edge.b}")
            pairs.add(pair)
        self._double_edge = double_edge

    def __repr__(self) -> str:
        """ Canonical representation """
        return (f"{self.__class__.__name__}({self._vertices!r}, {self._d!r}, "
        f"{self._edges!r})")

    def __str__(self) -> str:
        return self.to_string()

    @classmethod
    def path(cls, unitaries: Iterable[np.ndarray]) -> UnitaryLabeledGraph:
        """ Path 0 - 1 - ... - T with the t-th unitary on edge (t, t + 1), the
            graph of a circuit with T gates """
        unitaries = [np.asarray(u, dtype=complex) for u in unitaries]
        if len(unitaries) == 0:
            raise ValidationError("Path needs at least one edge")
        d = unitaries[0].shape[0]
        edges = [LabeledEdge(t, t + 1, u) for t, u in enumerate(unitaries)]
        return cls(range(len(unitaries) + 1), d, edges)

    @classmethod
    def double_edge(cls, unitary: np.ndarray) -> UnitaryLabeledGraph:
        """ Two vertices joined by one edge labeled I and one labeled U """
        unitary = np.asarray(unitary, dtype=complex)
        d = unitary.shape[0]
        return cls([0, 1], d, [LabeledEdge(0, 1, np.eye(d, dtype=complex)),
        LabeledEdge(0, 1, unitary)], double_edge=True)

    @classmethod
    def random_simple(cls, n: int, d: int, rng: np.random.Generator,
    extra_edges: int = 2) -> UnitaryLabeledGraph:
        """ Random connected graph on n vertices, a random tree plus extra
            edges, with labels U_ab = X_b X_a^dagger for Haar-random X_v so
            that every loop product is the identity """
        if n < 2:
            raise ValidationError(f"Random graph needs at least two vertices, "
            f"got {n}")
        frames = [unitary_group.rvs(d, random_state=rng) if d > 1 else
        np.exp(2j * np.pi * rng.random()) * np.ones((1, 1)) for _ in range(n)]
        order = rng.permutation(n)
        pairs = set()
        for i in range(1, n):
            parent = int(order[rng.integers(i)])
            pairs.add(frozenset((parent, int(order[i]))))
        candidates = [frozenset((a, b)) for a in range(n) for b in range(a + 1,
        n) if frozenset((a, b)) not in pairs]
        if extra_edges > 0 and len(candidates) > 0:
            chosen = rng.choice(len(candidates), size=min(extra_edges, len(
            candidates)), replace=False)
            pairs.update(candidates[int(i)] for i in chosen)
        edges = []
        for pair in sorted(tuple(sorted(pair)) for pair in pairs):
            a, b = pair
            edges.append(LabeledEdge(a, b, frames[b] @ frames[a].conj().T))
        return cls(range(n), d, edges)

    @classmethod
    def from_string(cls, text: str) -> UnitaryLabeledGraph:
        """ Convert JSON to a UnitaryLabeledGraph object. Edges without a
            unitary carry the identity """
        data = json.loads(text)
        jsonschema.validate(data, JSON_SCHEMA)
        d = data["d"]
        edges = []
        for entry in data["edges"]:
            if "unitary" in entry:
                unitary = np.array([[complex(re, im) for re, im in row] for row
                in entry["unitary"]])
            else:
                unitary = np.eye(d, dtype=complex)
            edges.append(LabeledEdge(entry["a"], entry["b"], unitary,
            entry.get("weight", 1.0)))
        return cls(data["vertices"], d, edges, data.get("vertex_weights"),
        double_edge=data.get("double_edge", False))

    def to_string(self) -> str:
        """ Convert this graph to JSON """
        data: dict[str, Any] = {"vertices": self._vertices, "d": self._d,
        "edges": [{"a": edge.a, "b": edge.b, "weight": edge.weight, "unitary":
        [[[float(z.real), float(z.imag)] for z in row] for row in
        edge.unitary]} for edge in self._edges]}
        if np.any(self._vertex_weights != 0.0):
            data["vertex_weights"] = self._vertex_weights.tolist()
        if self._double_edge:
            data["double_edge"] = True
        return json.dumps(data)

    @property
    def vertices(self) -> list[Hashable]:
        return list(self._vertices)

    @property
    def d(self) -> int:
        return self._d

    @property
    def edges(self) -> list[LabeledEdge]:
        return list(self._edges)

    @property
    def vertex_weights(self) -> np.ndarray:
        return self._vertex_weights

    @property
    def dim(self) -> int:
        return len(self._vertices) * self._d

    def index(self, vertex: Hashable) -> int:
        return self._index[vertex]

    def multigraph(self) -> nx.MultiGraph:
        """ Underlying undirected multigraph. Edge data holds the labeled edge
            under "edge" """
        graph = nx.MultiGraph()
        graph.add_nodes_from(self._vertices)
        for edge in self._edges:
            graph.add_edge(edge.a, edge.b, edge=edge, weight=edge.weight)
        return graph

    def laplacian(self) -> np.ndarray:
        """ Weighted graph Laplacian plus the vertex weights on the diagonal.
            Parallel edges add up """
        laplacian = nx.laplacian_matrix(self.multigraph(), nodelist=
        self._vertices, weight="weight").toarray().astype(float)
        return laplacian + np.diag(self._vertex_weights)

def ulg_hamiltonian(graph: UnitaryLabeledGraph) -> HermitianMatrix:
    """ Sum of all edge transition terms and vertex weights """
    if graph.dim > get_cap("max_dense_dim"):
        raise ValidationError(f"Dimension {graph.dim} exceeds the dense cap of "
        f"{get_cap('max_dense_dim')}")
    if not nx.is_connected(graph.multigraph()):
        raise ValidationError("Graph is not connected")
    d = graph.d
    dense = np.zeros((graph.dim, graph.dim), dtype=complex)
    identity = np.eye(d)
    for edge in graph.edges:
        a, b = graph.index(edge.a) * d, graph.index(edge.b) * d
        dense[a:a + d, a:a + d] += edge.weight * identity
        dense[b:b + d, b:b + d] += edge.weight * identity
        dense[b:b + d, a:a + d] -= edge.weight * edge.unitary
        dense[a:a + d, b:b + d] -= edge.weight * edge.unitary.conj().T
    for i, weight in enumerate(graph.vertex_weights):
        dense[i * d:(i + 1) * d, i * d:(i + 1) * d] += weight * identity
    return HermitianMatrix(dense)

def _frames(graph: UnitaryLabeledGraph) -> tuple[dict[Hashable, np.ndarray],
nx.Graph, set[int]]:
    """ Frames X_v along a breadth-first spanning forest, with X_b = U_ab X_a
        on tree edges. Returns the frames, the forest and the ids of the tree
        edges """
    multigraph = graph.multigraph()
    frames: dict[Hashable, np.ndarray] = {}
    forest = nx.Graph()
    forest.add_nodes_from(graph.vertices)
    used: set[int] = set()
    for root in graph.vertices:
        if root in frames:
            continue
        frames[root] = np.eye(graph.d, dtype=complex)
        for u, v in nx.bfs_edges(multigraph, root):
            edge = next(iter(multigraph[u][v].values()))["edge"]
            used.add(id(edge))
            oriented = edge if edge.a == u else edge.reversed()
            frames[v] = oriented.unitary @ frames[u]
            forest.add_edge(u, v)
    return frames, forest, used

def is_simple(graph: UnitaryLabeledGraph, tol: float = 1e-9) -> tuple[bool,
list[Hashable] | None]:
    """ Check that the product of unitaries around every loop is the identity.
        It suffices to check the fundamental cycles of a spanning forest, i.e.
        U_ab X_a = X_b on every non-tree edge. Returns the verdict and, if the
        graph is not simple, a violating cycle as list of vertices """
    frames, forest, used = _frames(graph)
    for edge in graph.edges:
        if id(edge) in used:
            continue
        defect = np.max(np.abs(edge.unitary @ frames[edge.a] - frames[edge.b]))
        if defect > tol:
            cycle = nx.shortest_path(forest, edge.b, edge.a) + [edge.b]
            return False, cycle
    return True, None

@dataclass(frozen=True)
class EquivalenceReport:
    """ Distance of W^dagger H_G W to L x I and of the two spectra """

    residual: float
    spectrum_defect: float

    @property
    def holds(self) -> bool:
        return self.residual <= 1e-9 and self.spectrum_defect <= 1e-9

def laplacian_equivalence_check(graph: UnitaryLabeledGraph) -> (
EquivalenceReport):
    """ For a simple graph, W = sum_v |v><v| x X_v conjugates H_G to the graph
        Laplacian tensored with the identity """
    simple, cycle = is_simple(graph)
    if not simple:
        raise HypothesisError("simple", f"Loop product along {cycle} is not the "
        f"identity")
    hamiltonian = ulg_hamiltonian(graph)
    frames, _, _ = _frames(graph)
    d = graph.d
    W = np.zeros((graph.dim, graph.dim), dtype=complex)
    for vertex, frame in frames.items():
        i = graph.index(vertex) * d
        W[i:i + d, i:i + d] = frame
    laplacian = graph.laplacian()
    target = np.kron(laplacian, np.eye(d))
    residual = float(np.max(np.abs(hamiltonian.conjugate_by(W).entries -
    target)))
    expected = np.sort(np.repeat(np.linalg.eigvalsh(laplacian), d))
    actual = np.sort(np.linalg.eigvalsh(hamiltonian.entries))
    return EquivalenceReport(residual, float(np.max(np.abs(expected - actual))))
