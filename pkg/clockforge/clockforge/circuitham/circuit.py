from __future__ import annotations
from typing import Iterable, Any
import os
import json
import jsonschema
import numpy as np
from scipy.stats import unitary_group
from ..errors import ValidationError
from .gates import Gate, BUILTIN_GATES

JSON_SCHEMA = json.loads(open(os.path.join(os.path.dirname(__file__),
"circuit_schema.json"), "r").read())

class Circuit:
    """ Ordered list of gates U_1,..,U_T on n qubits """

    def __init__(self, n: int, gates: Iterable[Gate]):
        """ Constructor with the number of qubits and the gates in order of
            application """
        self._n = n
        self._gates = tuple(gates)
        if n < 1:
            raise ValidationError(f"Circuit needs at least one qubit, got n={n}")
        if len(self._gates) < 1:
            raise ValidationError("Circuit needs at least one gate")
        for t, gate in enumerate(self._gates, 1):
            if max(gate.targets) >= n:
                raise ValidationError(f"Gate {t} targets {gate.targets} out of "
                f"range for {n} qubits")

    def __len__(self) -> int:
        return len(self._gates)

    def __repr__(self) -> str:
        """ Canonical representation """
        return f"{self.__class__.__name__}({self._n!r}, {list(self._gates)!r})"

    def __str__(self) -> str:
        return self.to_string()

    @classmethod
    def identity(cls, n: int, T: int) -> Circuit:
        """ Circuit of T identity gates """
        return cls(n, [Gate.named("I", [0]) for _ in range(T)])

    @classmethod
    def random(cls, n: int, T: int, rng: np.random.Generator) -> Circuit:
        """ Random circuit of Haar-random single-qubit gates and, for n >= 2,
            CNOT gates on random qubit pairs """
        gates = []
        for _ in range(T):
            if n >= 2 and rng.random() < 0.3:
                pair = rng.choice(n, size=2, replace=False)
                gates.append(Gate.named("CNOT", [int(q) for q in pair]))
            else:
                unitary = unitary_group.rvs(2, random_state=rng)
                gates.append(Gate(unitary, [int(rng.integers(n))]))
        return cls(n, gates)

    @classmethod
    def from_string(cls, text: str) -> Circuit:
        """ Convert JSON to a Circuit object. Gates are given either by a
            built-in name or by an explicit matrix of [re, im] pairs """
        data = json.loads(text)
        jsonschema.validate(data, JSON_SCHEMA)
        gates = []
        for entry in data["gates"]:
            if "name" in entry:
                gates.append(Gate.named(entry["name"], entry["targets"]))
            else:
                matrix = [[complex(re, im) for re, im in row] for row in
                entry["matrix"]]
                gates.append(Gate(matrix, entry["targets"]))
        return cls(data["n"], gates)

    def to_string(self) -> str:
        """ Convert this circuit to JSON """
        gates: list[dict[str, Any]] = []
        for gate in self._gates:
            if gate.name is not None and gate.name in BUILTIN_GATES:
                gates.append({"name": gate.name, "targets": list(gate.targets)})
            else:
                gates.append({"matrix": [[[float(z.real), float(z.imag)] for z
                in row] for row in gate.unitary], "targets": list(
                gate.targets)})
        return json.dumps({"n": self._n, "gates": gates})

    @property
    def n(self) -> int:
        return self._n

    @property
    def T(self) -> int:
        return len(self._gates)

    @property
    def dim(self) -> int:
        """ Dimension 2^n of the computational register """
        return 2 ** self._n

    @property
    def gates(self) -> tuple[Gate, ...]:
        return self._gates

    def padded(self, left: int, right: int) -> Circuit:
        """ The same circuit with identity gates before and after """
        identity = Gate.named("I", [0])
        return Circuit(self._n, [identity] * left + list(self._gates) + [
        identity] * right)

    def appended(self, *gates: Gate) -> Circuit:
        return Circuit(self._n, list(self._gates) + list(gates))
