"""Brute-force Pauli-propagation oracle for distillation unit error models.

Each Bell pair is |Phi+>. A Pauli error on a pair is placed on its B half
(any error on the A half is equivalent up to sign). Both halves run the
same Clifford circuit; a check fails when the two sides' measurement
outcomes disagree, i.e. when the combined Pauli frame anticommutes with the
measured observable. Signs are irrelevant for this bookkeeping, so frames are
tracked as (x, z) bit pairs.

Input errors are weighted the way the published table does: a pattern with
errors on k pairs contributes the product of their error probabilities, and
clean pairs contribute 1. ``exact=True`` weights clean pairs with
``1 - px - py - pz`` instead, which makes the outcome probabilities sum to 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..polynomial import Polynomial
from .units import UnitErrorModel, UnitKind

PAULIS = ("X", "Y", "Z")
_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_VAR = {"X": "px", "Y": "py", "Z": "pz"}


@dataclass
class Frame:
    """Pauli frame on ``n`` qubits as x and z bitmasks."""

    n: int
    x: int = 0
    z: int = 0

    def copy(self) -> "Frame":
        return Frame(self.n, self.x, self.z)

    def apply(self, q: int, pauli: str) -> None:
        bx, bz = _BITS[pauli]
        self.x ^= bx << q
        self.z ^= bz << q

    def bits(self, q: int) -> tuple[int, int]:
        return (self.x >> q) & 1, (self.z >> q) & 1

    def cx(self, c: int, t: int) -> None:
        if (self.x >> c) & 1:
            self.x ^= 1 << t
        if (self.z >> t) & 1:
            self.z ^= 1 << c

    def h(self, q: int) -> None:
        bx, bz = self.bits(q)
        if bx != bz:
            self.x ^= 1 << q
            self.z ^= 1 << q

    def s(self, q: int) -> None:
        # S and S^dagger act identically up to sign: X <-> Y, Z fixed.
        if (self.x >> q) & 1:
            self.z ^= 1 << q

    def anticommutes(self, q: int, basis: str) -> bool:
        bx, bz = self.bits(q)
        mx, mz = _BITS[basis]
        return (bx & mz) ^ (bz & mx) == 1


@dataclass
class CheckCircuit:
    """Bilateral check circuit: Clifford gates then single-qubit measurements.

    Qubit ``kept`` carries the output pair; ``measure`` lists
    (qubit, basis) for the sacrificial qubits.
    """

    n: int
    gates: list[tuple] = field(default_factory=list)
    measure: list[tuple[int, str]] = field(default_factory=list)
    kept: int = 0
    post: list[tuple] = field(default_factory=list)

    def run(self, frame: Frame, fault: tuple | None = None) -> Frame:
        """Propagate ``frame``; ``fault`` = (op index, qubit, Pauli) is
        injected right after that op."""
        for i, op in enumerate(self.gates + self.post):
            _apply_gate(frame, op)
            if fault is not None and fault[0] == i:
                frame.apply(fault[1], fault[2])
        return frame


def _apply_gate(frame: Frame, op: tuple) -> None:
    name = op[0]
    if name == "cx":
        frame.cx(op[1], op[2])
    elif name == "h":
        frame.h(op[1])
    elif name == "s":
        frame.s(op[1])
    else:
        raise ValueError(f"unknown gate {name}")


def repetition_circuit(kind: UnitKind) -> CheckCircuit:
    """Two-pair repetition check. Qubit 0 is kept, qubit 1 is sacrificed."""
    if kind is UnitKind.REPETITION_Z:
        # stabilizer ZZ: kept controls sacrificial, read sacrificial in Z
        return CheckCircuit(2, gates=[("cx", 0, 1)], measure=[(1, "Z")])
    if kind is UnitKind.REPETITION_X:
        # stabilizer XX: sacrificial controls kept, read sacrificial in X
        return CheckCircuit(2, gates=[("cx", 1, 0)], measure=[(1, "X")])
    if kind is UnitKind.REPETITION_Y:
        # conjugate the XX check by S on both qubits
        return CheckCircuit(2, gates=[("s", 0), ("s", 1), ("cx", 1, 0)],
                            measure=[(1, "X")], post=[("s", 0)])
    raise ValueError(f"{kind} is not a repetition unit")


# [[5,1,3]] perfect code: cyclic shifts of XZZXI, logical XXXXX / ZZZZZ.
FIVE_QUBIT_STABILIZERS = ("XZZXI", "IXZZX", "XIXZZ", "ZXIXZ")
FIVE_QUBIT_LOGICAL_X = "XXXXX"
FIVE_QUBIT_LOGICAL_Z = "ZZZZZ"


def _frame_from_string(s: str) -> Frame:
    f = Frame(len(s))
    for q, ch in enumerate(s):
        if ch != "I":
            f.apply(q, ch)
    return f


def _symplectic(a: Frame, b: Frame) -> int:
    return (bin(a.x & b.z).count("1") + bin(a.z & b.x).count("1")) % 2


def _classify_two_sided(circ: CheckCircuit, side_a: Frame, side_b: Frame) -> str:
    for q, basis in circ.measure:
        if side_a.anticommutes(q, basis) != side_b.anticommutes(q, basis):
            return "reject"
    bx = ((side_a.x ^ side_b.x) >> circ.kept) & 1
    bz = ((side_a.z ^ side_b.z) >> circ.kept) & 1
    return {(0, 0): "clean", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}[(bx, bz)]


def classify_repetition(kind: UnitKind, pattern: dict[int, str]) -> str:
    """Outcome of a repetition check given input errors ``{pair: Pauli}``."""
    circ = repetition_circuit(kind)
    side_b = Frame(circ.n)
    for q, pl in pattern.items():
        side_b.apply(q, pl)
    circ.run(side_b)
    side_a = circ.run(Frame(circ.n))
    return _classify_two_sided(circ, side_a, side_b)


def classify_five_qubit(pattern: dict[int, str]) -> str:
    """Outcome of the bilateral [[5,1,3]] syndrome comparison."""
    err = Frame(5)
    for q, pl in pattern.items():
        err.apply(q, pl)
    for stab in FIVE_QUBIT_STABILIZERS:
        if _symplectic(err, _frame_from_string(stab)):
            return "reject"
    flips_z = _symplectic(err, _frame_from_string(FIVE_QUBIT_LOGICAL_Z))
    flips_x = _symplectic(err, _frame_from_string(FIVE_QUBIT_LOGICAL_X))
    return {(0, 0): "clean", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}[(flips_z, flips_x)]


def n_pairs(kind: UnitKind) -> int:
    return 5 if kind is UnitKind.FIVE_QUBIT_PERFECT else 2


def classify(kind: UnitKind, pattern: dict[int, str]) -> str:
    if kind is UnitKind.FIVE_QUBIT_PERFECT:
        return classify_five_qubit(pattern)
    return classify_repetition(kind, pattern)


def _monomial(letters: tuple[str, ...]) -> Polynomial:
    out = Polynomial.constant(1.0)
    for pl in letters:
        out = out * Polynomial.variable(_VAR[pl])
    return out


def enumerate_outcomes(kind: UnitKind, order: int, exact: bool = False
                       ) -> dict[str, Polynomial]:
    """Polynomials for each outcome class from input errors up to ``order``.

    Keys: ``reject``, ``clean``, ``X``, ``Y``, ``Z``.
    """
    n = n_pairs(kind)
    if not 0 <= order <= n:
        raise ValueError(f"order must be in [0, {n}] for {kind.value}")
    clean_weight = (Polynomial.constant(1.0)
                    - Polynomial.variable("px") - Polynomial.variable("py")
                    - Polynomial.variable("pz"))
    acc = {k: Polynomial() for k in ("reject", "clean", "X", "Y", "Z")}
    for k in range(order + 1):
        for sites in itertools.combinations(range(n), k):
            for letters in itertools.product(PAULIS, repeat=k):
                outcome = classify(kind, dict(zip(sites, letters)))
                weight = _monomial(letters)
                if exact:
                    for _ in range(n - k):
                        weight = weight * clean_weight
                acc[outcome] = acc[outcome] + weight
    return acc


def clifford_fault_terms(kind: UnitKind) -> dict[str, Polynomial]:
    """First-order Clifford-fault contributions for a repetition unit.

    One fault at a time: after each gate, on each qubit it touches, on either
    side, one of X/Y/Z with probability p/3; measurement faults are X/Y/Z with
    probability p/3 just before readout.
    """
    if not kind.is_repetition:
        raise ValueError("Clifford-fault enumeration is only modelled for repetition units")
    circ = repetition_circuit(kind)
    acc = {k: Polynomial() for k in ("reject", "clean", "X", "Y", "Z")}
    third = Polynomial.variable("p").scale(1.0 / 3.0)
    ops = circ.gates + circ.post
    locations = [(i, q) for i, op in enumerate(ops) for q in op[1:]]
    meas_index = len(circ.gates) - 1
    locations += [(meas_index, q) for q, _ in circ.measure]
    for side in ("A", "B"):
        for gate_index, q in locations:
            for pl in PAULIS:
                fa = circ.run(Frame(circ.n), (gate_index, q, pl) if side == "A" else None)
                fb = circ.run(Frame(circ.n), (gate_index, q, pl) if side == "B" else None)
                outcome = _classify_two_sided(circ, fa, fb)
                acc[outcome] = acc[outcome] + third
    return acc


def enumerate_unit_model(kind: UnitKind, order: int,
                         include_clifford: bool = True) -> UnitErrorModel:
    """Re-derive a unit's error model by exhaustive Pauli enumeration.

    The 5Q unit needs ``order=3`` to reach its leading undetected terms.
    Clifford (``p``) terms come from :func:`clifford_fault_terms` and exist
    only for repetition units.
    """
    outcomes = enumerate_outcomes(kind, order)
    if include_clifford and kind.is_repetition:
        faults = clifford_fault_terms(kind)
        outcomes = {k: outcomes[k] + faults[k] for k in outcomes}
    return UnitErrorModel(rejection=outcomes["reject"], out_x=outcomes["X"],
                          out_y=outcomes["Y"], out_z=outcomes["Z"])
