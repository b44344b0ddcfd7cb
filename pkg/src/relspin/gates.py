"""The boost as a momentum-controlled spin rotation.

In the basis ``{|p1 up>, |p1 down>, |p2 up>, |p2 down>}`` a boost along x of
momenta along +-z acts as a block rotation of the spin, controlled by the
momentum. :func:`lorentz_gate` stores the matrix in the form in which it is
usually displayed, with row ``k`` listing the image of basis ket ``k``; the
linear map on column vectors is therefore ``ControlledGate.operator``, the
transpose of ``matrix``.

In the limit ``W1 -> 0``, ``W2 -> pi`` the gate becomes

    [[1, 0, 0, 0],
     [0, 1, 0, 0],
     [0, 0, 0, 1],
     [0, 0, -1, 0]]

which flips the spin iff the momentum is ``p2``, like a CNOT up to a sign.
"""

import math
from dataclasses import dataclass

import numpy as np

from .entanglement import concurrence_numeric
from .kinematics import wigner_rotation
from .linalg import make_density

__all__ = [
    "CNOT_LIMIT",
    "ControlledGate",
    "GateDemo",
    "cnot_limit_gate",
    "demo_disentangle",
    "demo_entangle",
    "gate_from_kinematics",
    "kinematic_cnot_search",
    "lorentz_gate",
]

CNOT_LIMIT = np.array(
    [[1, 0, 0, 0],
     [0, 1, 0, 0],
     [0, 0, 0, 1],
     [0, 0, -1, 0]],
    dtype=complex,
)
# rotation axis of the gate blocks for an x-boost and momenta along +-z
GATE_AXIS = np.array([0.0, -1.0, 0.0])


@dataclass(frozen=True)
class ControlledGate:
    omega1: float
    omega2: float
    matrix: np.ndarray

    @property
    def operator(self):
        return self.matrix.T

    def apply(self, state):
        return self.operator @ np.asarray(state, dtype=complex)


def _block(omega):
    c, s = math.cos(omega / 2), math.sin(omega / 2)
    return np.array([[c, s], [-s, c]], dtype=complex)


def lorentz_gate(omega1, omega2):
    m = np.zeros((4, 4), dtype=complex)
    m[:2, :2] = _block(omega1)
    m[2:, 2:] = _block(omega2)
    return ControlledGate(float(omega1), float(omega2), m)


def cnot_limit_gate():
    return ControlledGate(0.0, math.pi, CNOT_LIMIT.copy())


def gate_from_kinematics(boost, geom, tol=1e-12):
    """Gate whose ``operator`` equals the boost, for momenta along +-z and an x-boost."""
    w1 = wigner_rotation(boost, geom.k1)
    w2 = wigner_rotation(boost, geom.k2)
    angles = []
    for w in (w1, w2):
        if w.sin_half == 0.0:
            angles.append(0.0)
            continue
        if abs(abs(np.dot(w.axis, GATE_AXIS)) - 1.0) > tol:
            raise ValueError("gate form needs Wigner axes along y (x-boost, momenta along z)")
        angles.append(w.signed_omega(GATE_AXIS))
    return lorentz_gate(*angles)


@dataclass(frozen=True)
class GateDemo:
    before: np.ndarray
    after: np.ndarray
    expected: np.ndarray
    concurrence_before: float
    concurrence_after: float


def _concurrence(psi):
    return concurrence_numeric(make_density(psi)).concurrence


def _demo(state, gate, expected):
    state = np.asarray(state, dtype=complex)
    state = state / np.linalg.norm(state)
    after = gate.apply(state)
    return GateDemo(state, after, expected, _concurrence(state), _concurrence(after))


def demo_entangle(gate=None, state=None):
    """``(|p1> + |p2>) |up> / sqrt2  ->  (|p1 up> + |p2 down>) / sqrt2`` under the CNOT limit."""
    gate = cnot_limit_gate() if gate is None else gate
    if state is None:
        state = np.array([1, 0, 1, 0]) / math.sqrt(2)
    expected = np.array([1, 0, 0, 1], dtype=complex) / math.sqrt(2)
    return _demo(state, gate, expected)


def demo_disentangle(gate=None, state=None):
    """``(|p1 up> + |p2 down>) / sqrt2  ->  (|p1> - |p2>) |up> / sqrt2`` under the CNOT limit."""
    gate = cnot_limit_gate() if gate is None else gate
    if state is None:
        state = np.array([1, 0, 0, 1]) / math.sqrt(2)
    expected = np.array([1, 0, -1, 0], dtype=complex) / math.sqrt(2)
    return _demo(state, gate, expected)


def kinematic_cnot_search(betas, energy_ratios):
    """Grid search for the kinematic gate closest to the CNOT limit.

    Scans x-boosts and pairs of momenta along +z / -z. Returns
    ``(distance, beta, E1/m, E2/m, theta2)`` with ``distance`` the max-abs
    entry difference to :data:`CNOT_LIMIT`. For momenta perpendicular to the
    boost every Wigner angle stays below pi/2, so the distance never reaches 0.
    """
    from .kinematics import BoostParameters
    from .states import TwoMomentumGeometry

    best = None
    for beta in betas:
        boost = BoostParameters.from_beta(beta)
        for r1 in energy_ratios:
            for r2 in energy_ratios:
                for theta2 in (0.0, math.pi):
                    geom = TwoMomentumGeometry.in_yz_plane(r1, 0.0, r2, theta2)
                    g = gate_from_kinematics(boost, geom)
                    d = float(np.abs(g.matrix - CNOT_LIMIT).max())
                    if best is None or d < best[0]:
                        best = (d, float(beta), float(r1), float(r2), theta2)
    return best
