"""Spin (x) momentum states of one particle and their transformation under boosts.

Two momentum eigenstates ``|p1>, |p2>`` span the momentum factor; the boost
maps them onto ``|L p1>, |L p2>``, which are treated as an orthonormal pair,
so that on this 4-dimensional space the boost is the block-diagonal unitary
``diag(D(W(L, p1)), D(W(L, p2)))``. The ``sqrt((L p)^0 / p^0)`` factor of the
infinite-dimensional representation is absorbed into that relabeling.
"""

import math
from dataclasses import dataclass

import numpy as np

from .kinematics import ParticleKinematics, wigner_rotation
from .linalg import dagger, make_density, tensor_product

__all__ = [
    "BellMixture",
    "SpinOrientation",
    "TwoMomentumGeometry",
    "bd_density",
    "bell_states",
    "bloch_spinors",
    "boost_density",
    "boost_operator",
    "boost_state",
    "relative_wigner_angle",
    "schmidt_pure_state",
    "signed_wigner_angles",
    "spin_momentum_angle",
    "transcribed_boosted_bell_states",
    "transcription_mismatch",
]

KET_P1 = np.array([1.0, 0.0], dtype=complex)
KET_P2 = np.array([0.0, 1.0], dtype=complex)


@dataclass(frozen=True)
class SpinOrientation:
    """Bloch angles of ``|n>``: polar ``xi`` and azimuth ``tau`` (radians)."""

    xi: float
    tau: float = math.pi / 2

    def canonical(self):
        """Same Bloch direction with ``xi`` in [0, pi] and ``tau`` in [0, 2 pi)."""
        xi = math.fmod(self.xi, 2 * math.pi)
        tau = self.tau
        if xi < 0:
            xi = -xi
            tau += math.pi
        if xi > math.pi:
            xi = 2 * math.pi - xi
            tau += math.pi
        return SpinOrientation(xi, tau % (2 * math.pi))

    @property
    def bloch_vector(self):
        return np.array([
            math.sin(self.xi) * math.cos(self.tau),
            math.sin(self.xi) * math.sin(self.tau),
            math.cos(self.xi),
        ])


@dataclass(frozen=True)
class BellMixture:
    """Weights ``(P1, P2, P3, P4)`` of the four Bell-type states."""

    p: tuple

    def __post_init__(self):
        p = tuple(float(x) for x in self.p)
        if len(p) != 4:
            raise ValueError("a Bell mixture needs exactly four weights")
        if min(p) < 0.0 or abs(sum(p) - 1.0) > 1e-12:
            raise ValueError(f"weights must be non-negative and sum to 1, got {p}")
        object.__setattr__(self, "p", p)

    @classmethod
    def parse(cls, text):
        """Parse ``"P1,P2,P3,P4"``."""
        return cls(tuple(float(x) for x in text.split(",")))

    def sorted_desc(self):
        return tuple(sorted(self.p, reverse=True))


@dataclass(frozen=True)
class TwoMomentumGeometry:
    k1: ParticleKinematics
    k2: ParticleKinematics

    @classmethod
    def in_yz_plane(cls, energy_ratio, theta, energy_ratio2=None, theta2=None):
        """Both momenta in the yz-plane; by default ``p2`` is antiparallel to ``p1``
        with the same ``E/m``."""
        if energy_ratio2 is None:
            energy_ratio2 = energy_ratio
        if theta2 is None:
            theta2 = theta + math.pi
        return cls(
            ParticleKinematics.in_yz_plane(energy_ratio, theta),
            ParticleKinematics.in_yz_plane(energy_ratio2, theta2),
        )

    def is_collinear(self, tol=1e-12):
        return float(np.linalg.norm(np.cross(self.k1.p_hat, self.k2.p_hat))) < tol

    def in_yz(self, tol=1e-12):
        return abs(self.k1.p_hat[0]) < tol and abs(self.k2.p_hat[0]) < tol


def bloch_spinors(s):
    """``(|n>, |-n>)`` for the Bloch direction ``s``."""
    c, sn = math.cos(s.xi / 2), math.sin(s.xi / 2)
    ph = complex(math.cos(s.tau), math.sin(s.tau))
    n = np.array([c, ph * sn], dtype=complex)
    minus_n = np.array([sn, -ph * c], dtype=complex)
    return n, minus_n


def bell_states(s):
    """The four Bell-type states as the rows of a 4x4 array.

    psi1,2 = (|p1>|n> +- |p2>|-n>)/sqrt2,  psi3,4 = (|p2>|n> +- |p1>|-n>)/sqrt2
    """
    n, m = bloch_spinors(s)
    a = tensor_product(KET_P1, n)
    b = tensor_product(KET_P2, m)
    c = tensor_product(KET_P2, n)
    d = tensor_product(KET_P1, m)
    return np.array([a + b, a - b, c + d, c - d]) / math.sqrt(2.0)


def bd_density(mix, s):
    return make_density(bell_states(s), mix.p)


def schmidt_pure_state(l1, l2, s):
    """``sqrt(l1) |n>|p1> + sqrt(l2) |-n>|p2>`` in the momentum-first ordering."""
    if l1 < 0 or l2 < 0 or abs(l1 + l2 - 1.0) > 1e-12:
        raise ValueError(f"Schmidt weights must be non-negative and sum to 1, got ({l1}, {l2})")
    n, m = bloch_spinors(s)
    return math.sqrt(l1) * tensor_product(KET_P1, n) + math.sqrt(l2) * tensor_product(KET_P2, m)


def boost_operator(boost, geom):
    u = np.zeros((4, 4), dtype=complex)
    u[:2, :2] = wigner_rotation(boost, geom.k1).unitary
    u[2:, 2:] = wigner_rotation(boost, geom.k2).unitary
    return u


def boost_state(psi, boost, geom):
    return boost_operator(boost, geom) @ np.asarray(psi, dtype=complex)


def boost_density(rho, boost, geom):
    u = boost_operator(boost, geom)
    out = u @ np.asarray(rho, dtype=complex) @ dagger(u)
    return 0.5 * (out + dagger(out))


def spin_momentum_angle(s, geom):
    """``phi = xi - theta``: angle between spin direction and ``p1``."""
    return s.xi - geom.k1.theta


def signed_wigner_angles(boost, geom):
    """``(W1, W2)`` with both angles signed relative to the rotation axis of ``p1``.

    For collinear momenta in the plane perpendicular to the boost the two
    rotations share an axis (up to sign) and the spin dynamics only depends on
    the relative angle ``W1 - W2``.
    """
    w1 = wigner_rotation(boost, geom.k1)
    w2 = wigner_rotation(boost, geom.k2)
    return w1.omega, w2.signed_omega(w1.axis)


def relative_wigner_angle(boost, geom):
    """``W1 - W2`` (signed); equals ``W1 + W2`` of the unsigned angles for antiparallel momenta."""
    o1, o2 = signed_wigner_angles(boost, geom)
    return o1 - o2


def transcribed_boosted_bell_states(xi, theta, omega1, omega2, literal=True):
    """The boosted Bell states written out component by component.

    Assumes an x-boost, yz-plane momenta with ``p2`` antiparallel to ``p1``,
    ``tau = pi/2`` and unsigned Wigner angles. With ``literal=True`` the
    ``p2``-branch of psi1/psi2 carries ``sin(W1/2)`` in its upper component,
    as in the commonly quoted written-out form; ``literal=False`` uses
    ``sin(W2/2)``, which is what the transformation law gives.
    """
    cx, sx = math.cos(xi / 2), math.sin(xi / 2)
    zeta = xi - 2 * theta
    cz, sz = math.cos(zeta / 2), math.sin(zeta / 2)
    c1, s1 = math.cos(omega1 / 2), math.sin(omega1 / 2)
    c2, s2 = math.cos(omega2 / 2), math.sin(omega2 / 2)
    s_typo = s1 if literal else s2

    up1_n = np.array([cx * c1 - 1j * s1 * sz, 1j * sx * c1 + s1 * cz])
    up2_m = np.array([sx * c2 - 1j * s_typo * cz, -1j * cx * c2 - s2 * sz])
    up2_n = np.array([cx * c2 + 1j * s2 * sz, 1j * sx * c2 - s2 * cz])
    up1_m = np.array([sx * c1 + 1j * s1 * cz, -1j * cx * c1 + s1 * sz])

    a = tensor_product(KET_P1, up1_n)
    b = tensor_product(KET_P2, up2_m)
    c = tensor_product(KET_P2, up2_n)
    d = tensor_product(KET_P1, up1_m)
    return np.array([a + b, a - b, c + d, c - d]) / math.sqrt(2.0)


def transcription_mismatch(s, boost, geom, literal=True):
    """Per-state max deviation between the computed boost and the written-out states."""
    w1 = wigner_rotation(boost, geom.k1)
    w2 = wigner_rotation(boost, geom.k2)
    computed = bell_states(s) @ boost_operator(boost, geom).T
    written = transcribed_boosted_bell_states(s.xi, geom.k1.theta, w1.omega, w2.omega, literal)
    return np.abs(computed - written).max(axis=1)
