"""Rapidities and the spin-1/2 Wigner rotation induced by a pure boost.

For a boost of rapidity ``alpha`` along ``e_hat`` acting on a particle of
rapidity ``delta`` moving along ``p_hat`` the Wigner rotation is

    D = cos(W/2) + i sin(W/2) (sigma . n_hat),       n_hat ~ e_hat x p_hat

    cos(W/2) = [ch(a/2) ch(d/2) + sh(a/2) sh(d/2) (e.p)] / N
    sin(W/2) = sh(a/2) sh(d/2) |e x p| / N
    N**2     = 1/2 + 1/2 ch(a) ch(d) + 1/2 sh(a) sh(d) (e.p)

Everything is evaluated after dividing through by ``exp((alpha + delta)/2)``
so that no hyperbolic function is ever formed explicitly; this keeps the
result finite for ``beta -> 1`` and ``E/m -> inf``.
"""

import math
from dataclasses import dataclass

import numpy as np

from .linalg import I2, SIGMA_X, SIGMA_Y, SIGMA_Z

__all__ = [
    "BoostParameters",
    "DomainError",
    "ParticleKinematics",
    "WignerRotation",
    "rapidity_from_beta",
    "rapidity_from_energy_ratio",
    "wigner_half_angles",
    "wigner_rotation",
    "wigner_unitary",
]

X_HAT = (1.0, 0.0, 0.0)
DEGENERATE_AXIS = np.array([0.0, 0.0, 1.0])
_UNIT_TOL = 1e-12
_CROSS_TOL = 1e-15


class DomainError(ValueError):
    """A kinematic parameter lies outside its physical range."""


def _unit(v, name):
    v = np.asarray(v, dtype=float)
    if v.shape != (3,):
        raise DomainError(f"{name} must be a 3-vector")
    norm = np.linalg.norm(v)
    if norm == 0.0 or not np.isfinite(norm):
        raise DomainError(f"{name} must be a finite non-zero vector")
    return v / norm


def rapidity_from_beta(beta):
    """Rapidity ``alpha`` with ``cosh(alpha) = 1/sqrt(1 - beta**2)``."""
    beta = float(beta)
    if not 0.0 <= beta < 1.0:
        raise DomainError(f"beta must lie in [0, 1), got {beta!r}")
    return math.atanh(beta)


def rapidity_from_energy_ratio(r):
    """Rapidity ``delta`` with ``cosh(delta) = E/m``."""
    r = float(r)
    if not r >= 1.0 or math.isinf(r):
        raise DomainError(f"E/m must be finite and >= 1, got {r!r}")
    t = r - 1.0  # exact for r near 1
    if t > 1e150:
        return math.log(2.0) + math.log(r)
    return math.log1p(t + math.sqrt(t * (t + 2.0)))


@dataclass(frozen=True)
class BoostParameters:
    """Observer boost: speed ``beta``, rapidity ``alpha``, unit direction ``e_hat``."""

    beta: float
    alpha: float
    e_hat: tuple

    @classmethod
    def from_beta(cls, beta, e_hat=X_HAT):
        e = _unit(e_hat, "e_hat")
        return cls(float(beta), rapidity_from_beta(beta), tuple(e))

    @classmethod
    def from_rapidity(cls, alpha, e_hat=X_HAT):
        if not alpha >= 0.0 or math.isinf(alpha):
            raise DomainError(f"rapidity must be finite and >= 0, got {alpha!r}")
        e = _unit(e_hat, "e_hat")
        return cls(math.tanh(alpha), float(alpha), tuple(e))

    @property
    def gamma(self):
        return math.cosh(self.alpha)


@dataclass(frozen=True)
class ParticleKinematics:
    """One momentum eigenstate: ``E/m``, rapidity, unit direction, yz-plane angle.

    ``theta`` is measured from the z axis towards y, so that
    ``p_hat = (0, sin(theta), cos(theta))`` for momenta in the yz-plane.
    """

    energy_ratio: float
    delta: float
    p_hat: tuple
    theta: float

    @classmethod
    def in_yz_plane(cls, energy_ratio, theta):
        theta = float(theta)
        p = (0.0, math.sin(theta), math.cos(theta))
        return cls(float(energy_ratio), rapidity_from_energy_ratio(energy_ratio), p, theta)

    @classmethod
    def along(cls, energy_ratio, p_hat):
        p = _unit(p_hat, "p_hat")
        theta = math.atan2(p[1], p[2])
        return cls(float(energy_ratio), rapidity_from_energy_ratio(energy_ratio), tuple(p), theta)


def wigner_unitary(w):
    """``cos(W/2) I + i sin(W/2) (sigma . n_hat)`` for a :class:`WignerRotation`."""
    nx, ny, nz = w.axis
    sn = nx * SIGMA_X + ny * SIGMA_Y + nz * SIGMA_Z
    return w.cos_half * I2 + 1j * w.sin_half * sn


@dataclass(frozen=True)
class WignerRotation:
    cos_half: float
    sin_half: float
    axis: tuple
    omega: float

    @property
    def unitary(self):
        return wigner_unitary(self)

    def signed_omega(self, reference_axis):
        """Rotation angle with its sign taken relative to ``reference_axis``.

        Only meaningful when the axis is (anti)parallel to the reference, as
        for momenta that are collinear in a plane perpendicular to the boost.
        """
        return self.omega if np.dot(self.axis, reference_axis) >= 0.0 else -self.omega


def wigner_half_angles(alpha, delta, e_dot_p, cross_norm=None):
    """Vectorized ``(cos(W/2), sin(W/2))``; broadcasts over all arguments.

    ``cross_norm`` defaults to ``sqrt(1 - e_dot_p**2)``.
    """
    alpha = np.asarray(alpha, dtype=float)
    delta = np.asarray(delta, dtype=float)
    c = np.clip(np.asarray(e_dot_p, dtype=float), -1.0, 1.0)
    if cross_norm is None:
        cross_norm = np.sqrt((1.0 - c) * (1.0 + c))
    x = np.exp(-alpha)
    y = np.exp(-delta)
    one_minus_x = -np.expm1(-alpha)
    one_minus_y = -np.expm1(-delta)
    num_cos = 0.25 * ((1.0 + c) * (1.0 + x * y) + (1.0 - c) * (x + y))
    num_sin = 0.25 * one_minus_x * one_minus_y * cross_norm
    den2 = 0.5 * x * y + 0.125 * ((1.0 + c) * (1.0 + (x * y) ** 2) + (1.0 - c) * (x * x + y * y))
    den = np.sqrt(den2)
    return num_cos / den, num_sin / den


def wigner_rotation(boost, particle):
    """Wigner rotation of a spin-1/2 particle seen from a boosted frame.

    Works for arbitrary ``e_hat . p_hat``. ``sin_half`` is kept non-negative and
    the orientation lives in ``axis``; if ``e_hat x p_hat`` vanishes the
    rotation is the identity and the axis is set to ``(0, 0, 1)``.
    """
    e = np.asarray(boost.e_hat, dtype=float)
    p = np.asarray(particle.p_hat, dtype=float)
    cross = np.cross(e, p)
    cross_norm = float(np.linalg.norm(cross))
    if cross_norm < _CROSS_TOL:
        return WignerRotation(1.0, 0.0, tuple(DEGENERATE_AXIS), 0.0)
    cos_half, sin_half = wigner_half_angles(boost.alpha, particle.delta, float(e @ p), cross_norm)
    cos_half, sin_half = float(cos_half), float(sin_half)
    omega = 2.0 * math.atan2(sin_half, cos_half)
    return WignerRotation(cos_half, sin_half, tuple(cross / cross_norm), omega)
