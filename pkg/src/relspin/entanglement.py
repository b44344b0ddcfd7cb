"""Entanglement measures for the 2 (x) 2 spin-momentum system.

Concurrence is computed three ways:

* ``numeric-R``: spectrum of ``R = sqrt(sqrt(rho) rho~ sqrt(rho))``. Since
  ``R = (M M^H)^(1/2)`` with ``M = sqrt(rho) (sy x sy) sqrt(rho)^*``, its
  eigenvalues are the singular values of ``M``; those are read off the
  Hermitian dilation ``[[0, M], [M^H, 0]]`` so no square root of a tiny
  eigenvalue is ever taken.
* ``numeric-rho-rho-tilde``: square roots of the (non-Hermitian) eigenvalues
  of ``rho rho~``.
* ``closed-form``: the A/B/C/D expressions for boosted Bell-diagonal states.
"""

import math
from dataclasses import dataclass

import numpy as np

from .linalg import SIGMA_Y, dagger, hermitian_eig, psd_sqrt, validate_density

__all__ = [
    "ClosedFormDomainError",
    "ConcurrenceBreakdown",
    "ConsistencyError",
    "DifferenceIdentities",
    "IdentityViolation",
    "bd_boosted_concurrence_closed_form",
    "bd_boosted_lambdas",
    "bd_rest_concurrence",
    "binary_entropy",
    "chain_inequality",
    "concurrence_from_lambdas",
    "concurrence_numeric",
    "concurrence_rho_rho_tilde",
    "difference_identities",
    "entanglement_of_formation",
    "pure_reduced_spin_eigs_closed_form",
    "pure_state_concurrence",
    "spin_flip",
    "von_neumann_entropy",
    "wootters_lambdas",
    "wootters_r_matrix",
]

SYSY = np.kron(SIGMA_Y, SIGMA_Y)
RADICAND_TOL = 1e-10
CROSS_CHECK_AGREE = 1e-8
CROSS_CHECK_FAIL = 1e-6
IDENTITY_TOL = 1e-9


class ConsistencyError(RuntimeError):
    """Two numerical routes to the same quantity disagree."""


class ClosedFormDomainError(ArithmeticError):
    """A closed-form radicand is negative beyond roundoff."""


class IdentityViolation(AssertionError):
    """A claimed algebraic identity does not hold numerically."""


@dataclass(frozen=True)
class ConcurrenceBreakdown:
    lambdas: tuple
    concurrence: float
    method: str
    cross_check_residual: float = float("nan")


def _checked_sqrt(x, what):
    if x < -RADICAND_TOL:
        raise ClosedFormDomainError(f"negative radicand {x:.3e} in {what}")
    return math.sqrt(max(x, 0.0))


def binary_entropy(x):
    """``H(x) = -x log2 x - (1-x) log2 (1-x)`` with ``0 log 0 = 0``."""
    x = float(x)
    h = 0.0
    for q in (x, 1.0 - x):
        if q > 0.0:
            h -= q * math.log2(q)
    return h


def von_neumann_entropy(rho):
    """Entropy in bits of a density matrix."""
    rho = validate_density(rho)
    w, _ = hermitian_eig(rho)
    w = w[w > 0.0]
    return float(max(0.0, -np.sum(w * np.log2(w))))


def entanglement_of_formation(c):
    """``H((1 + sqrt(1 - C^2)) / 2)`` for a two-qubit concurrence ``C``."""
    c = float(c)
    if c < -1e-12 or c > 1.0 + 1e-12:
        raise ValueError(f"concurrence must lie in [0, 1], got {c!r}")
    c = min(max(c, 0.0), 1.0)
    return binary_entropy(0.5 * (1.0 + math.sqrt((1.0 - c) * (1.0 + c))))


def pure_reduced_spin_eigs_closed_form(l1, l2, phi, omega1, omega2):
    """Eigenvalues ``(eta1 <= eta2)`` of the reduced spin state of a boosted Schmidt state.

    ``phi`` is the spin-momentum angle and ``omega1``, ``omega2`` are Wigner
    angles signed about a common axis.
    """
    disc = (
        l1 * l1 + l2 * l2
        + l1 * l2 * (math.cos(2 * phi) - 2 * math.cos(phi) ** 2 * math.cos(omega1 - omega2) - 1.0)
    )
    root = _checked_sqrt(disc, "reduced spin eigenvalues")
    return 0.5 * (l1 + l2 - root), 0.5 * (l1 + l2 + root)


def spin_flip(rho):
    """``(sy x sy) rho^* (sy x sy)``."""
    return SYSY @ np.conj(rho) @ SYSY


def wootters_r_matrix(rho):
    s = psd_sqrt(rho)
    return psd_sqrt(s @ spin_flip(rho) @ s)


def concurrence_from_lambdas(lambdas):
    lam = sorted(lambdas, reverse=True)
    return max(0.0, lam[0] - lam[1] - lam[2] - lam[3])


def wootters_lambdas(rho):
    """Eigenvalues of ``R`` in descending order (via singular values of ``M``)."""
    s = psd_sqrt(rho)
    m = s @ SYSY @ np.conj(s)
    dil = np.zeros((8, 8), dtype=complex)
    dil[:4, 4:] = m
    dil[4:, :4] = dagger(m)
    w, _ = hermitian_eig(dil)
    return tuple(float(max(x, 0.0)) for x in w[:4])


def _rho_rho_tilde_eigs(rho):
    mu = np.linalg.eigvals(rho @ spin_flip(rho)).real
    return np.sort(np.clip(mu, 0.0, None))[::-1]


def concurrence_rho_rho_tilde(rho):
    rho = validate_density(rho)
    lam = tuple(float(x) for x in np.sqrt(_rho_rho_tilde_eigs(rho)))
    return ConcurrenceBreakdown(lam, concurrence_from_lambdas(lam), "numeric-rho-rho-tilde")


def concurrence_numeric(rho):
    """Wootters concurrence with an internal cross-check against ``eig(rho rho~)``.

    The two routes are compared on the squared values ``lambda_i^2`` because
    ``rho rho~`` is typically defective for pure states, where square roots
    would magnify an ``O(1e-16)`` eigenvalue error to ``O(1e-8)``.
    """
    rho = validate_density(rho)
    lam = wootters_lambdas(rho)
    residual = float(np.abs(np.square(lam) - _rho_rho_tilde_eigs(rho)).max())
    if residual > CROSS_CHECK_FAIL:
        raise ConsistencyError(f"R-spectrum and rho*rho~ spectrum differ by {residual:.3e}")
    return ConcurrenceBreakdown(lam, concurrence_from_lambdas(lam), "numeric-R", residual)


def pure_state_concurrence(psi):
    """``|<psi| sy x sy |psi^*>|`` for a normalized pure state."""
    psi = np.asarray(psi, dtype=complex)
    return float(abs(psi @ SYSY @ psi))


def bd_rest_concurrence(mix):
    p = mix.sorted_desc()
    return max(0.0, p[0] - p[1] - p[2] - p[3])


def _pair_lambdas(pa, pb, phi, omega):
    cp2 = math.cos(phi) ** 2
    c2p = math.cos(2 * phi)
    cw = math.cos(omega)
    d2 = (pa - pb) ** 2
    a = 3 * pa * pa + 3 * pb * pb - (pa * pa + pb * pb) * c2p
    b = 2 * cp2 * (2 * pa * pb + d2 * cw)
    c = d2 * (-3 + c2p - 2 * cp2 * cw)
    d = -(3 * pa + pb) * (pa + 3 * pb) + d2 * (c2p - 2 * cp2 * cw)
    root = _checked_sqrt(c * d, "C*D")
    scale = 1.0 / (2.0 * math.sqrt(2.0))
    return (
        scale * _checked_sqrt(a + b - root, "A+B-sqrt(CD)"),
        scale * _checked_sqrt(a + b + root, "A+B+sqrt(CD)"),
    )


def bd_boosted_lambdas(mix, phi, omega):
    """Unsorted ``(l1, l2, l3, l4)``: ``l1 <= l2`` from ``(P2, P3)``, ``l3 <= l4`` from ``(P1, P4)``.

    ``omega`` is the relative Wigner angle of the two momenta.
    """
    p1, p2, p3, p4 = mix.p
    return _pair_lambdas(p2, p3, phi, omega) + _pair_lambdas(p1, p4, phi, omega)


def bd_boosted_concurrence_closed_form(mix, phi, omega):
    lam = tuple(sorted(bd_boosted_lambdas(mix, phi, omega), reverse=True))
    return ConcurrenceBreakdown(lam, concurrence_from_lambdas(lam), "closed-form")


@dataclass(frozen=True)
class DifferenceIdentities:
    """``(l1-l2)^2, (l1+l2)^2, (l3-l4)^2, (l3+l4)^2`` from the lambdas and from the identities."""

    from_lambdas: tuple
    from_identities: tuple

    @property
    def residual(self):
        return max(abs(a - b) for a, b in zip(self.from_lambdas, self.from_identities))


def difference_identities(mix, phi, omega, strict=True):
    l1, l2, l3, l4 = bd_boosted_lambdas(mix, phi, omega)
    p1, p2, p3, p4 = mix.p
    k = math.cos(phi) ** 2 * math.sin(omega / 2) ** 2
    ident = (
        (p2 - p3) ** 2 * (1 - k),
        (p2 + p3) ** 2 - (p2 - p3) ** 2 * k,
        (p1 - p4) ** 2 * (1 - k),
        (p1 + p4) ** 2 - (p1 - p4) ** 2 * k,
    )
    lam = ((l1 - l2) ** 2, (l1 + l2) ** 2, (l3 - l4) ** 2, (l3 + l4) ** 2)
    out = DifferenceIdentities(lam, ident)
    if strict and out.residual > IDENTITY_TOL:
        raise IdentityViolation(
            f"sum/difference identities violated by {out.residual:.3e} "
            f"at P={mix.p}, phi={phi!r}, omega={omega!r}"
        )
    return out


def chain_inequality(mix, phi, omega):
    """``(lhs, rhs, guaranteed)`` for ``(l3 - l4) - (l1 + l2) <= P1 - P4 - P2 - P3``.

    ``l3 - l4`` is taken as the non-negative gap of the ``(P1, P4)`` pair. The
    bound is only implied by the derivation when ``P1 >= P4`` and the right-hand
    side is non-negative; ``guaranteed`` flags that region.
    """
    l1, l2, l3, l4 = bd_boosted_lambdas(mix, phi, omega)
    p1, p2, p3, p4 = mix.p
    lhs = abs(l4 - l3) - (l1 + l2)
    rhs = p1 - p4 - p2 - p3
    return lhs, rhs, (p1 >= p4 and rhs >= 0.0)
