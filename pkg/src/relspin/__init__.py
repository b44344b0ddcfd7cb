"""Spin-momentum entanglement of a single relativistic spin-1/2 particle.

Submodules: ``linalg`` (small dense complex algebra, Jacobi eigensolver),
``kinematics`` (rapidities, Wigner rotation), ``states`` (Bell-type states
and boosts), ``entanglement`` (entropy, concurrence, closed forms),
``gates`` (the boost as a controlled gate), ``verify`` and ``cli``.
"""

from .linalg import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
