"""Spin transport of a uniformly accelerated spin-1/2 particle.

Each proper-time step deta of accelerated motion boosts the momentum and
drags the spin through a little-group element.  Two independent routes are
provided: a closed-form 2x2 spin map built from the kinematic coefficients
(A, B), and an oracle composing standard boosts exp(phi sigma1 / 2) --
inverse standard boost at the displaced momentum, frame boost of rapidity
-deta, standard boost at the original momentum.  The closed-form map is not
unitary; its unitarity defect is measured and attached rather than hidden.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

SIGMA1 = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
IDENTITY2 = np.eye(2, dtype=complex)

MASS_SHELL_TOL = 1e-12

_REST_FRAME_ERROR = "K/k1 singular at rest frame; take delta -> 0+ limit externally"


@dataclass(frozen=True)
class MomentumState:
    """On-shell kinematics of a massive particle boosted along x.

    boost_parameter is sqrt((energy - mass)/(energy + mass)), identically
    tanh(rapidity/2); it controls how strongly boosts mix the spin.
    """

    mass: float
    rapidity: float
    energy: float
    momentum: float
    boost_parameter: float


def kinematics(mass: float, rapidity: float) -> MomentumState:
    if not mass > 0:
        raise ValueError(f"mass must be positive, got {mass}")
    if rapidity < 0:
        raise ValueError(f"rapidity must be >= 0, got {rapidity}")
    energy = mass * math.cosh(rapidity)
    momentum = mass * math.sinh(rapidity)
    k = math.sqrt((energy - mass) / (energy + mass))
    shell = abs(energy * energy - momentum * momentum - mass * mass)
    if shell > MASS_SHELL_TOL * max(1.0, energy * energy):
        raise ArithmeticError(f"mass-shell violation {shell:.3e}")
    return MomentumState(mass, rapidity, energy, momentum, k)


@dataclass(frozen=True)
class SpinorMatrix:
    """2x2 spin-1/2 map with its measured unitarity defect max|D^dag D - I|."""

    matrix: np.ndarray
    unitarity_defect: float


def _spinor(matrix: np.ndarray) -> SpinorMatrix:
    m = np.asarray(matrix, dtype=complex)
    defect = float(np.max(np.abs(m.conj().T @ m - IDENTITY2)))
    return SpinorMatrix(m, defect)


def wigner_coefficients(p: MomentumState, deta: float) -> tuple[float, float]:
    """Coefficient pair (a, b) of the closed-form spin map.

    a = 1 - K^2 deta / ((1 - K^2) m k1), b = K deta / ((1 - K^2) m k1) with
    K the boost parameter and k1 the spatial momentum.
    """
    if p.momentum == 0 or p.rapidity == 0:
        raise ValueError(_REST_FRAME_ERROR)
    if deta < 0:
        raise ValueError(f"deta must be >= 0, got {deta}")
    k = p.boost_parameter
    denom = (1.0 - k * k) * p.mass * p.momentum
    return 1.0 - k * k * deta / denom, k * deta / denom


def wigner_matrix(p: MomentumState, deta: float) -> SpinorMatrix:
    """Closed-form spin map for one step deta of accelerated motion.

    D = (a cosh(deta/2) + b sinh(deta/2)) I - (a sinh(deta/2) + b cosh(deta/2)) sigma1.
    Real, symmetric, in the span of {I, sigma1}; det D = a^2 - b^2.
    """
    a, b = wigner_coefficients(p, deta)
    ch = math.cosh(0.5 * deta)
    sh = math.sinh(0.5 * deta)
    return _spinor((a * ch + b * sh) * IDENTITY2 - (a * sh + b * ch) * SIGMA1)


def boost_spin_half(rapidity: float) -> np.ndarray:
    """Spin-1/2 representation exp(rapidity * sigma1 / 2) of an x-boost."""
    return math.cosh(0.5 * rapidity) * IDENTITY2 + math.sinh(0.5 * rapidity) * SIGMA1


@dataclass(frozen=True)
class LittleGroupResult:
    """Composed little-group element together with its boost factors.

    For collinear boosts the composition is the identity (the boost group
    along one axis is abelian, so no Wigner rotation survives); the
    interesting physics sits in the exposed frame_boost factor.
    """

    matrix: SpinorMatrix
    boost_to_momentum: np.ndarray
    frame_boost: np.ndarray
    inverse_displaced_boost: np.ndarray
    displaced_rapidity: float


def little_group_oracle(p: MomentumState, deta: float) -> LittleGroupResult:
    """Independent spin-transport route via standard-boost composition.

    A step deta boosts the frame by rapidity -deta along x (sign fixed by the
    connection computed in the frame module).  The little-group element is
    then the inverse standard boost at the displaced momentum, times that
    frame boost, times the standard boost at the original momentum.  Accepts
    the rest frame rapidity = 0, unlike the closed-form route.
    """
    if deta < 0:
        raise ValueError(f"deta must be >= 0, got {deta}")
    to_momentum = boost_spin_half(p.rapidity)
    frame = boost_spin_half(-deta)
    ch, sh = math.cosh(deta), math.sinh(deta)
    energy = ch * p.energy - sh * p.momentum
    momentum = -sh * p.energy + ch * p.momentum
    displaced_rapidity = math.atanh(momentum / energy)
    inverse_displaced = boost_spin_half(-displaced_rapidity)
    composed = inverse_displaced @ frame @ to_momentum
    return LittleGroupResult(_spinor(composed), to_momentum, frame,
                             inverse_displaced, displaced_rapidity)


def accumulate(p: MomentumState, eta_total: float, steps: int) -> SpinorMatrix:
    """Compose the closed-form map over `steps` equal sub-steps of eta_total."""
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    step_matrix = wigner_matrix(p, eta_total / steps).matrix
    total = IDENTITY2.copy()
    for _ in range(steps):
        total = step_matrix @ total
    return _spinor(total)
