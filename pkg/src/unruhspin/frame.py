"""Orthonormal frames and their transport in the uniformly accelerated chart.

The chart covers the right wedge with line element
ds^2 = -xi^2 deta^2 + dxi^2 + dy^2 + dz^2 (c = 1), natural frame
theta^0 = xi deta, theta^1 = dxi.  Displacing the frame induces an
infinitesimal local Lorentz transformation; its generator is computed from
the torsion-free structure equation via finite differences rather than
hard-coded, turning the sign convention into something testable.  The
transverse y, z directions ride along as inert flat coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

FD_STEP = 1e-6
FRAME_METRIC = np.diag([-1.0, 1.0, 1.0, 1.0])

SIGN_CONVENTION = (
    "torsion-free structure equation gives delta_omega^0_1 = +deta for "
    "displacement (deta;0;0;0); conventions differing by an overall sign "
    "appear in the literature"
)


@dataclass(frozen=True)
class RindlerPoint:
    """Event in the right wedge; xi is the inverse proper acceleration."""

    eta: float
    xi: float
    y: float = 0.0
    z: float = 0.0

    def __post_init__(self):
        if not self.xi > 0:
            raise ValueError(f"xi must be positive (right wedge interior), got {self.xi}")

    @property
    def acceleration(self) -> float:
        """Proper acceleration 1/xi of the static worldline through this point."""
        return 1.0 / self.xi

    def shifted(self, axis: int, delta: float) -> "RindlerPoint":
        coords = [self.eta, self.xi, self.y, self.z]
        coords[axis] += delta
        return RindlerPoint(*coords)


@dataclass(frozen=True)
class MinkowskiEvent:
    """Inertial-chart image of a wedge point; satisfies x^2 - t^2 > 0."""

    t: float
    x: float

    def __post_init__(self):
        if not self.x * self.x - self.t * self.t > 0:
            raise ValueError(
                f"event (t={self.t}, x={self.x}) lies outside the right wedge"
            )


@dataclass(frozen=True)
class Tetrad:
    """Frame vectors e_a^mu (rows) and the dual coframe e^a_mu (rows)."""

    point: RindlerPoint
    vectors: np.ndarray
    coframe: np.ndarray


@dataclass(frozen=True)
class ConnectionForm:
    """Frame-transport generator for one coordinate displacement.

    ``mixed`` holds delta_omega^a_b; ``lowered`` the index-lowered
    delta_omega_ab, antisymmetrized exactly.
    """

    displacement: np.ndarray
    mixed: np.ndarray
    lowered: np.ndarray
    convention: str = SIGN_CONVENTION


def metric_at(point: RindlerPoint) -> np.ndarray:
    g = np.diag([-point.xi * point.xi, 1.0, 1.0, 1.0])
    return g


def tetrad_at(point: RindlerPoint) -> Tetrad:
    """Static orthonormal frame adapted to the accelerated chart."""
    xi = point.xi
    vectors = np.diag([1.0 / xi, 1.0, 1.0, 1.0])
    coframe = np.diag([xi, 1.0, 1.0, 1.0])
    return Tetrad(point, vectors, coframe)


def christoffels_at(point: RindlerPoint, step: float | None = None) -> np.ndarray:
    """Gamma^kappa_{mu nu} from central finite differences of the metric."""
    if step is None:
        step = FD_STEP
    dg = np.zeros((4, 4, 4))
    for lam in range(4):
        gp = metric_at(point.shifted(lam, +step))
        gm = metric_at(point.shifted(lam, -step))
        dg[lam] = (gp - gm) / (2.0 * step)
    ginv = np.linalg.inv(metric_at(point))
    bracket = (dg + dg.transpose(2, 1, 0) - dg.transpose(1, 0, 2))
    return 0.5 * np.einsum('kl,mln->kmn', ginv, bracket)


def connection_coefficients(point: RindlerPoint, step: float | None = None) -> np.ndarray:
    """omega^a_{b mu}: frame rotation per unit displacement along axis mu."""
    if step is None:
        step = FD_STEP
    gamma = christoffels_at(point, step)
    tet = tetrad_at(point)
    dvec = np.zeros((4, 4, 4))  # dvec[mu, b, kappa] = partial_mu e_b^kappa
    for mu in range(4):
        vp = tetrad_at(point.shifted(mu, +step)).vectors
        vm = tetrad_at(point.shifted(mu, -step)).vectors
        dvec[mu] = (vp - vm) / (2.0 * step)
    nabla = dvec + np.einsum('kml,bl->mbk', gamma, tet.vectors)
    return np.einsum('ak,mbk->abm', tet.coframe, nabla)


def connection_one_form(point: RindlerPoint, displacement,
                        step: float | None = None) -> ConnectionForm:
    """Contract the connection coefficients with a coordinate displacement."""
    disp = np.asarray(displacement, dtype=float)
    if disp.shape != (4,):
        raise ValueError(f"displacement must have four components, got shape {disp.shape}")
    omega = connection_coefficients(point, step)
    mixed_raw = np.einsum('abm,m->ab', omega, disp)
    lowered = FRAME_METRIC @ mixed_raw
    lowered = 0.5 * (lowered - lowered.T)   # exact antisymmetry
    mixed = FRAME_METRIC @ lowered          # frame metric is its own inverse
    return ConnectionForm(disp, mixed, lowered)


def torsion_residual(point: RindlerPoint, step: float | None = None) -> float:
    """max |d theta^a + omega^a_b wedge theta^b| over all component slots.

    Zero (up to finite-difference noise) certifies that the computed
    connection is the torsion-free one belonging to the coframe.
    """
    if step is None:
        step = FD_STEP
    dcof = np.zeros((4, 4, 4))  # dcof[mu, a, nu] = partial_mu theta^a_nu
    for mu in range(4):
        cp = tetrad_at(point.shifted(mu, +step)).coframe
        cm = tetrad_at(point.shifted(mu, -step)).coframe
        dcof[mu] = (cp - cm) / (2.0 * step)
    dtheta = dcof.transpose(1, 0, 2) - dcof.transpose(1, 2, 0)
    omega = connection_coefficients(point, step)
    coframe = tetrad_at(point).coframe
    wedge = np.einsum('abm,bn->amn', omega, coframe)
    wedge = wedge - wedge.transpose(0, 2, 1)
    return float(np.max(np.abs(dtheta + wedge)))


def rindler_to_minkowski(eta: float, zeta: float, a: float) -> MinkowskiEvent:
    """Map conformal wedge coordinates to the inertial chart.

    t = a^-1 exp(a zeta) sinh(a eta), x = a^-1 exp(a zeta) cosh(a eta); the
    image runs along the hyperbola x^2 - t^2 = a^-2 exp(2 a zeta).
    """
    if not a > 0:
        raise ValueError(f"acceleration must be positive, got {a}")
    scale = math.exp(a * zeta) / a
    return MinkowskiEvent(t=scale * math.sinh(a * eta), x=scale * math.cosh(a * eta))
