"""Entanglement bookkeeping for an inertial observer paired with an
accelerated one.

Two scenarios share the machinery here: a maximally entangled spin pair whose
accelerated half is dragged through the spin map of the wigner module, and a
scalar mode pair where the accelerated half is expanded in wedge states and
wedge II is traced out.  Every quantity is computed exactly from density
matrices, and where a closed-form approximation exists the two are reported
side by side with their gap -- the closed forms are treated as claims to be
checked, not as ground truth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .rindler import UnruhParams, scalar_excited, scalar_unruh_vacuum
from .wigner import MomentumState, SpinorMatrix

ZERO_STEP_FLAG = "zero_step_closed_form_1_exact_2"
NEGATIVE_FLAG = "negative_closed_form"

_NORM_TOL = 1e-12


@dataclass
class BipartitePure:
    """Pure two-party state; index order (inertial Alice slow, Rob fast)."""

    amplitudes: np.ndarray
    normalized: bool = True
    pre_map_norm: float | None = None

    def __post_init__(self):
        self.amplitudes = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if self.normalized:
            n = float(np.linalg.norm(self.amplitudes))
            if abs(n - 1.0) > _NORM_TOL:
                raise ValueError(f"state flagged normalized has norm {n:.15g}")

    def density_matrix(self) -> np.ndarray:
        return np.outer(self.amplitudes, self.amplitudes.conj())


def spin_bell_state() -> BipartitePure:
    """(|up,up> + |down,down>)/sqrt(2) for the z spin axis."""
    return BipartitePure(np.array([1.0, 0.0, 0.0, 1.0], dtype=complex) / math.sqrt(2.0))


def apply_wigner_to_rob(state: BipartitePure, d, renormalize: bool = True) -> BipartitePure:
    """Apply a 2x2 spin map to Rob's half of a two-qubit state.

    The map need not be unitary; the pre-renormalization norm is recorded on
    the returned state either way.
    """
    matrix = d.matrix if isinstance(d, SpinorMatrix) else np.asarray(d, dtype=complex)
    amps = linalg.kron(np.eye(2), matrix) @ state.amplitudes
    pre_norm = float(np.linalg.norm(amps))
    if pre_norm <= 1e-12:
        raise ValueError(f"spin map sent the state to norm {pre_norm:.3e}")
    if renormalize:
        return BipartitePure(amps / pre_norm, normalized=True, pre_map_norm=pre_norm)
    return BipartitePure(amps, normalized=abs(pre_norm - 1.0) <= _NORM_TOL,
                         pre_map_norm=pre_norm)


def _as_density(state_or_rho, dims) -> np.ndarray:
    total = int(np.prod([int(d) for d in dims]))
    if isinstance(state_or_rho, BipartitePure):
        rho = state_or_rho.density_matrix()
    else:
        arr = np.asarray(state_or_rho, dtype=complex)
        rho = np.outer(arr, arr.conj()) if arr.ndim == 1 else arr
    if rho.shape != (total, total):
        raise ValueError(f"density matrix shape {rho.shape} does not match dims {dims}")
    defect = linalg.hermiticity_defect(rho)
    if defect > 1e-10:
        raise ValueError(f"density matrix asymmetry {defect:.3e} exceeds 1e-10")
    trace = float(np.real(np.trace(rho)))
    if abs(trace - 1.0) > 1e-10:
        raise ValueError(f"density matrix trace {trace:.15g} is not 1 within 1e-10")
    smallest = float(linalg.eig_hermitian(rho).eigenvalues[0])
    if smallest < -1e-10:
        raise ValueError(f"density matrix eigenvalue {smallest:.3e} below -1e-10")
    return rho


@dataclass(frozen=True)
class NegativityReport:
    """Exact negativity 2|lambda_min| next to its closed-form estimate."""

    lambda_min: float
    exact: float
    closed_form: float | None = None
    abs_gap: float | None = None
    rel_gap: float | None = None


def closed_form_negativity(p: MomentumState, deta: float) -> float:
    """exp(-2 K^2 deta / ((1 - K^2) sinh(rapidity)))."""
    if p.rapidity == 0:
        raise ValueError("sinh(rapidity) = 0 at the rest frame; closed form undefined")
    if deta < 0:
        raise ValueError(f"deta must be >= 0, got {deta}")
    k = p.boost_parameter
    return math.exp(-2.0 * k * k * deta / ((1.0 - k * k) * math.sinh(p.rapidity)))


def negativity(state_or_rho, dims=(2, 2), transpose_on: str = "rob",
               p: MomentumState | None = None, deta: float | None = None) -> NegativityReport:
    """Negativity from the partial-transpose spectrum.

    ``transpose_on`` picks the transposed party ("alice" = dims[0],
    "rob" = dims[1]); the eigenvalues do not depend on the choice.  Passing a
    MomentumState and deta also fills in the closed-form branch and gaps.
    """
    rho = _as_density(state_or_rho, dims)
    try:
        subsystem = {"alice": 0, "rob": 1}[transpose_on.lower()]
    except KeyError:
        raise ValueError(f"transpose_on must be 'alice' or 'rob', got {transpose_on!r}") from None
    transposed = linalg.partial_transpose(rho, list(dims), subsystem)
    lambda_min = float(linalg.eig_hermitian(transposed).eigenvalues[0])
    exact = 2.0 * abs(lambda_min) if lambda_min < 0 else 0.0
    if p is None or deta is None:
        return NegativityReport(lambda_min, exact)
    closed = closed_form_negativity(p, deta)
    gap = abs(exact - closed)
    return NegativityReport(lambda_min, exact, closed, gap,
                            gap / closed if closed > 0 else math.inf)


@dataclass(frozen=True)
class MutualInfoReport:
    """Exact mutual information with its component entropies (bits)."""

    exact: float
    entropy_alice: float
    entropy_rob: float
    entropy_joint: float
    closed_form: float | None = None
    gap: float | None = None
    flags: tuple[str, ...] = ()


def mutual_information(rho_joint, dims=(2, 2), p: MomentumState | None = None,
                       deta: float | None = None) -> MutualInfoReport:
    """S(A) + S(R) - S(AR) from the joint density matrix.

    With kinematics supplied, the closed-form estimate is attached together
    with its gap and any flags it raises.
    """
    rho = _as_density(rho_joint, dims)
    dims = [int(d) for d in dims]
    s_alice = linalg.von_neumann_entropy(linalg.partial_trace(rho, dims, keep=0))
    s_rob = linalg.von_neumann_entropy(linalg.partial_trace(rho, dims, keep=1))
    s_joint = linalg.von_neumann_entropy(rho)
    exact = s_alice + s_rob - s_joint
    if p is None or deta is None:
        return MutualInfoReport(exact, s_alice, s_rob, s_joint)
    closed = closed_form_mutual_information(p, deta)
    return MutualInfoReport(exact, s_alice, s_rob, s_joint, closed.value,
                            abs(exact - closed.value), closed.flags)


@dataclass(frozen=True)
class ClosedFormMutualInfo:
    """Three-term closed-form mutual information, terms kept separate.

    value = pair_term + single_term + decay_term.  Flags record where the
    formula misbehaves: at deta = 0 it evaluates to 1 while the exact
    pipeline gives 2, and on part of the deta axis it goes negative, which a
    mutual information cannot.
    """

    value: float
    pair_term: float
    single_term: float
    decay_term: float
    flags: tuple[str, ...] = ()

    def __float__(self) -> float:
        return self.value


def closed_form_mutual_information(p: MomentumState, deta: float) -> ClosedFormMutualInfo:
    """Term-by-term closed-form estimate of the spin-pair mutual information.

    With K the boost parameter and s = sinh(rapidity):
      pair_term   = -y log2 y,         y = exp(-(1 + 2K/((1-K)s)) deta) / 2
      single_term = -x log2 x,         x = 1 - exp(-(1 + 2K/((1+K)s)) deta) / 2
      decay_term  = -g exp(-g),        g = 2 K^2 deta / ((1-K^2) s)
    """
    if p.rapidity == 0:
        raise ValueError("sinh(rapidity) = 0 at the rest frame; closed form undefined")
    if deta < 0:
        raise ValueError(f"deta must be >= 0, got {deta}")
    k = p.boost_parameter
    s = math.sinh(p.rapidity)
    y = 0.5 * math.exp(-(1.0 + 2.0 * k / ((1.0 - k) * s)) * deta)
    x = 1.0 - 0.5 * math.exp(-(1.0 + 2.0 * k / ((1.0 + k) * s)) * deta)
    g = 2.0 * k * k * deta / ((1.0 - k * k) * s)
    pair_term = -y * math.log2(y) if y > 0.0 else 0.0
    single_term = -x * math.log2(x) if 0.0 < x < 1.0 else 0.0
    decay_term = -g * math.exp(-g)
    value = pair_term + single_term + decay_term
    flags = []
    if deta == 0:
        flags.append(ZERO_STEP_FLAG)
    if value < 0:
        flags.append(NEGATIVE_FLAG)
    return ClosedFormMutualInfo(value, pair_term, single_term, decay_term, tuple(flags))


@dataclass(frozen=True)
class ScalarPairReport:
    """Alice--wedge-I entanglement for the scalar pair, wedge II traced out."""

    mutual_info: MutualInfoReport
    negativity: NegativityReport
    vacuum_deficit: float
    excited_deficit: float
    value_residual: float
    warnings: tuple[str, ...] = ()


def _scalar_alice_rob(r: float, n_max: int):
    """Joint Alice + wedge-I density matrix of the scalar pair scenario.

    Alice's |0>/|1> are correlated with Rob's vacuum / one-quantum wedge-pair
    states; tracing wedge II leaves a (2(n_max+1))-dimensional matrix with
    Alice on the slow index.
    """
    params = UnruhParams.from_squeezing(r)
    vacuum = scalar_unruh_vacuum(params, n_max)
    excited = scalar_excited(params, n_max, level=1)
    d = n_max + 1
    # reshape exposes [wedge-II, wedge-I]; stack Alice in front
    joint = np.stack([
        vacuum.state.amplitudes.reshape(d, d),
        excited.state.amplitudes.reshape(d, d),
    ]) / math.sqrt(2.0)
    rho = np.einsum('aki,bkj->aibj', joint, joint.conj()).reshape(2 * d, 2 * d)
    return rho, vacuum, excited


def scalar_entanglement_report(r: float, n_max: int = 64) -> ScalarPairReport:
    """Exact mutual information and negativity of the scalar-pair scenario.

    The truncation is audited twice over: the raw norm deficits of the
    constituent states, and a value residual comparing the mutual
    information against a run at half the truncation level.
    """
    if r < 0:
        raise ValueError(f"squeezing must be >= 0, got {r}")
    if n_max < 8:
        raise ValueError(f"n_max must be >= 8, got {n_max}")
    rho, vacuum, excited = _scalar_alice_rob(r, n_max)
    dims = (2, n_max + 1)
    mutual = mutual_information(rho, dims)
    neg = negativity(rho, dims, transpose_on="alice")
    rho_half, _, _ = _scalar_alice_rob(r, n_max // 2)
    mutual_half = mutual_information(rho_half, (2, n_max // 2 + 1))
    residual = abs(mutual.exact - mutual_half.exact)
    return ScalarPairReport(mutual, neg, vacuum.truncation_deficit,
                            excited.truncation_deficit, residual,
                            warnings=vacuum.warnings + excited.warnings)
