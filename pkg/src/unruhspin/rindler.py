"""Inertial vacuum and excitations as seen by a uniformly accelerated observer.

A detector of proper acceleration a tuned to frequency omega*a sees the
inertial vacuum as a pair-correlated state across the two causally
disconnected wedges I and II.  For a fermionic mode the pair amplitude is the
Boltzmann weight exp(-pi*omega); for a scalar mode the vacuum is a two-mode
squeezed state with tanh(r) = exp(-2*pi*omega).  The first-excited states
discriminate sharply: the fermionic one is an exact product state, the scalar
one stays entangled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fock import (
    DEFAULT_N_MAX,
    ModeLabel,
    ModeRegistry,
    StateVector,
    boson_ladder,
    fermion_ladder,
)

ANNIHILATION_TOL = 1e-12
OCCUPATION_CHECK_TOL = 1e-12
DEFICIT_WARN = 1e-3


@dataclass(frozen=True)
class UnruhParams:
    """Dimensionless mode energy omega and the squeezing r bound to it.

    The two carry redundant information, tied by tanh(r) = exp(-2*pi*omega);
    note the fermionic pair amplitude uses the square root of that weight,
    exp(-pi*omega), so the two conventions differ by a factor of 2 in the
    exponent.  Both parameterizations are kept explicit for that reason.
    """

    omega: float
    squeezing: float

    def __post_init__(self):
        if math.isnan(self.omega) or math.isnan(self.squeezing):
            raise ValueError("omega and squeezing must not be NaN")
        if self.omega < 0 or self.squeezing < 0:
            raise ValueError(
                f"omega and squeezing must be >= 0, got omega={self.omega}, "
                f"squeezing={self.squeezing}"
            )
        t = 1.0 if math.isinf(self.squeezing) else math.tanh(self.squeezing)
        w = 0.0 if math.isinf(self.omega) else math.exp(-2.0 * math.pi * self.omega)
        if abs(t - w) > 1e-12:
            raise ValueError(
                f"tanh(squeezing) = {t:.15g} does not match exp(-2*pi*omega) = "
                f"{w:.15g}; use the from_omega / from_squeezing constructors"
            )

    @classmethod
    def from_omega(cls, omega: float) -> "UnruhParams":
        omega = float(omega)
        if math.isnan(omega) or omega < 0:
            raise ValueError(f"omega must be >= 0, got {omega}")
        if omega == 0.0:
            return cls(0.0, math.inf)
        if math.isinf(omega):
            return cls(math.inf, 0.0)
        weight = math.exp(-2.0 * math.pi * omega)
        return cls(omega, math.atanh(weight) if weight < 1.0 else math.inf)

    @classmethod
    def from_squeezing(cls, squeezing: float) -> "UnruhParams":
        squeezing = float(squeezing)
        if math.isnan(squeezing) or squeezing < 0:
            raise ValueError(f"squeezing must be >= 0, got {squeezing}")
        if squeezing == 0.0:
            return cls(math.inf, 0.0)
        if math.isinf(squeezing):
            return cls(0.0, math.inf)
        return cls(-math.log(math.tanh(squeezing)) / (2.0 * math.pi), squeezing)

    @property
    def pair_weight(self) -> float:
        """Fermionic pair amplitude exp(-pi*omega) relative to the empty pair."""
        return math.exp(-math.pi * self.omega)


@dataclass
class UnruhState:
    """A constructed wedge-pair state plus its construction provenance."""

    state: StateVector
    params: UnruhParams
    phase_variant: str | None = None
    truncation_deficit: float = 0.0
    warnings: tuple[str, ...] = ()


def fermion_registry() -> ModeRegistry:
    """Wedge-I particle mode and wedge-II antiparticle mode, in that order.

    The order matters: it fixes the sign strings that every phase-convention
    statement below refers to.
    """
    return ModeRegistry((
        ModeLabel("I", "particle", "+k", "up", "fermion"),
        ModeLabel("II", "antiparticle", "-k", "up", "fermion"),
    ))


def scalar_registry(n_max: int = DEFAULT_N_MAX) -> ModeRegistry:
    return ModeRegistry((
        ModeLabel("I", "particle", "+k", None, "boson"),
        ModeLabel("II", "particle", "-k", None, "boson"),
    ), n_max=n_max)


def _fermion_weights(params: UnruhParams) -> tuple[float, float]:
    # alpha = (1 + e^(-2 pi omega))^(-1/2) equals e^(pi omega/2)/sqrt(2 cosh(pi omega))
    # but never overflows; beta = e^(-pi omega) * alpha.
    w = params.pair_weight
    alpha = 1.0 / math.sqrt(1.0 + w * w)
    return alpha, w * alpha


def fermion_bogoliubov(params: UnruhParams, kind: str) -> np.ndarray:
    """Accelerated-frame ladder operator mixing the two wedges.

    The creation operator is alpha * b_I^dagger - beta * b_II with
    alpha = (2 cosh(pi*omega))^(-1/2) e^(pi*omega/2) and
    beta = (2 cosh(pi*omega))^(-1/2) e^(-pi*omega/2); the annihilator is its
    adjoint.  Satisfies {a, a^dagger} = 1 on the two-mode space.
    """
    registry = fermion_registry()
    mode_i, mode_ii = registry.modes
    alpha, beta = _fermion_weights(params)
    if kind == "create":
        return (alpha * fermion_ladder(registry, mode_i, "create")
                - beta * fermion_ladder(registry, mode_ii, "annihilate"))
    if kind == "annihilate":
        return (alpha * fermion_ladder(registry, mode_i, "annihilate")
                - beta * fermion_ladder(registry, mode_ii, "create"))
    raise ValueError(f"kind must be 'create' or 'annihilate', got {kind!r}")


def fermion_unruh_vacuum(params: UnruhParams, phase: str = "auto") -> UnruhState:
    """Two-mode fermionic vacuum of the accelerated observer.

    Amplitudes are c0 on |0,0> and +/- exp(-pi*omega) c0 on the doubly
    occupied pair, c0 = (1 + exp(-2*pi*omega))^(-1/2).  The textbook relative
    sign is minus ("verbatim"), but under the registry ordering used here
    only the plus sign ("flipped") is annihilated by the Bogoliubov
    annihilator; phase="auto" starts from the verbatim sign and flips it only
    if the annihilation test fails, recording which variant survived.
    """
    registry = fermion_registry()
    w = params.pair_weight
    c0 = 1.0 / math.sqrt(1.0 + w * w)
    c1 = w * c0

    def build(sign: float) -> StateVector:
        amps = np.zeros(registry.dimension, dtype=complex)
        amps[registry.basis_index((0, 0))] = c0
        amps[registry.basis_index((1, 1))] = sign * c1
        return StateVector(registry, amps)

    if phase == "verbatim":
        return UnruhState(build(-1.0), params, phase_variant="verbatim")
    if phase == "flipped":
        return UnruhState(build(+1.0), params, phase_variant="flipped")
    if phase != "auto":
        raise ValueError(f"phase must be 'auto', 'verbatim' or 'flipped', got {phase!r}")

    annihilator = fermion_bogoliubov(params, "annihilate")
    for sign, variant in ((-1.0, "verbatim"), (+1.0, "flipped")):
        state = build(sign)
        if np.linalg.norm(annihilator @ state.amplitudes) <= ANNIHILATION_TOL:
            return UnruhState(state, params, phase_variant=variant)
    raise ArithmeticError(
        "neither relative sign of the pair amplitude is annihilated; "
        "registry ordering and sign strings are inconsistent"
    )


@dataclass(frozen=True)
class OccupationResult:
    """Wedge-I occupation computed two independent ways."""

    closed_form: float
    matrix_expectation: float

    @property
    def gap(self) -> float:
        return abs(self.closed_form - self.matrix_expectation)

    def __float__(self) -> float:
        return self.closed_form


def occupation_I(params: UnruhParams, check_tol: float = OCCUPATION_CHECK_TOL) -> OccupationResult:
    """Thermal occupation of the wedge-I mode in the inertial vacuum.

    Returns both the Fermi-Dirac closed form 1/(1 + exp(2*pi*omega)) and the
    matrix expectation <vac| b_I^dagger b_I |vac>, and insists they agree.
    """
    w = params.pair_weight
    closed = (w * w) / (1.0 + w * w)  # overflow-free form of 1/(1 + e^(2 pi omega))
    vacuum = fermion_unruh_vacuum(params)
    registry = vacuum.state.registry
    mode_i = registry.modes[0]
    number_op = fermion_ladder(registry, mode_i, "create") @ fermion_ladder(
        registry, mode_i, "annihilate")
    amps = vacuum.state.amplitudes
    expectation = float(np.real(amps.conj() @ (number_op @ amps)))
    result = OccupationResult(closed, expectation)
    if result.gap > check_tol:
        raise ArithmeticError(
            f"occupation routes disagree by {result.gap:.3e} (tol {check_tol:.1e})"
        )
    return result


def fermion_excited(params: UnruhParams) -> UnruhState:
    """One accelerated-frame quantum on top of the vacuum, renormalized.

    Comes out as exactly |1>_I |0>_II: the wedge-II contributions cancel, so
    the excitation is a product state and carries no wedge entanglement.
    """
    vacuum = fermion_unruh_vacuum(params)
    amps = fermion_bogoliubov(params, "create") @ vacuum.state.amplitudes
    state = StateVector(vacuum.state.registry, amps).normalized()
    return UnruhState(state, params, phase_variant=vacuum.phase_variant)


def _require_finite_squeezing(params: UnruhParams) -> float:
    r = params.squeezing
    if not math.isfinite(r):
        raise ValueError(
            "squeezing must be finite (omega = 0 maps to infinite squeezing; "
            "approach it on a finite-r grid instead)"
        )
    return r


def scalar_unruh_vacuum(params: UnruhParams, n_max: int = DEFAULT_N_MAX) -> UnruhState:
    """Two-mode squeezed vacuum on the wedge pair, truncated at n_max.

    Amplitude on |n,n> is tanh(r)^n / cosh(r); the weight lost to truncation,
    tanh(r)^(2(n_max+1)), is recorded before renormalizing and a warning is
    attached when it exceeds 1e-3.
    """
    r = _require_finite_squeezing(params)
    registry = scalar_registry(n_max)
    t = math.tanh(r)
    levels = np.arange(n_max + 1)
    coeff = t ** levels / math.cosh(r)
    amps = np.zeros(registry.dimension, dtype=complex)
    amps[[registry.basis_index((n, n)) for n in range(n_max + 1)]] = coeff
    deficit = t ** (2 * (n_max + 1))
    warnings = ()
    if deficit > DEFICIT_WARN:
        warnings = (
            f"vacuum truncation deficit {deficit:.3e} exceeds {DEFICIT_WARN:.0e}; "
            f"increase n_max",
        )
    return UnruhState(StateVector(registry, amps).normalized(), params,
                      truncation_deficit=deficit, warnings=warnings)


def scalar_excited(params: UnruhParams, n_max: int = DEFAULT_N_MAX,
                   level: int = 1) -> UnruhState:
    """Scalar wedge-pair state with one or two accelerated-frame quanta.

    Level 1 has amplitudes proportional to tanh(r)^n sqrt(n+1) / cosh(r)^2 on
    |n+1, n>; level 2 proportional to tanh(r)^n sqrt((n+1)(n+2)) / cosh(r)^3
    on |n+2, n>.  Unlike the fermionic excitation these remain entangled
    across the wedges.  States are renormalized after truncation with the
    raw deficit recorded.
    """
    r = _require_finite_squeezing(params)
    if level not in (1, 2):
        raise ValueError(f"level must be 1 or 2, got {level}")
    if level > n_max:
        raise ValueError(f"level {level} exceeds truncation n_max = {n_max}")
    registry = scalar_registry(n_max)
    t = math.tanh(r)
    x = t * t
    ch = math.cosh(r)
    if level == 1:
        levels = np.arange(n_max)          # occupies |n+1, n|, needs n+1 <= n_max
        coeff = t ** levels * np.sqrt(levels + 1.0) / ch ** 2
        indices = [registry.basis_index((n + 1, n)) for n in levels]
        # untruncated squared norm is 1; the dropped geometric-series tail is
        deficit = x ** n_max * (n_max + 1 - n_max * x)
    else:
        levels = np.arange(n_max - 1)      # occupies |n+2, n|
        coeff = t ** levels * np.sqrt((levels + 1.0) * (levels + 2.0)) / ch ** 3
        indices = [registry.basis_index((n + 2, n)) for n in levels]
        # untruncated squared norm is 2 / ((1-x)^3 cosh(r)^6) = 2
        deficit = 1.0 - float(np.sum(coeff ** 2)) / 2.0
    amps = np.zeros(registry.dimension, dtype=complex)
    amps[indices] = coeff
    warnings = ()
    if deficit > DEFICIT_WARN:
        warnings = (
            f"excited-state truncation deficit {deficit:.3e} exceeds "
            f"{DEFICIT_WARN:.0e}; increase n_max",
        )
    return UnruhState(StateVector(registry, amps).normalized(), params,
                      truncation_deficit=deficit, warnings=warnings)
