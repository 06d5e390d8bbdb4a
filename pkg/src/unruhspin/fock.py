"""Occupation-number registers mixing fermionic and truncated bosonic modes.

A ModeRegistry fixes the mode ordering once and for all; ladder-operator
matrices, sign strings, and basis enumeration all derive from that order.
Basis states are mixed-radix integers with the FIRST registry mode least
significant, so serialized amplitude vectors are stable across runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

REGIONS = ("I", "II")
SPECIES = ("particle", "antiparticle")
WAVEVECTOR_TAGS = ("+k", "-k")
SPIN_TAGS = ("up", "down")
STATISTICS = ("fermion", "boson")

DEFAULT_N_MAX = 64
NORMALIZATION_TOL = 1e-12


@dataclass(frozen=True)
class ModeLabel:
    """Symbolic tag for one field mode; carries no mode-function data."""

    region: str
    species: str
    wavevector: str
    spin: str | None
    statistics: str

    def __post_init__(self):
        if self.region not in REGIONS:
            raise ValueError(f"region must be one of {REGIONS}, got {self.region!r}")
        if self.species not in SPECIES:
            raise ValueError(f"species must be one of {SPECIES}, got {self.species!r}")
        if self.wavevector not in WAVEVECTOR_TAGS:
            raise ValueError(
                f"wavevector must be one of {WAVEVECTOR_TAGS}, got {self.wavevector!r}"
            )
        if self.spin is not None and self.spin not in SPIN_TAGS:
            raise ValueError(f"spin must be one of {SPIN_TAGS} or None, got {self.spin!r}")
        if self.statistics not in STATISTICS:
            raise ValueError(
                f"statistics must be one of {STATISTICS}, got {self.statistics!r}"
            )

    @property
    def is_fermion(self) -> bool:
        return self.statistics == "fermion"


@dataclass(frozen=True)
class ModeRegistry:
    """Ordered collection of modes plus the shared boson truncation level."""

    modes: tuple[ModeLabel, ...]
    n_max: int = DEFAULT_N_MAX

    def __post_init__(self):
        object.__setattr__(self, "modes", tuple(self.modes))
        if not self.modes:
            raise ValueError("registry needs at least one mode")
        if len(set(self.modes)) != len(self.modes):
            raise ValueError("mode labels within a registry must be distinct")
        if self.n_max < 1:
            raise ValueError(f"n_max must be >= 1, got {self.n_max}")

    def index_of(self, mode: ModeLabel) -> int:
        try:
            return self.modes.index(mode)
        except ValueError:
            raise ValueError(f"mode {mode} not in registry") from None

    def dim_of(self, j: int) -> int:
        return 2 if self.modes[j].is_fermion else self.n_max + 1

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(self.dim_of(j) for j in range(len(self.modes)))

    @property
    def dimension(self) -> int:
        return math.prod(self.dims)

    def occupations(self, index: int) -> tuple[int, ...]:
        """Mixed-radix digits of a basis index, first mode least significant."""
        if index < 0 or index >= self.dimension:
            raise ValueError(f"basis index {index} out of range")
        occ = []
        for d in self.dims:
            occ.append(index % d)
            index //= d
        return tuple(occ)

    def basis_index(self, occupations) -> int:
        occupations = tuple(int(n) for n in occupations)
        if len(occupations) != len(self.modes):
            raise ValueError(
                f"expected {len(self.modes)} occupation numbers, got {len(occupations)}"
            )
        index = 0
        stride = 1
        for n, d in zip(occupations, self.dims):
            if n < 0 or n >= d:
                raise ValueError(f"occupation {n} out of range for dimension {d}")
            index += n * stride
            stride *= d
        return index


@dataclass
class StateVector:
    """Amplitudes over the occupation basis of a registry."""

    registry: ModeRegistry
    amplitudes: np.ndarray

    def __post_init__(self):
        self.amplitudes = np.asarray(self.amplitudes, dtype=complex)
        if self.amplitudes.shape != (self.registry.dimension,):
            raise ValueError(
                f"amplitude vector has shape {self.amplitudes.shape}, "
                f"registry dimension is {self.registry.dimension}"
            )

    @classmethod
    def basis(cls, registry: ModeRegistry, occupations) -> "StateVector":
        amps = np.zeros(registry.dimension, dtype=complex)
        amps[registry.basis_index(occupations)] = 1.0
        return cls(registry, amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> "StateVector":
        n = self.norm()
        if n < 1e-15:
            raise ValueError("cannot normalize a zero state vector")
        return StateVector(self.registry, self.amplitudes / n)


def _ladder(registry: ModeRegistry, mode: ModeLabel, kind: str, statistics: str):
    j = registry.index_of(mode)
    if registry.modes[j].statistics != statistics:
        raise ValueError(
            f"mode {mode} has statistics {registry.modes[j].statistics!r}, "
            f"expected {statistics!r}"
        )
    if kind not in ("create", "annihilate"):
        raise ValueError(f"kind must be 'create' or 'annihilate', got {kind!r}")
    return j


def fermion_ladder(registry: ModeRegistry, mode: ModeLabel, kind: str) -> np.ndarray:
    """Creation/annihilation matrix for a fermionic mode.

    Acting on mode j picks up the sign (-1)^(total occupation of fermionic
    modes ordered before j), which is what makes distinct-mode operators
    anticommute.
    """
    j = _ladder(registry, mode, kind, "fermion")
    dim = registry.dimension
    out = np.zeros((dim, dim), dtype=complex)
    for col in range(dim):
        occ = list(registry.occupations(col))
        parity = sum(occ[l] for l in range(j) if registry.modes[l].is_fermion)
        sign = -1.0 if parity % 2 else 1.0
        if kind == "create" and occ[j] == 0:
            occ[j] = 1
            out[registry.basis_index(occ), col] = sign
        elif kind == "annihilate" and occ[j] == 1:
            occ[j] = 0
            out[registry.basis_index(occ), col] = sign
    return out


def boson_ladder(registry: ModeRegistry, mode: ModeLabel, kind: str) -> np.ndarray:
    """Creation/annihilation matrix for a truncated bosonic mode.

    Creation annihilates the top rung: a'|n_max> = 0, so [a, a'] picks up the
    finite-dimensional correction -(n_max+1)|n_max><n_max|.
    """
    j = _ladder(registry, mode, kind, "boson")
    dim = registry.dimension
    n_max = registry.n_max
    out = np.zeros((dim, dim), dtype=complex)
    for col in range(dim):
        occ = list(registry.occupations(col))
        n = occ[j]
        if kind == "create" and n < n_max:
            occ[j] = n + 1
            out[registry.basis_index(occ), col] = math.sqrt(n + 1)
        elif kind == "annihilate" and n > 0:
            occ[j] = n - 1
            out[registry.basis_index(occ), col] = math.sqrt(n)
    return out


def schmidt_coefficients(state: StateVector, left_modes) -> np.ndarray:
    """Descending Schmidt coefficients across the cut left_modes | rest.

    ``left_modes`` may hold ModeLabels or registry indices.  The squared
    coefficients sum to the squared norm of the state.
    """
    registry = state.registry
    k = len(registry.modes)
    left = set()
    for m in left_modes:
        left.add(m if isinstance(m, (int, np.integer)) else registry.index_of(m))
    if any(j < 0 or j >= k for j in left):
        raise ValueError(f"left mode indices {sorted(left)} out of range")
    if not left or len(left) == k:
        raise ValueError("split must leave at least one mode on each side")
    # Axis t of the reshaped tensor belongs to mode k-1-t (first mode is the
    # least significant digit of the basis index).
    tensor = state.amplitudes.reshape(registry.dims[::-1])
    left_axes = sorted(k - 1 - j for j in left)
    right_axes = [t for t in range(k) if t not in left_axes]
    tensor = tensor.transpose(left_axes + right_axes)
    rows = math.prod(tensor.shape[: len(left_axes)])
    return np.linalg.svd(tensor.reshape(rows, -1), compute_uv=False)
