"""Dense complex linear algebra for small quantum registers.

Operators and density matrices are plain complex numpy arrays.  A composite
system factors as dims[0] x dims[1] x ... with dims[0] attached to the
slowest (leftmost Kronecker) index.  Entropies are in bits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Default tolerances; every routine accepts an override.
HERMITICITY_TOL = 1e-12
RECONSTRUCTION_TOL = 1e-10
TRACE_TOL = 1e-10
EIGENVALUE_CLAMP = 1e-10


@dataclass(frozen=True)
class HermitianSpectrum:
    """Ascending real eigenvalues with matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _as_matrix(m) -> np.ndarray:
    out = np.asarray(m, dtype=complex)
    if out.ndim != 2:
        raise ValueError(f"expected a matrix, got array of shape {out.shape}")
    return out


def hermiticity_defect(m) -> float:
    """max |M - M^dagger| over entries."""
    m = _as_matrix(m)
    return float(np.max(np.abs(m - m.conj().T)))


def kron(a, b) -> np.ndarray:
    """Kronecker product; the left factor owns the slow (block) index."""
    return np.kron(_as_matrix(a), _as_matrix(b))


def eig_hermitian(m, hermiticity_tol=None, reconstruction_tol=None) -> HermitianSpectrum:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    Rejects input whose asymmetry exceeds the tolerance, and double-checks
    that the returned spectrum actually reconstructs the input.
    """
    if hermiticity_tol is None:
        hermiticity_tol = HERMITICITY_TOL
    if reconstruction_tol is None:
        reconstruction_tol = RECONSTRUCTION_TOL
    m = _as_matrix(m)
    defect = hermiticity_defect(m)
    if defect > hermiticity_tol:
        raise ValueError(
            f"matrix is not Hermitian: max |M - M^dagger| = {defect:.3e} "
            f"exceeds {hermiticity_tol:.1e}"
        )
    eigenvalues, eigenvectors = np.linalg.eigh(m)
    residual = float(np.max(np.abs(
        (eigenvectors * eigenvalues) @ eigenvectors.conj().T - m
    )))
    if residual > reconstruction_tol:
        raise ArithmeticError(
            f"eigendecomposition failed to reconstruct input: residual {residual:.3e}"
        )
    return HermitianSpectrum(eigenvalues, eigenvectors)


def _check_dims(rho: np.ndarray, dims) -> list[int]:
    dims = [int(d) for d in dims]
    total = int(np.prod(dims))
    if rho.shape[0] != rho.shape[1] or rho.shape[0] != total:
        raise ValueError(
            f"subsystem dims {dims} give total dimension {total}, "
            f"but the matrix is {rho.shape[0]}x{rho.shape[1]}"
        )
    return dims


def partial_trace(rho, dims, keep) -> np.ndarray:
    """Trace out every subsystem not listed in ``keep``.

    dims[0] labels the slowest index.  ``keep`` is an index or an iterable of
    indices; the kept factors retain their original relative order.
    """
    rho = _as_matrix(rho)
    dims = _check_dims(rho, dims)
    n = len(dims)
    if isinstance(keep, (int, np.integer)):
        keep = (int(keep),)
    keep = tuple(sorted({int(k) for k in keep}))
    if not keep:
        raise ValueError("keep set is empty; nothing would remain")
    if keep[0] < 0 or keep[-1] >= n:
        raise ValueError(f"keep indices {keep} out of range for {n} subsystems")
    tensor = rho.reshape(dims + dims)
    ket = list(range(n))
    bra = [n + i if i in keep else i for i in range(n)]
    out = [i for i in keep] + [n + i for i in keep]
    reduced = np.einsum(tensor, ket + bra, out)
    kept_dim = int(np.prod([dims[i] for i in keep]))
    return reduced.reshape(kept_dim, kept_dim)


def partial_transpose(rho, dims, subsystem) -> np.ndarray:
    """Transpose the indices of one subsystem, leaving the others alone."""
    rho = _as_matrix(rho)
    dims = _check_dims(rho, dims)
    n = len(dims)
    s = int(subsystem)
    if s < 0 or s >= n:
        raise ValueError(f"subsystem {s} out of range for {n} subsystems")
    tensor = rho.reshape(dims + dims)
    tensor = np.swapaxes(tensor, s, n + s)
    total = int(np.prod(dims))
    return tensor.reshape(total, total)


def von_neumann_entropy(rho, trace_tol=None, clamp=None) -> float:
    """S = -sum(p log2 p) of a density matrix, in bits.

    Eigenvalues in [-clamp, 0) are treated as numerical zeros; anything more
    negative, or a trace away from one, is an input error.
    """
    if trace_tol is None:
        trace_tol = TRACE_TOL
    if clamp is None:
        clamp = EIGENVALUE_CLAMP
    rho = _as_matrix(rho)
    trace = complex(np.trace(rho))
    if abs(trace - 1.0) > trace_tol:
        raise ValueError(
            f"density matrix trace {trace:.12g} is off unit by "
            f"{abs(trace - 1.0):.3e} (tolerance {trace_tol:.1e})"
        )
    p = eig_hermitian(rho).eigenvalues
    smallest = float(p[0])
    if smallest < -clamp:
        raise ValueError(
            f"density matrix has eigenvalue {smallest:.3e} below the "
            f"-{clamp:.1e} clamp window"
        )
    p = p[p > 0.0]
    if p.size == 0:
        return 0.0
    return float(-np.sum(p * np.log2(p)))
