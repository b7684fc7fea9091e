"""Dense complex linear algebra helpers: products, partial trace, Hermitian spectra."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, HermiticityError

# Largest allowed deviation max|M - M^dag| before a matrix is rejected as non-Hermitian.
HERMITICITY_TOL = 1e-10


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues (real, descending) and matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def as_square_matrix(m) -> np.ndarray:
    """Coerce to a square complex128 array with finite entries."""
    arr = np.asarray(m, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise DimensionError("matrix contains non-finite entries")
    return arr


def dagger(m: np.ndarray) -> np.ndarray:
    return m.conj().T


def hermitize(m: np.ndarray) -> np.ndarray:
    """Return the Hermitian part (M + M^dag) / 2."""
    return 0.5 * (m + m.conj().T)


def hermiticity_defect(m: np.ndarray) -> float:
    """max|M - M^dag|, zero for exactly Hermitian input."""
    return float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0


def tensor_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with the left factor on the slow (most significant) index."""
    return np.kron(np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128))


def partial_trace(rho: np.ndarray, dim_a: int, dim_b: int, over: str) -> np.ndarray:
    """Trace out one subsystem of a (dim_a*dim_b) x (dim_a*dim_b) matrix.

    over="A" returns the dim_b x dim_b marginal, over="B" the dim_a x dim_a one.
    """
    rho = as_square_matrix(rho)
    if dim_a < 1 or dim_b < 1 or rho.shape[0] != dim_a * dim_b:
        raise DimensionError(
            f"matrix of dim {rho.shape[0]} does not factor as {dim_a} x {dim_b}"
        )
    blocks = rho.reshape(dim_a, dim_b, dim_a, dim_b)
    if over == "A":
        return np.einsum("ikil->kl", blocks)
    if over == "B":
        return np.einsum("ikjk->ij", blocks)
    raise DimensionError(f"over must be 'A' or 'B', got {over!r}")


def hermitian_eig(m) -> SpectralDecomposition:
    """Spectral decomposition of a Hermitian matrix.

    Eigenvalues come out real and descending; degenerate ties keep the
    solver's ordering so repeated calls on the same input agree exactly.
    Raises HermiticityError when max|M - M^dag| exceeds HERMITICITY_TOL.
    """
    arr = as_square_matrix(m)
    if hermiticity_defect(arr) > HERMITICITY_TOL:
        raise HermiticityError(
            f"matrix deviates from Hermitian by {hermiticity_defect(arr):.3e}"
        )
    w, v = np.linalg.eigh(hermitize(arr))
    order = np.argsort(-w, kind="stable")
    return SpectralDecomposition(eigenvalues=w[order], eigenvectors=v[:, order])
