"""Shannon, von Neumann, and quantum relative entropy. All logarithms are base 2."""
from __future__ import annotations

import numpy as np

from .errors import DimensionError, DomainError, ProbabilityError
from .states import DensityMatrix

# Eigenvalues and probabilities at or below this are treated as exact zeros.
SUPPORT_CUT = 1e-12
# Support mass of rho allowed outside the support of sigma before S(rho||sigma) = +inf.
KERNEL_TOL = 1e-10


def xlog2x(w: np.ndarray) -> np.ndarray:
    """Elementwise w * log2(w) with the 0 log 0 = 0 convention."""
    w = np.asarray(w, dtype=np.float64)
    return np.where(w > 0.0, w * np.log2(np.where(w > 0.0, w, 1.0)), 0.0)


def shannon_entropy(probs) -> float:
    """H(p) = -sum_i p_i log2 p_i for a probability vector.

    Entries in [-1e-12, 0) are clamped to 0; anything more negative, or a
    total further than 1e-9 from 1, raises ProbabilityError.
    """
    p = np.asarray(probs, dtype=np.float64)
    if p.ndim != 1:
        raise ProbabilityError(f"expected a 1-d probability vector, got shape {p.shape}")
    if np.any(p < -1e-12):
        raise ProbabilityError(f"negative probability {p.min()!r}")
    p = np.where(p < 0.0, 0.0, p)
    total = float(p.sum())
    if abs(total - 1.0) > 1e-9:
        raise ProbabilityError(f"probabilities sum to {total!r}, not 1 within 1e-9")
    return float(-xlog2x(p).sum())


def binary_entropy(x: float) -> float:
    """h(x) = -x log2 x - (1-x) log2(1-x) on [0, 1]."""
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"binary_entropy argument must lie in [0, 1], got {x!r}")
    return float(-xlog2x(np.array([x, 1.0 - x])).sum())


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """S(rho) = -Tr rho log2 rho via the eigenvalue vector."""
    w = np.linalg.eigvalsh(rho.matrix)
    return shannon_entropy(np.where(w < SUPPORT_CUT, 0.0, w))


def relative_entropy(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """S(rho || sigma) = Tr rho (log2 rho - log2 sigma), via joint spectral data.

    Evaluates sum_ij |<r_i|s_j>|^2 lambda_i (log2 lambda_i - log2 mu_j) over
    the supports. Returns +inf when the support of rho leaks outside the
    support of sigma by more than KERNEL_TOL.
    """
    if rho.dim != sigma.dim:
        raise DimensionError(f"dimension mismatch: {rho.dim} vs {sigma.dim}")
    wr, vr = np.linalg.eigh(rho.matrix)
    ws, vs = np.linalg.eigh(sigma.matrix)
    overlap = np.abs(vr.conj().T @ vs) ** 2  # overlap[i, j] = |<r_i|s_j>|^2
    on_r = wr > SUPPORT_CUT
    on_s = ws > SUPPORT_CUT
    if not np.all(on_s):
        kernel_mass = overlap[np.ix_(on_r, ~on_s)].sum(axis=1)
        if kernel_mass.size and float(kernel_mass.max()) > KERNEL_TOL:
            return float("inf")
    lam = wr[on_r]
    mu = ws[on_s]
    cross = float((overlap[np.ix_(on_r, on_s)] * lam[:, None] * np.log2(mu)[None, :]).sum())
    return float(xlog2x(lam).sum() - cross)
