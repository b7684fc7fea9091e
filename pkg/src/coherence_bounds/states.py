"""Density matrices: validation, named two-qubit families, random ensembles, file IO.

Conventions used everywhere in this package:

* A bipartite state on A x B is stored as a (dim_a*dim_b) x (dim_a*dim_b)
  complex matrix. Subsystem A occupies the slow (left) index, so for two
  qubits the computational basis is ordered |00>, |01>, |10>, |11>.
* A monopartite state is a DensityMatrix with dim_b == 1.

State file format (one state per file)::

    dims: <dim_a> <dim_b>
    <row> <col> <re> <im>
    ...

Indices are 0-based into the full matrix; entries not listed are zero; both
halves of a Hermitian pair must be listed. Blank lines and lines starting
with '#' are ignored.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ParseError, ValidationError
from .linalg import as_square_matrix, hermiticity_defect, hermitize, partial_trace, tensor_product

TRACE_TOL = 1e-9
EIGENVALUE_FLOOR = -1e-9

SIGMA0 = np.eye(2, dtype=np.complex128)
SIGMA1 = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=np.complex128)

PSI_PLUS = np.array([0, 1, 1, 0], dtype=np.complex128) / np.sqrt(2)
PSI_MINUS = np.array([0, 1, -1, 0], dtype=np.complex128) / np.sqrt(2)
PHI_PLUS = np.array([1, 0, 0, 1], dtype=np.complex128) / np.sqrt(2)


@dataclass(frozen=True)
class DensityMatrix:
    """Validated density matrix together with its A x B factorization."""

    matrix: np.ndarray
    dim_a: int
    dim_b: int

    @property
    def dim(self) -> int:
        return self.dim_a * self.dim_b

    @property
    def is_bipartite(self) -> bool:
        return self.dim_b > 1


def make_density(matrix, dim_a: int, dim_b: int) -> DensityMatrix:
    """Validate and wrap a matrix as a density operator.

    Checks, in order: dimensions factor as dim_a * dim_b, Hermiticity within
    1e-10 (the stored matrix is the symmetrized (M + M^dag)/2), unit trace
    within 1e-9, and smallest eigenvalue >= -1e-9. Each failure raises
    ValidationError naming the violated invariant.
    """
    arr = as_square_matrix(matrix)
    if dim_a < 1 or dim_b < 1 or arr.shape[0] != dim_a * dim_b:
        raise ValidationError(
            f"dimension: matrix of dim {arr.shape[0]} does not factor as {dim_a} x {dim_b}"
        )
    defect = hermiticity_defect(arr)
    if defect > 1e-10:
        raise ValidationError(f"hermiticity: max|M - M^dag| = {defect:.3e} exceeds 1e-10")
    arr = hermitize(arr)
    tr = float(np.trace(arr).real)
    if abs(tr - 1.0) > TRACE_TOL:
        raise ValidationError(f"trace: Tr = {tr!r} is not 1 within {TRACE_TOL}")
    smallest = float(np.linalg.eigvalsh(arr)[0])
    if smallest < EIGENVALUE_FLOOR:
        raise ValidationError(
            f"positivity: smallest eigenvalue {smallest:.3e} is below {EIGENVALUE_FLOOR}"
        )
    return DensityMatrix(matrix=arr, dim_a=int(dim_a), dim_b=int(dim_b))


def marginal_a(rho: DensityMatrix) -> DensityMatrix:
    """Reduced state on A (a monopartite DensityMatrix)."""
    return make_density(partial_trace(rho.matrix, rho.dim_a, rho.dim_b, over="B"), rho.dim_a, 1)


def marginal_b(rho: DensityMatrix) -> DensityMatrix:
    """Reduced state on B (a monopartite DensityMatrix)."""
    return make_density(partial_trace(rho.matrix, rho.dim_a, rho.dim_b, over="A"), rho.dim_b, 1)


def _check_unit_interval(p: float, name: str) -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"{name} must lie in [0, 1], got {p!r}")
    return p


def x_state(p: float) -> DensityMatrix:
    """Two-qubit mixture p |Psi+><Psi+| + (1-p) |11><11|."""
    p = _check_unit_interval(p, "p")
    m = p * np.outer(PSI_PLUS, PSI_PLUS.conj())
    m[3, 3] += 1.0 - p
    return make_density(m, 2, 2)


def werner(p: float) -> DensityMatrix:
    """Two-qubit mixture p |Psi+><Psi+| + (1-p) I/4."""
    p = _check_unit_interval(p, "p")
    m = p * np.outer(PSI_PLUS, PSI_PLUS.conj()) + (1.0 - p) / 4.0 * np.eye(4)
    return make_density(m, 2, 2)


def bell_diagonal(t1: float, t2: float, t3: float) -> DensityMatrix:
    """Bell-diagonal state (I (x) I + sum_i t_i sigma_i (x) sigma_i) / 4.

    The correlation triple (t1, t2, t3) must keep the matrix positive
    semidefinite; otherwise validation fails.
    """
    m = tensor_product(SIGMA0, SIGMA0)
    for t, s in ((t1, SIGMA1), (t2, SIGMA2), (t3, SIGMA3)):
        m = m + float(t) * tensor_product(s, s)
    return make_density(0.25 * m, 2, 2)


def bell_diagonal_family(p: float) -> DensityMatrix:
    """One-parameter Bell-diagonal line t = (1 - 2p, -p, -p).

    Equals the mixture p |Psi-><Psi-| + (1-p)/2 (|Psi+><Psi+| + |Phi+><Phi+|),
    with eigenvalues (p, (1-p)/2, (1-p)/2, 0).
    """
    p = _check_unit_interval(p, "p")
    return bell_diagonal(1.0 - 2.0 * p, -p, -p)


def random_density(dim_a: int, dim_b: int, seed: int) -> DensityMatrix:
    """Ginibre-induced random state G G^dag / Tr, deterministic per seed."""
    rng = np.random.default_rng(seed)
    d = dim_a * dim_b
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    m = g @ g.conj().T
    return make_density(m / np.trace(m).real, dim_a, dim_b)


def random_unitary(dim: int, seed: int) -> np.ndarray:
    """Haar-ish random unitary via QR of a Ginibre matrix, deterministic per seed."""
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(g)
    diag = np.diagonal(r)
    return q * (diag / np.abs(diag))


def load_state_file(path) -> DensityMatrix:
    """Read a state file (format in the module docstring).

    Raises ParseError for malformed content and ValidationError when the
    parsed matrix is not a density operator.
    """
    with open(path, "r", encoding="utf-8") as fh:
        raw_lines = fh.readlines()
    lines = [
        (i + 1, line.strip())
        for i, line in enumerate(raw_lines)
        if line.strip() and not line.strip().startswith("#")
    ]
    if not lines:
        raise ParseError("empty state file")
    lineno, header = lines[0]
    fields = header.split()
    if len(fields) != 3 or fields[0] != "dims:":
        raise ParseError(f"line {lineno}: expected 'dims: <dim_a> <dim_b>', got {header!r}")
    try:
        dim_a, dim_b = int(fields[1]), int(fields[2])
    except ValueError as exc:
        raise ParseError(f"line {lineno}: dims must be integers") from exc
    if dim_a < 1 or dim_b < 1:
        raise ParseError(f"line {lineno}: dims must be positive")
    d = dim_a * dim_b
    m = np.zeros((d, d), dtype=np.complex128)
    seen: set[tuple[int, int]] = set()
    for lineno, line in lines[1:]:
        fields = line.split()
        if len(fields) != 4:
            raise ParseError(f"line {lineno}: expected '<row> <col> <re> <im>', got {line!r}")
        try:
            row, col = int(fields[0]), int(fields[1])
            re, im = float(fields[2]), float(fields[3])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: could not parse entry {line!r}") from exc
        if not (0 <= row < d and 0 <= col < d):
            raise ParseError(f"line {lineno}: index ({row}, {col}) outside a {d} x {d} matrix")
        if (row, col) in seen:
            raise ParseError(f"line {lineno}: duplicate entry ({row}, {col})")
        seen.add((row, col))
        m[row, col] = complex(re, im)
    return make_density(m, dim_a, dim_b)


def save_state_file(rho: DensityMatrix, path) -> None:
    """Write a state file round-trippable through load_state_file."""
    lines = [f"dims: {rho.dim_a} {rho.dim_b}"]
    for row in range(rho.dim):
        for col in range(rho.dim):
            entry = rho.matrix[row, col]
            if entry != 0:
                lines.append(f"{row} {col} {float(entry.real)!r} {float(entry.imag)!r}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
