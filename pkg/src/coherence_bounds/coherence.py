"""Relative entropy of coherence and of purity, plus their unilateral (B|A) variants.

All four quantities are entropy differences:

    C(Y|rho)        = S(dephase_Y(rho)) - S(rho)            monopartite
    C_B|A(Y|rho_AB) = S(dephase_Y(rho_AB)) - S(rho_AB)      bipartite
    P(rho)          = log2 d - S(rho)                       monopartite
    P_B|A(rho_AB)   = log2 dim_a - S(A|B)                   bipartite

Raw differences can undershoot zero by floating-point dust, so reported
values are clamped at zero.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .correlations import conditional_entropy
from .entropy import von_neumann_entropy
from .errors import DimensionError
from .measurement import ObservableBasis, dephase
from .states import DensityMatrix


@dataclass(frozen=True)
class CoherenceValue:
    value: float
    basis_label: str
    unilateral: bool


def _require_monopartite(rho: DensityMatrix, what: str) -> None:
    if rho.is_bipartite:
        raise DimensionError(f"{what} expects a monopartite state, got dim_b = {rho.dim_b}")


def _require_bipartite(rho: DensityMatrix, what: str) -> None:
    if not rho.is_bipartite:
        raise DimensionError(f"{what} expects a bipartite state, got dim_b = {rho.dim_b}")


def coherence_rel(rho: DensityMatrix, basis: ObservableBasis) -> CoherenceValue:
    """Relative entropy of coherence of a monopartite state in `basis`."""
    _require_monopartite(rho, "coherence_rel")
    raw = von_neumann_entropy(dephase(rho, basis)) - von_neumann_entropy(rho)
    return CoherenceValue(value=max(0.0, raw), basis_label=basis.label, unilateral=False)


def unilateral_coherence(rho: DensityMatrix, basis: ObservableBasis) -> CoherenceValue:
    """Coherence of A relative to the memory B: S(rho_YB) - S(rho_AB)."""
    _require_bipartite(rho, "unilateral_coherence")
    raw = von_neumann_entropy(dephase(rho, basis)) - von_neumann_entropy(rho)
    return CoherenceValue(value=max(0.0, raw), basis_label=basis.label, unilateral=True)


def purity_rel(rho: DensityMatrix) -> float:
    """Relative entropy of purity log2 d - S(rho) of a monopartite state."""
    _require_monopartite(rho, "purity_rel")
    return max(0.0, float(np.log2(rho.dim)) - von_neumann_entropy(rho))


def unilateral_purity(rho: DensityMatrix) -> float:
    """Purity of A relative to the memory B: log2 dim_a - S(A|B)."""
    _require_bipartite(rho, "unilateral_purity")
    return max(0.0, float(np.log2(rho.dim_a)) - conditional_entropy(rho))
