"""Lower and upper bounds on coherence sums and conditional-entropy sums.

For a bipartite state rho_AB with qubit A and complementary measurements X, Z
on A, evaluate_all collects into one report:

* the coherence sum C_B|A(X) + C_B|A(Z) and its lower bounds
      q_mu - S(A|B)                               (lb_theorem2)
      q_mu - S(A|B) + max{0, D_A - J_A}           (lb_theorem3)
      q_mu - S(A|B) + max{0, delta}               (lb_theorem4)
  and upper bounds
      2 P_B|A                                     (ub_purity)
      2 P_B|A - I(X:B) - I(Z:B)                   (ub_holevo)
* the entropic-uncertainty sum H(X|B) + H(Z|B), its lower bounds
      q_mu + S(A|B)                               (eur_berta)
      q_mu + S(A|B) + max{0, D_A - J_A}           (eur_pati)
      q_mu + S(A|B) + max{0, delta}               (eur_adabi)
  and the upper bound 2 log2 dim_a - I(X:B) - I(Z:B) (certainty_ub),

with delta = I(A:B) - I(X:B) - I(Z:B). The two sides are linked by the exact
conversion H(Y|B) = C_B|A(Y) + S(A|B), so every coherence bound is an
uncertainty bound shifted by 2 S(A|B).
"""
from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .coherence import coherence_rel, unilateral_purity
from .correlations import classical_correlation, mutual_information, holevo
from .entropy import von_neumann_entropy
from .errors import DomainError, UnsupportedDimension
from .measurement import ObservableBasis, incompatibility, measure
from .states import (
    DensityMatrix,
    bell_diagonal_family,
    marginal_b,
    werner,
    x_state,
)

# |x| below this is treated as an exact zero inside max{0, x} terms, so a
# theoretical zero never turns into 1e-16 and flips a tightness comparison.
DUST = 1e-12


def _positive_part(x: float) -> float:
    return max(0.0, 0.0 if abs(x) < DUST else x)


@dataclass(frozen=True)
class BoundReport:
    """All evaluated quantities for one (state, X, Z) triple. Everything is in bits."""

    lhs_coherence: float
    lhs_eur: float
    q_mu: float
    cond_entropy: float
    lb_theorem2: float
    lb_theorem3: float
    lb_theorem4: float
    ub_purity: float
    ub_holevo: float
    eur_berta: float
    eur_pati: float
    eur_adabi: float
    certainty_ub: float
    delta: float
    discord_gap: float
    mutual_info: float
    holevo_x: float
    holevo_z: float

    def as_dict(self) -> dict[str, float]:
        return asdict(self)


def coherence_bound_t1(rho: DensityMatrix, x: ObservableBasis, z: ObservableBasis) -> tuple[float, float]:
    """Monopartite coherence bound: C(X) + C(Z) >= q_mu - S(rho).

    Returns (lhs, lower_bound).
    """
    lhs = coherence_rel(rho, x).value + coherence_rel(rho, z).value
    return lhs, incompatibility(x, z) - von_neumann_entropy(rho)


def evaluate_all(rho: DensityMatrix, x: ObservableBasis, z: ObservableBasis) -> BoundReport:
    """Evaluate every bound for a bipartite state with qubit A.

    Shared entropies are computed once so exact identities between report
    fields survive floating point unchanged.
    """
    if rho.dim_a != 2:
        raise UnsupportedDimension(f"evaluate_all needs dim_a == 2, got {rho.dim_a}")
    s_ab = von_neumann_entropy(rho)
    s_b = von_neumann_entropy(marginal_b(rho))
    cond = s_ab - s_b
    q_mu = incompatibility(x, z)
    s_xb = von_neumann_entropy(measure(rho, x).joint_state)
    s_zb = von_neumann_entropy(measure(rho, z).joint_state)
    lhs_coherence = max(0.0, s_xb - s_ab) + max(0.0, s_zb - s_ab)
    lhs_eur = (s_xb - s_b) + (s_zb - s_b)
    info = mutual_information(rho)
    holevo_x = holevo(rho, x)
    holevo_z = holevo(rho, z)
    delta = info - holevo_x - holevo_z
    disc = classical_correlation(rho)
    gap = disc.discord - disc.classical_correlation
    ub_purity = 2.0 * unilateral_purity(rho)
    return BoundReport(
        lhs_coherence=lhs_coherence,
        lhs_eur=lhs_eur,
        q_mu=q_mu,
        cond_entropy=cond,
        lb_theorem2=q_mu - cond,
        lb_theorem3=q_mu - cond + _positive_part(gap),
        lb_theorem4=q_mu - cond + _positive_part(delta),
        ub_purity=ub_purity,
        ub_holevo=ub_purity - holevo_x - holevo_z,
        eur_berta=q_mu + cond,
        eur_pati=q_mu + cond + _positive_part(gap),
        eur_adabi=q_mu + cond + _positive_part(delta),
        certainty_ub=2.0 * float(np.log2(rho.dim_a)) - holevo_x - holevo_z,
        delta=delta,
        discord_gap=gap,
        mutual_info=info,
        holevo_x=holevo_x,
        holevo_z=holevo_z,
    )


FAMILIES = {
    "xstate": x_state,
    "bell_diagonal": bell_diagonal_family,
    "werner": werner,
}


def sweep_family(
    family: str, x: ObservableBasis, z: ObservableBasis, p_values
) -> list[tuple[float, BoundReport]]:
    """Evaluate a named one-parameter family on a grid of p values."""
    try:
        constructor = FAMILIES[family]
    except KeyError:
        raise DomainError(f"unknown family {family!r}, expected one of {sorted(FAMILIES)}") from None
    return [(float(p), evaluate_all(constructor(float(p)), x, z)) for p in p_values]
