"""Global entanglement (average site mixedness) and on-site concurrence of
many-electron lattice states: metallic, Gutzwiller-projected, Nagaoka and BCS.

Closed forms are evaluated directly; the ``fermi_sea_*`` / ``bcs_*`` /
``nagaoka_*`` oracle helpers rebuild the same states exactly on small rings
and measure them by full enumeration.
"""

from ._core import (
    DomainError,
    bcs_concurrence,
    bcs_epsilon,
    bcs_site_rdm,
    bcs_zeta,
    concurrence_x,
    epsilon,
    fermi_sea_double_occupancy,
    gutzwiller_d,
    gutzwiller_double_occupancy,
    gutzwiller_epsilon,
    nagaoka_epsilon,
    nagaoka_site_rdm,
    site_rdm,
    validate,
    wootters_concurrence,
)

__all__ = [
    "DomainError",
    "bcs_concurrence",
    "bcs_epsilon",
    "bcs_site_rdm",
    "bcs_zeta",
    "concurrence_x",
    "epsilon",
    "fermi_sea_double_occupancy",
    "gutzwiller_d",
    "gutzwiller_double_occupancy",
    "gutzwiller_epsilon",
    "nagaoka_epsilon",
    "nagaoka_site_rdm",
    "site_rdm",
    "validate",
    "wootters_concurrence",
]
