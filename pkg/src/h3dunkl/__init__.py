"""Exact symbolic computations for the Dunkl harmonic oscillator of the icosahedral group H3."""

from .dunkl import (
    DunklContext,
    angular_J_square,
    default_context,
    dunkl_laplacian,
    hamiltonian_tilde,
    harmonic_project,
    heat_exp,
    pairing_kw,
    pairing_L2,
    pairing_L2_moments,
)
from .group import VERTICES, Y0, Y1, H3Group, RootSystemH3, h3_group
from .polyalg import MultiPoly, NotDivisible
from .scalars import KAPPA, OMEGA, TAU, GoldenNumber, ParamScalar, pochhammer
from .waves import (
    DegreeCapExceeded,
    QFamily,
    family,
    invariant_phi,
    norm_invariant_phi,
    nu,
)

__all__ = [
    "DegreeCapExceeded",
    "DunklContext",
    "GoldenNumber",
    "H3Group",
    "KAPPA",
    "MultiPoly",
    "NotDivisible",
    "OMEGA",
    "ParamScalar",
    "QFamily",
    "RootSystemH3",
    "TAU",
    "VERTICES",
    "Y0",
    "Y1",
    "angular_J_square",
    "default_context",
    "dunkl_laplacian",
    "family",
    "h3_group",
    "hamiltonian_tilde",
    "harmonic_project",
    "heat_exp",
    "invariant_phi",
    "norm_invariant_phi",
    "nu",
    "pairing_L2",
    "pairing_L2_moments",
    "pairing_kw",
    "pochhammer",
]
