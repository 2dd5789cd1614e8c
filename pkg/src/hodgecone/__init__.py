"""Spectral computations for asymptotically conic manifolds.

Indicial roots of the Hodge Laplacian, L^p intervals for the Riesz transform
on forms, Bessel model kernels on exact cones, and the torsion ledger of a
conic degeneration.
"""
__version__ = "0.1.0"

from .errors import (BesselRangeError, GuardViolation, HodgeconeError, HypothesisFailure,
                     InsufficientTruncation, LedgerError, SpectralDataError)
from .spectral_data import (CrossSection, FormSpectrum, circle_preset, load_cross_section,
                            min_eigenvalues, sphere_preset)
from .indicial import (IndicialRoot, IndicialSet, check_hypothesis_0notindroot, indicial_set, nu0,
                       nu0_min_formula)
from .riesz import (RieszReport, TopologyInput, generic_degree_interval, indicial_sets_d_delta,
                    nu_indices, nu_ker, riesz_interval, sobolev_exponents)

__all__ = [
    "BesselRangeError", "GuardViolation", "HodgeconeError", "HypothesisFailure",
    "InsufficientTruncation", "LedgerError", "SpectralDataError",
    "CrossSection", "FormSpectrum", "circle_preset", "load_cross_section", "min_eigenvalues",
    "sphere_preset",
    "IndicialRoot", "IndicialSet", "check_hypothesis_0notindroot", "indicial_set", "nu0",
    "nu0_min_formula",
    "RieszReport", "TopologyInput", "generic_degree_interval", "indicial_sets_d_delta",
    "nu_indices", "nu_ker", "riesz_interval", "sobolev_exponents",
]
