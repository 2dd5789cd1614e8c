"""Conic degeneration: cross-section conditions, ledger assembly, zeta values, radial demo."""
from .conditions import (GapReport, ResonanceVerdict, WittReport, check_gap_conditions,
                         check_modified_witt, check_no_resonance_sufficient, small_eig_count)
from .ledger import (DegenerationLedger, DegreeEntry, LogDetExpansion, assemble_log_det_expansion,
                     ledger_from_dict, load_ledger, torsion_from_log_dets)
from .radial import RadialProblem, RadialResult, radial_eigenvalues
from .zeta import ZetaResult, zeta_from_eigenvalues
from .demo import ConvergenceTable, glued_profiles, spectral_convergence_demo

__all__ = [
    "GapReport", "ResonanceVerdict", "WittReport", "check_gap_conditions",
    "check_modified_witt", "check_no_resonance_sufficient", "small_eig_count",
    "DegenerationLedger", "DegreeEntry", "LogDetExpansion", "assemble_log_det_expansion",
    "ledger_from_dict", "load_ledger", "torsion_from_log_dets",
    "RadialProblem", "RadialResult", "radial_eigenvalues",
    "ZetaResult", "zeta_from_eigenvalues",
    "ConvergenceTable", "glued_profiles", "spectral_convergence_demo",
]
