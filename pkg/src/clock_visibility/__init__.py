"""Interferometric visibility of a two-level clock coupled to quantum
environments: closed forms, brute-force cross-checks, and sweep tooling."""

from .channels import (AdSpectrum, ChannelKind, ChannelParams,
                       ad_spectrum, ad_visibility_analytic,
                       build_channel_hamiltonian, coupling_from_probability,
                       dp_visibility_numeric, effective_transition_probability,
                       finite_time_unitary, pd_visibility_analytic,
                       two_arm_visibility)
from .errors import ConvergenceError, StructuralError, ValidationError
from .interferometer import (ArmConfig, ClockSpec, VisibilityResult,
                             detection_probability, extended_initial_state,
                             noiseless_visibility, overlap_visibility,
                             proper_time_difference, scan_probabilities,
                             visibility_from_scan)
from .jaynes_cummings import (JcDressedLevel, JcParams, ThermalParams,
                              build_jc_hamiltonian, dressed_level,
                              jc_thermal_visibility, jc_visibility_analytic,
                              sector_overlap, thermal_cutoff)
from .numerics import Spectrum, evolution_operator, hermitian_eig, inner_product
from .oracle import OracleJob, evolve_state, oracle_visibility
from .sweep import (Axis, FigurePreset, SweepRecord, SweepSpec, evaluate_point,
                    figure_preset, run_figure_preset, run_sweep)
from .validate import run_validation

__version__ = "0.1.0"

__all__ = [
    "AdSpectrum", "ArmConfig", "Axis", "ChannelKind", "ChannelParams",
    "ClockSpec", "ConvergenceError", "FigurePreset", "JcDressedLevel",
    "JcParams", "OracleJob", "Spectrum", "StructuralError", "SweepRecord",
    "SweepSpec", "ThermalParams", "ValidationError", "VisibilityResult",
    "ad_spectrum", "ad_visibility_analytic", "build_channel_hamiltonian",
    "build_jc_hamiltonian", "coupling_from_probability",
    "detection_probability", "dp_visibility_numeric", "dressed_level",
    "effective_transition_probability", "evaluate_point", "evolution_operator",
    "evolve_state", "extended_initial_state", "figure_preset",
    "finite_time_unitary", "hermitian_eig", "inner_product",
    "jc_thermal_visibility", "jc_visibility_analytic", "noiseless_visibility",
    "oracle_visibility", "overlap_visibility", "pd_visibility_analytic",
    "proper_time_difference", "run_figure_preset", "run_sweep",
    "run_validation", "scan_probabilities", "sector_overlap",
    "thermal_cutoff", "two_arm_visibility", "visibility_from_scan",
]
