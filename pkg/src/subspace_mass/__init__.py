"""Subspace-alignment mass ratios.

Grassmannian subspace algebra, Haar Monte Carlo alignment likelihoods,
2x2 rotation-generator checks, spin-1/2 phase kinematics and exact
electron/pion/proton mass ratios.
"""
from .errors import (
    DimensionMismatch,
    DomainError,
    InvalidGenerator,
    NonPositiveMass,
    NotUnit,
    RankDeficient,
    SubspaceMassError,
    TooLarge,
)
from .mass_model import (
    ModelConfig,
    MassRatioResult,
    grassmann_dof,
    inferred_scale_report,
    problem2_table,
    ratio_electron,
    ratio_pion,
    ratio_proton,
)
from .phase_kinematics import (
    CONSTANTS,
    KinematicState,
    SpinorPair,
    boost_chiral,
    compton_frequency,
    energy_momentum,
    plane_wave_phase,
    rest_phase,
    rotation_eigenvalue,
)
from .repcheck import (
    RepSolutionSet,
    SpinGenerator,
    check_fifth_plane,
    commutator,
    solve_fourth_plane,
)
from .sampling import McEstimate, estimate_accrual, estimate_alignment, haar_subspace
from .subspace_core import (
    OrthonormalFrame,
    PlueckerCoefficients,
    build_frame,
    coefficient_norm,
    count_subspaces,
    enumerate_basis,
    expand,
    subspace_dot,
)

__version__ = "0.1.0"
