"""Geometric (Berry/Pancharatnam) phases of light in an adiabatically expanding space."""

__version__ = "0.1.0"

from .anomaly import (
    PIONEER,
    AnomalyPrediction,
    PioneerConstants,
    helicity_drift,
    pioneer_comparison,
    solve_ab_system,
    theta_independence_sweep,
)
from .doppler import ProbeState, corrected_radial_velocity, dynamic_doppler_shift, radial_metric_vector
from .estimators import BerryPhaseTransformer, FrequencyAnomalyRegressor
from .evolution import (
    EvolutionTrajectory,
    RoundTripScenario,
    ScaleFactorModel,
    decompose,
    dynamic_phase,
    eikonal,
    evolve,
    generator_increment,
    parallel_transport_residual,
    section_phase,
)
from .geometric import (
    GeometricPhaseResult,
    StateSequence,
    berry_phase_analytic,
    berry_phase_integral,
    helicity_phase,
    pancharatnam_phase,
    solid_angle,
)
from .hopf import FiberCoordinates, S3Point, embed, line_element, project, section_constraint, vector_potential
from .spinor import (
    EPSILON_MINUS,
    EPSILON_PLUS,
    JonesVector,
    PoincarePoint,
    PolarizationSpinor,
    jones_to_spinor,
    polarization_matrix,
    spinor_to_poincare,
)
