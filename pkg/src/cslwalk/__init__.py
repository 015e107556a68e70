"""Feasibility calculator and Monte-Carlo oracle for collapse-model
induced random walks of spheres, discs and quantum oscillators.
"""

from .constants import (
    CONSTANTS,
    MassConvention,
    PhysicalConstants,
    amu_to_grams,
    grams_to_amu,
    picotorr_to_torr,
    sphere_mass,
    torr_to_picotorr,
)
from .models import (
    CollapseModel,
    FormFactors,
    KarolyhazyParams,
    ModelName,
    effective_lambda_dp,
    effective_lambda_karolyhazy,
    preset,
)
from .diffusion import (
    DiscSpec,
    DisplacementCurve,
    LawTag,
    NoDiffusionError,
    ObjectKind,
    PowerLaw,
    SphereSpec,
    csl_disc_law,
    csl_disc_rotation,
    csl_sphere_displacement,
    csl_sphere_law,
    csl_sphere_rate_constant,
    displacement_curve,
    gravity_displacement_karolyhazy,
    invert_time,
    karolyhazy_law,
    qbd_displacement,
    qbd_law,
)
from .feasibility import (
    FeasibilityResult,
    RegimeFlag,
    Scenario,
    SweepParam,
    generate_table,
    gravity_feasibility,
    required_internal_temperature_disc,
    required_internal_temperature_sphere,
    required_pressure_disc,
    required_pressure_sphere,
    solve_disc,
    solve_sphere,
    sweep,
)
from .oscillator import (
    EtaLaw,
    OscillatorSpec,
    classical_displacement,
    csl_energy_gain,
    eta_csl_effective,
    eta_csl_literal,
    eta_grw,
    generate_oscillator_table,
    mean_thermal_energy,
    min_observation_time,
    required_pressure,
    required_temperature,
)
from .simulate import (
    SimConfig,
    TrajectoryEnsemble,
    csl_momentum_diffusion_coefficient,
    csl_rotational_diffusion_coefficient,
    fit_powerlaw,
    simulate,
)
from .tolerances import TOLERANCES, Tolerances

__version__ = "0.1.0"
