"""Inverse feasibility solvers and table/sweep generation.

Given a target displacement and the fractions epsilon (thermal over
collapse displacement) and chi (observation time over mean gas-collision
time), solve for the required internal temperature and ambient pressure.
The solvers compose the upstream displacement and collision-time laws, so
the published closed-form coefficients (6.8e6, 5.47e6, 0.82, 616) emerge
from the composition rather than being hard-coded; tests assert the
closure.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from . import gas, thermal
from .constants import CONSTANTS, PhysicalConstants
from .models import (
    CollapseModel,
    FormFactors,
    KarolyhazyParams,
    LAMBDA_DP_ROUNDED,
    LAMBDA_KAROLYHAZY_ROUNDED,
    ModelName,
    effective_lambda_dp,
    effective_lambda_karolyhazy,
    preset,
)
from .diffusion import (
    DiscSpec,
    ObjectKind,
    PowerLaw,
    SphereSpec,
    csl_disc_law,
    csl_sphere_law,
    qbd_law,
)

# Disc thermal anchors: the published angular thermal estimate takes the
# sphere emission-recoil law at particle radius 1e-5 cm and divides by a
# 1e-5 cm lever arm, even though the disc form-factor anchor has
# L = 2e-5 cm.  Both anchors are explicit and overridable.
DISC_THERMAL_RADIUS = 1e-5     # cm
DISC_DIVISION_LENGTH = 1e-5    # cm

# Published closed-form coefficients for the gravity-model solvers.  The
# temperature coefficient agrees with the live derivation to 0.3%; the
# pressure coefficient 0.03 is a rounding of the derived 0.0249, so the
# printed form is evaluated for reproduction and the live value is
# reported alongside.
GRAVITY_TEMPERATURE_COEFF = 1.16e6
GRAVITY_PRESSURE_COEFF = 0.03


class RegimeFlag(str, enum.Enum):
    EMISSION_DOMINANT = "emission_dominant"
    IMPACT_REALM_OK = "impact_realm_ok"
    QBD_SUBDOMINANT = "qbd_subdominant"


@dataclass(frozen=True)
class Scenario:
    """One feasibility question: object, model, fractions, target, T_e."""

    obj: SphereSpec | DiscSpec
    model: CollapseModel
    target: float                  # cm (sphere) or rad (disc)
    epsilon: float = 0.1           # thermal displacement / collapse displacement
    chi: float = 0.1               # observation time / collision time
    T_e: float = 100.0             # K
    form_factors: FormFactors = field(default_factory=FormFactors)

    def __post_init__(self):
        if not 0 < self.epsilon <= 1:
            raise ValueError(f"epsilon must be in (0, 1], got {self.epsilon}")
        if not 0 < self.chi <= 1:
            raise ValueError(f"chi must be in (0, 1], got {self.chi}")
        if self.target <= 0:
            raise ValueError(f"target displacement must be positive, got {self.target}")
        if self.T_e <= 0:
            raise ValueError(f"external temperature must be positive, got {self.T_e}")

    @property
    def kind(self) -> ObjectKind:
        return ObjectKind.DISC if isinstance(self.obj, DiscSpec) else ObjectKind.SPHERE


@dataclass(frozen=True)
class FeasibilityResult:
    """Solved temperature/pressure with timescales and regime flags."""

    T_i: float                     # K
    P: float                       # picoTorr
    t_csl: float                   # s, time to reach the target displacement
    tau_c: float                   # s, mean gas-collision time at P
    regime_flags: frozenset[RegimeFlag]
    warnings: tuple[str, ...] = ()
    details: dict = field(default_factory=dict)

    @property
    def violated_flags(self) -> frozenset[RegimeFlag]:
        return frozenset(RegimeFlag) - self.regime_flags


def _collapse_law(s: Scenario) -> PowerLaw:
    if s.kind is ObjectKind.DISC:
        return csl_disc_law(s.model, s.form_factors.f_rot)
    return csl_sphere_law(s.model, s.form_factors.f_trans)


def required_internal_temperature_sphere(
    s: Scenario, constants: PhysicalConstants = CONSTANTS
) -> float:
    """Internal temperature (K) at which the emission-recoil displacement
    is the fraction epsilon of the sphere collapse displacement.
    """
    if s.kind is not ObjectKind.SPHERE:
        raise ValueError("scenario object must be a sphere")
    law = csl_sphere_law(s.model, s.form_factors.f_trans, constants)
    # thermal fit coeff * T^3 / (D R^{3/2}) = epsilon * law prefactor
    T_cubed = (
        s.epsilon * s.obj.D * s.obj.R**1.5 * law.prefactor / thermal.EMISSION_FIT_COEFF
    )
    return T_cubed ** (1.0 / 3.0)


def required_internal_temperature_disc(
    s: Scenario,
    thermal_radius: float = DISC_THERMAL_RADIUS,
    division_length: float = DISC_DIVISION_LENGTH,
) -> float:
    """Internal temperature (K) for the disc rotation scenario.

    The angular thermal displacement is the sphere emission-recoil law at
    thermal_radius divided by division_length.
    """
    if s.kind is not ObjectKind.DISC:
        raise ValueError("scenario object must be a disc")
    law = csl_disc_law(s.model, s.form_factors.f_rot)
    angular_coeff = thermal.EMISSION_FIT_COEFF / division_length
    T_cubed = s.epsilon * s.obj.D * thermal_radius**1.5 * law.prefactor / angular_coeff
    return T_cubed ** (1.0 / 3.0)


def required_pressure_sphere(s: Scenario) -> float:
    """Pressure (picoTorr) at which the time to reach the target sphere
    displacement is the fraction chi of the mean gas-collision time.
    """
    if s.kind is not ObjectKind.SPHERE:
        raise ValueError("scenario object must be a sphere")
    t_csl = _collapse_law(s).invert_time(s.target)
    return gas.pressure_for_collision_time_sphere(s.T_e, t_csl / s.chi)


def required_pressure_disc(s: Scenario) -> float:
    """Pressure (picoTorr) for the disc rotation scenario."""
    if s.kind is not ObjectKind.DISC:
        raise ValueError("scenario object must be a disc")
    t_csl = _collapse_law(s).invert_time(s.target)
    return gas.pressure_for_collision_time_disc(s.T_e, t_csl / s.chi)


def _regime_flags(s: Scenario, T_i: float, t_csl: float, tau_c: float):
    flags = set()
    warnings = []
    radius = s.obj.R if s.kind is ObjectKind.SPHERE else DISC_THERMAL_RADIUS
    ratio_em_sc, _ = thermal.dominance_ratios(radius, s.T_e, T_i)
    if ratio_em_sc >= 1.0:
        flags.add(RegimeFlag.EMISSION_DOMINANT)
    else:
        threshold = thermal.emission_dominance_threshold(radius, s.T_e)
        warnings.append(
            "emission recoil not dominant: solved T_i "
            f"{T_i:.4g} K is below the scattering threshold {threshold:.4g} K "
            f"at T_e = {s.T_e:.4g} K; emission-only formulas are optimistic here"
        )
    if gas.impact_realm_ok(tau_c, t_csl):
        flags.add(RegimeFlag.IMPACT_REALM_OK)
    else:
        warnings.append("observation time exceeds the mean gas-collision time")
    t_qbd = qbd_law(s.kind).invert_time(s.target)
    if t_qbd >= t_csl:
        flags.add(RegimeFlag.QBD_SUBDOMINANT)
    else:
        warnings.append(
            "quantum Brownian baseline reaches the target faster than the "
            "collapse diffusion; a detection could not discriminate the two"
        )
    return frozenset(flags), tuple(warnings)


def _solve(s: Scenario, T_i: float, P: float) -> FeasibilityResult:
    law = _collapse_law(s)
    t_csl = law.invert_time(s.target)
    tau = gas.tau_disc if s.kind is ObjectKind.DISC else gas.tau_sphere
    tau_c = tau(s.T_e, P)
    flags, warnings = _regime_flags(s, T_i, t_csl, tau_c)
    return FeasibilityResult(
        T_i=T_i,
        P=P,
        t_csl=t_csl,
        tau_c=tau_c,
        regime_flags=flags,
        warnings=warnings,
        details={
            "model": s.model.name.value,
            "lambda": s.model.lam,
            "r_c": s.model.r_c,
            "kind": s.kind.value,
            "target": s.target,
        },
    )


def solve_sphere(s: Scenario) -> FeasibilityResult:
    """Full feasibility result for a sphere scenario."""
    return _solve(s, required_internal_temperature_sphere(s), required_pressure_sphere(s))


def solve_disc(s: Scenario) -> FeasibilityResult:
    """Full feasibility result for a disc scenario."""
    return _solve(s, required_internal_temperature_disc(s), required_pressure_disc(s))


def gravity_feasibility(s: Scenario, p: KarolyhazyParams | None = None) -> FeasibilityResult:
    """Feasibility for the gravity-decoherence models.

    The Karolyhazy variant evaluates the published closed forms
    (coefficients 1.16e6 and 0.03) and reports the live-derived values in
    the details; the Diosi-Penrose variant routes through the sphere/disc
    solvers with the model's effective rate.
    """
    if s.model.name is ModelName.DIOSI_PENROSE:
        result = solve_disc(s) if s.kind is ObjectKind.DISC else solve_sphere(s)
        result.details["lambda_live"] = effective_lambda_dp(s.model.r_c)
        return result
    if p is None:
        p = KarolyhazyParams()
    if s.kind is not ObjectKind.SPHERE:
        raise ValueError("the Karolyhazy closed forms apply to the sphere scenario")

    R, D = s.obj.R, s.obj.D
    T_i = (
        GRAVITY_TEMPERATURE_COEFF
        * (s.epsilon * D) ** (1.0 / 3.0)
        * math.sqrt(R / p.tau_g)
        * p.a_c ** (1.0 / 3.0)
    )
    P = (
        GRAVITY_PRESSURE_COEFF
        * s.chi
        * math.sqrt(s.T_e)
        * (p.a_c / s.target) ** (2.0 / 3.0)
        / p.tau_g
    )

    # Live derivation from the upstream laws, reported alongside.
    from .diffusion import karolyhazy_law

    law = karolyhazy_law(p)
    t_grav = law.invert_time(s.target)
    T_cubed = s.epsilon * D * R**1.5 * law.prefactor / thermal.EMISSION_FIT_COEFF
    T_i_live = T_cubed ** (1.0 / 3.0)
    P_live = gas.pressure_for_collision_time_sphere(s.T_e, t_grav / s.chi)

    # tau_c is the required mean collision time, t/chi by construction; the
    # rounded published pressure coefficient would not reproduce it exactly.
    tau_c = t_grav / s.chi
    flags, warnings = _regime_flags(s, T_i, t_grav, tau_c)
    return FeasibilityResult(
        T_i=T_i,
        P=P,
        t_csl=t_grav,
        tau_c=tau_c,
        regime_flags=flags,
        warnings=warnings,
        details={
            "model": s.model.name.value,
            "lambda": s.model.lam,
            "lambda_live": effective_lambda_karolyhazy(p),
            "T_i_live": T_i_live,
            "P_live": P_live,
            "a_c": p.a_c,
            "tau_g": p.tau_g,
            "kind": s.kind.value,
            "target": s.target,
        },
    )


# ---------------------------------------------------------------------------
# Reference tables
# ---------------------------------------------------------------------------

TABLE_COLUMNS = ("t_grw", "t_adler", "t_karolyhazy", "t_dp", "t_qbd")

# Published displacement times (s) per target; gravity columns were
# produced with the rounded effective rates 1e-24 and 1e-23.
TABLE_I_PRINTED = {
    1e-5: (13.0, 0.03, 6.3e3, 3e3, 17e2),
    1e-4: (63.0, 0.13, 3e4, 1.4e4, 17e3),
    1e-3: (292.0, 0.6, 1.4e5, 6.3e4, 17e4),
    1e-2: (135.0, 3.0, 6.3e5, 3e5, 17e5),
}
TABLE_II_PRINTED = {
    1e-4: (4.5e-2, 1e-4, 21.0, 10.0, 0.1),
    1e-3: (0.2, 5e-4, 97.0, 45.0, 1.0),
    1e-2: (1.0, 2e-3, 452.0, 210.0, 10.0),
}
# Cells whose printed value is inconsistent with the law that generates the
# rest of the column (the computed value is emitted, the mismatch flagged).
TABLE_ANOMALIES = {"I": {(1e-2, "t_grw")}, "II": set()}


@dataclass(frozen=True)
class TableRow:
    target: float
    computed: dict[str, float]
    printed: dict[str, float]
    flags: tuple[str, ...]


@dataclass(frozen=True)
class TableResult:
    table_id: str
    columns: tuple[str, ...]
    rows: tuple[TableRow, ...]
    provenance: dict


def generate_table(
    table_id: str,
    form_factors: FormFactors | None = None,
    qbd_rate: float | None = None,
) -> TableResult:
    """Recompute displacement-time table I (sphere) or II (disc).

    Collapse columns invert the live laws; gravity columns use the rounded
    published rates so the cells match print, with the live-derived rates
    recorded in the provenance.  qbd_rate overrides the calibrated linear
    baseline rate.
    """
    table_id = table_id.upper()
    if table_id not in ("I", "II"):
        raise ValueError(f"table id must be I or II, got {table_id}")
    ff = form_factors or FormFactors()
    printed = TABLE_I_PRINTED if table_id == "I" else TABLE_II_PRINTED
    kind = ObjectKind.SPHERE if table_id == "I" else ObjectKind.DISC

    def law_for(lam: float, name: ModelName) -> PowerLaw:
        model = CollapseModel(name=name, lam=lam)
        if kind is ObjectKind.SPHERE:
            return csl_sphere_law(model, ff.f_trans)
        return csl_disc_law(model, ff.f_rot)

    laws = {
        "t_grw": law_for(preset(ModelName.GRW).lam, ModelName.GRW),
        "t_adler": law_for(preset(ModelName.ADLER).lam, ModelName.ADLER),
        "t_karolyhazy": law_for(LAMBDA_KAROLYHAZY_ROUNDED, ModelName.KAROLYHAZY),
        "t_dp": law_for(LAMBDA_DP_ROUNDED, ModelName.DIOSI_PENROSE),
        "t_qbd": qbd_law(kind, qbd_rate),
    }
    anomalies = TABLE_ANOMALIES[table_id]
    rows = []
    for target, printed_values in printed.items():
        computed = {col: laws[col].invert_time(target) for col in TABLE_COLUMNS}
        flags = tuple(
            f"printed_value_inconsistent:{col}"
            for col in TABLE_COLUMNS
            if (target, col) in anomalies
        )
        rows.append(
            TableRow(
                target=target,
                computed=computed,
                printed=dict(zip(TABLE_COLUMNS, printed_values)),
                flags=flags,
            )
        )
    provenance = {
        "kind": kind.value,
        "lambda_grw": preset(ModelName.GRW).lam,
        "lambda_adler": preset(ModelName.ADLER).lam,
        "lambda_karolyhazy_used": LAMBDA_KAROLYHAZY_ROUNDED,
        "lambda_karolyhazy_live": effective_lambda_karolyhazy(KarolyhazyParams()),
        "lambda_dp_used": LAMBDA_DP_ROUNDED,
        "lambda_dp_live": effective_lambda_dp(1e-5),
        "qbd_rate": laws["t_qbd"].prefactor,
    }
    return TableResult(
        table_id=table_id,
        columns=TABLE_COLUMNS,
        rows=tuple(rows),
        provenance=provenance,
    )


# ---------------------------------------------------------------------------
# Parameter sweeps
# ---------------------------------------------------------------------------


class SweepParam(str, enum.Enum):
    EPSILON = "epsilon"
    CHI = "chi"
    TIME = "time"


@dataclass(frozen=True)
class SweepPoint:
    param_value: float
    output_name: str
    output_value: float


def sweep(param: SweepParam | str, values, s: Scenario) -> list[SweepPoint]:
    """Evaluate a solver or displacement law over a parameter grid.

    EPSILON sweeps the required internal temperature, CHI the required
    pressure, TIME the collapse displacement itself.
    """
    param = SweepParam(param)
    values = [float(v) for v in values]
    if not values:
        raise ValueError("sweep range is empty")
    if any(v <= 0 for v in values):
        raise ValueError("sweep values must be positive")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise ValueError("sweep values must be strictly ascending")

    points = []
    if param is SweepParam.TIME:
        law = _collapse_law(s)
        for t in values:
            points.append(SweepPoint(t, "displacement", law.displacement(t)))
        return points

    solver_T = (
        required_internal_temperature_disc
        if s.kind is ObjectKind.DISC
        else required_internal_temperature_sphere
    )
    solver_P = required_pressure_disc if s.kind is ObjectKind.DISC else required_pressure_sphere
    for v in values:
        if param is SweepParam.EPSILON:
            scenario = Scenario(
                obj=s.obj, model=s.model, target=s.target, epsilon=v,
                chi=s.chi, T_e=s.T_e, form_factors=s.form_factors,
            )
            points.append(SweepPoint(v, "T_i", solver_T(scenario)))
        else:
            scenario = Scenario(
                obj=s.obj, model=s.model, target=s.target, epsilon=s.epsilon,
                chi=v, T_e=s.T_e, form_factors=s.form_factors,
            )
            points.append(SweepPoint(v, "P", solver_P(scenario)))
    return points
