"""Collapse-induced secular heating of a quantum harmonic oscillator.

The heating rate is dE/dt = eta hbar^2 / (2m), independent of the
oscillator frequency.  The stochasticity parameter eta is a pluggable
strategy: the nucleon-counting rate (eta_0 N), a literal coherent-
enhancement formula whose magnitude is inconsistent with the counting
rate (quarantined behind an explicit flag), and a calibrated N^{2/3}
strategy used for the reference tables.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .constants import CONSTANTS, PhysicalConstants
from .models import LAMBDA_GRW, R_C_DEFAULT

# Overflow guard for exp(hbar omega / k T) in the pressure solver.
MAX_BOLTZMANN_EXPONENT = 700.0

# Calibrated coefficient of the N^{2/3} heating-rate strategy at the
# reference rate 1e-16/s: chosen so the required temperature of the
# headline oscillator (1e12 nucleons, omega = 1e10 rad/s, epsilon = 0.1,
# t = 1 s) comes out at the published 3 mK.  With this single anchor,
# every cell of reference tables III and IV is reproduced within 4%.
# calibrate_effective_eta() rederives the number.
EFFECTIVE_ETA_COEFF = 2.77954e7   # cm^-2 s^-1


class EtaLaw(str, enum.Enum):
    GRW = "grw"
    CSL = "csl"
    CUSTOM = "custom"


@dataclass(frozen=True)
class OscillatorSpec:
    """Oscillator target: N nucleons at angular frequency omega (rad/s),
    plate area A (cm^2) facing the gas, quality factor Q.
    """

    N: float
    omega: float
    A: float = 1e-12
    Q: float = 1e5
    r_c: float = R_C_DEFAULT
    nucleon_number_density: float = 1e24   # cm^-3

    def __post_init__(self):
        for label in ("N", "omega", "A", "Q", "r_c", "nucleon_number_density"):
            if getattr(self, label) <= 0:
                raise ValueError(f"{label} must be positive")

    def mass(self, constants: PhysicalConstants = CONSTANTS) -> float:
        return self.N * constants.m_nucleon

    @classmethod
    def from_mass_amu(cls, mass_amu: float, omega: float, constants: PhysicalConstants = CONSTANTS, **kwargs):
        if mass_amu <= 0:
            raise ValueError(f"mass must be positive, got {mass_amu}")
        N = mass_amu * constants.amu_in_g / constants.m_nucleon
        return cls(N=N, omega=omega, **kwargs)


def eta_grw(N: float, lam: float = LAMBDA_GRW, r_c: float = R_C_DEFAULT) -> float:
    """Nucleon-counting heating rate, (lam / r_c^2) N, in cm^-2 s^-1.

    The per-nucleon rate lam/r_c^2 is 1e-6 at the standard parameters.
    """
    if N <= 0:
        raise ValueError(f"nucleon count must be positive, got {N}")
    return lam / r_c**2 * N


def eta_csl_literal(
    N: float,
    number_density: float = 1e24,
    r_c: float = R_C_DEFAULT,
    lam: float = LAMBDA_GRW,
    allow_inconsistent: bool = False,
) -> float:
    """Literal coherent-enhancement heating rate,
    kappa N^{2/3} D^{4/3} (pi r_c^2)^{-1/2} with kappa = lam (4 pi r_c^2)^{-3/2}.

    As printed this evaluates tens of orders of magnitude above the
    nucleon-counting rate and cannot reproduce the published temperature
    shift from 2 mK to 3 mK; its intended normalization is not
    recoverable.  It is kept verbatim for reference and requires
    allow_inconsistent=True to evaluate.  Use eta_csl_effective for a
    usable N^{2/3} strategy.
    """
    if not allow_inconsistent:
        raise ValueError(
            "eta_csl_literal magnitude is inconsistent with the counting rate; "
            "pass allow_inconsistent=True to evaluate it anyway"
        )
    if N <= 0 or number_density <= 0:
        raise ValueError("N and number_density must be positive")
    kappa = lam / (4.0 * math.pi * r_c**2) ** 1.5
    return kappa * N ** (2.0 / 3.0) * number_density ** (4.0 / 3.0) / math.sqrt(math.pi * r_c**2)


def eta_csl_effective(N: float, lam: float = LAMBDA_GRW) -> float:
    """Calibrated N^{2/3} heating rate, linear in the collapse rate.

    This is the strategy that reproduces reference tables III and IV; see
    EFFECTIVE_ETA_COEFF for the calibration anchor.
    """
    if N <= 0:
        raise ValueError(f"nucleon count must be positive, got {N}")
    return EFFECTIVE_ETA_COEFF * (lam / LAMBDA_GRW) * N ** (2.0 / 3.0)


def calibrate_effective_eta(
    T_anchor: float = 3e-3,
    N: float = 1e12,
    omega: float = 1e10,
    epsilon: float = 0.1,
    t: float = 1.0,
    constants: PhysicalConstants = CONSTANTS,
) -> float:
    """Rederive the N^{2/3} strategy coefficient from its anchor point:
    the published required temperature T_anchor for the headline
    oscillator.  Returns the per-N^{2/3} coefficient in cm^-2 s^-1.
    """
    m = N * constants.m_nucleon
    x = constants.hbar * omega / (constants.k_B * T_anchor)
    eta = 2.0 * m * omega / (epsilon * constants.hbar * t * math.expm1(x))
    return eta / N ** (2.0 / 3.0)


def eta_for(spec: OscillatorSpec, law: EtaLaw | str, lam: float = LAMBDA_GRW,
            custom_value: float | None = None) -> float:
    """Resolve an eta strategy name to a value for the given oscillator."""
    law = EtaLaw(law)
    if law is EtaLaw.GRW:
        return eta_grw(spec.N, lam, spec.r_c)
    if law is EtaLaw.CSL:
        return eta_csl_effective(spec.N, lam)
    if custom_value is None or custom_value < 0:
        raise ValueError("custom eta law requires a non-negative value")
    return custom_value


def csl_energy_gain(eta: float, m: float, t: float, constants: PhysicalConstants = CONSTANTS) -> float:
    """Secular energy gain (erg) after time t (s): eta hbar^2 t / (2 m).

    Independent of the oscillator frequency.
    """
    if m <= 0:
        raise ValueError(f"mass must be positive, got {m}")
    if eta < 0 or t < 0:
        raise ValueError("eta and t must be non-negative")
    return eta * constants.hbar**2 * t / (2.0 * m)


def mean_thermal_energy(
    omega: float,
    T: float,
    include_zero_point: bool = True,
    constants: PhysicalConstants = CONSTANTS,
) -> float:
    """Mean energy (erg) of a quantum oscillator at temperature T (K):
    hbar omega [1/2 + 1/(exp(hbar omega / k T) - 1)].

    With include_zero_point=False only the temperature-dependent
    occupation term is returned (zero-point background subtracted).  The
    occupation underflows safely to 0 for very large hbar omega / k T.
    """
    if omega <= 0 or T <= 0:
        raise ValueError("omega and T must be positive")
    x = constants.hbar * omega / (constants.k_B * T)
    if x > MAX_BOLTZMANN_EXPONENT:
        occupation = 0.0
    else:
        occupation = constants.hbar * omega / math.expm1(x)
    zero_point = 0.5 * constants.hbar * omega if include_zero_point else 0.0
    return zero_point + occupation


def required_temperature(
    spec: OscillatorSpec,
    eta: float,
    epsilon: float,
    t: float,
    constants: PhysicalConstants = CONSTANTS,
) -> float:
    """Temperature (K) at which the thermal occupation energy equals the
    fraction epsilon of the collapse energy gain over time t:
    T = (hbar omega / k) / ln(2 m omega / (epsilon eta hbar t) + 1).
    """
    if eta <= 0 or epsilon <= 0 or t <= 0:
        raise ValueError("eta, epsilon and t must be positive")
    m = spec.mass(constants)
    ratio = 2.0 * m * spec.omega / (epsilon * eta * constants.hbar * t)
    return (constants.hbar * spec.omega / constants.k_B) / math.log1p(ratio)


def required_pressure(
    spec: OscillatorSpec,
    eta: float,
    epsilon: float,
    chi: float,
    T: float,
    constants: PhysicalConstants = CONSTANTS,
) -> float:
    """Pressure (picoTorr) at which the heating observation time is the
    fraction chi of the mean molecule-plate collision time:
    P = chi epsilon (1.3e-9 eta hbar / (2 m omega A)) sqrt(T/300) (exp(x) - 1)
    with x = hbar omega / k T.
    """
    if eta <= 0 or epsilon <= 0 or chi <= 0 or T <= 0:
        raise ValueError("eta, epsilon, chi and T must be positive")
    x = constants.hbar * spec.omega / (constants.k_B * T)
    if x > MAX_BOLTZMANN_EXPONENT:
        raise OverflowError(
            f"hbar omega / k T = {x:.3g} overflows the Boltzmann factor; "
            "the oscillator is effectively in its ground state"
        )
    m = spec.mass(constants)
    from .gas import PLATE_COLLISION_COEFF

    return (
        chi
        * epsilon
        * PLATE_COLLISION_COEFF
        * eta
        * constants.hbar
        / (2.0 * m * spec.omega * spec.A)
        * math.sqrt(T / constants.T_room)
        * math.expm1(x)
    )


def min_observation_time(Q: float, omega: float) -> float:
    """Shortest observation time (s) resolvable at quality factor Q: Q/omega."""
    if Q <= 0 or omega <= 0:
        raise ValueError("Q and omega must be positive")
    return Q / omega


def classical_displacement(deltaE: float, m: float, omega: float) -> float:
    """Classical amplitude increase (cm) equivalent to an energy gain
    deltaE (erg): sqrt(2 deltaE / (m omega^2)).
    """
    if m <= 0 or omega <= 0:
        raise ValueError("m and omega must be positive")
    if deltaE < 0:
        raise ValueError(f"energy gain must be non-negative, got {deltaE}")
    return math.sqrt(2.0 * deltaE / (m * omega**2))


# ---------------------------------------------------------------------------
# Reference tables III (temperature, K) and IV (pressure, picoTorr)
# ---------------------------------------------------------------------------

TABLE_MASSES_AMU = (1e6, 1e8, 1e10, 1e12)
TABLE_OMEGAS = (1e3, 1e6, 1e9)    # rad/s; the published grid labels these Hz

TABLE_III_PRINTED = {
    1e6: (1.6e-9, 6.5e-7, 4.1e-4),
    1e8: (1.2e-9, 5.7e-7, 3.8e-4),
    1e10: (9.6e-10, 5.1e-7, 3.5e-4),
    1e12: (8e-10, 4.7e-7, 3.3e-4),
}
TABLE_IV_PRINTED = {
    1e6: (3e-4, 0.0063, 0.1576),
    1e8: (2.69e-4, 0.0059, 0.1515),
    1e10: (2.42e-4, 0.0056, 0.1461),
    1e12: (2.21e-4, 0.0053, 0.1412),
}
TABLE_EPSILON = 0.1
TABLE_CHI = 0.1
TABLE_TIME = 1.0       # s
TABLE_AREA = 1e-12     # cm^2


@dataclass(frozen=True)
class OscillatorTableCell:
    mass_amu: float
    omega: float
    computed: float
    printed: float


@dataclass(frozen=True)
class OscillatorTableResult:
    table_id: str
    cells: tuple[OscillatorTableCell, ...]
    provenance: dict


def generate_oscillator_table(
    table_id: str,
    eta_law: EtaLaw | str = EtaLaw.CSL,
    lam: float = LAMBDA_GRW,
) -> OscillatorTableResult:
    """Recompute reference table III (required temperature) or IV
    (required pressure) on the published mass/frequency grid.

    The default eta strategy is the calibrated N^{2/3} one, which is the
    construction consistent with the published grids; frequencies are
    taken as rad/s.  Pressures evaluate at the matching required
    temperature, so each table IV cell is self-consistent with its table
    III counterpart.
    """
    table_id = table_id.upper()
    if table_id not in ("III", "IV"):
        raise ValueError(f"table id must be III or IV, got {table_id}")
    printed_grid = TABLE_III_PRINTED if table_id == "III" else TABLE_IV_PRINTED
    cells = []
    for mass_amu in TABLE_MASSES_AMU:
        for omega, printed in zip(TABLE_OMEGAS, printed_grid[mass_amu]):
            spec = OscillatorSpec.from_mass_amu(mass_amu, omega, A=TABLE_AREA)
            eta = eta_for(spec, eta_law, lam)
            T = required_temperature(spec, eta, TABLE_EPSILON, TABLE_TIME)
            if table_id == "III":
                computed = T
            else:
                computed = required_pressure(spec, eta, TABLE_EPSILON, TABLE_CHI, T)
            cells.append(
                OscillatorTableCell(
                    mass_amu=mass_amu, omega=omega, computed=computed, printed=printed
                )
            )
    provenance = {
        "eta_law": EtaLaw(eta_law).value,
        "lambda": lam,
        "epsilon": TABLE_EPSILON,
        "chi": TABLE_CHI,
        "time_s": TABLE_TIME,
        "plate_area_cm2": TABLE_AREA,
        "omega_convention": "rad/s",
        "effective_eta_coeff": EFFECTIVE_ETA_COEFF,
    }
    return OscillatorTableResult(table_id=table_id, cells=tuple(cells), provenance=provenance)
