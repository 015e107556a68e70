"""Central tolerance configuration for reproduction checks.

Relative tolerances are fractions (0.02 means 2%); factor tolerances are
multiplicative bands.  Tests and cross-check assertions read from here so
no tolerance is a scattered literal.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    # closed-form coefficient closures against the published values
    coefficient_closure: float = 0.05
    csl_rate_constant: float = 0.02          # the "20" prefactor
    emission_fit_consistency: float = 0.02   # fitted vs first-principles thermal law

    # solver reproduction of published scenario values
    sphere_temperature: float = 0.02
    sphere_pressure: float = 0.05
    disc_temperature: float = 0.05
    disc_pressure: float = 0.10
    gravity_temperature: float = 0.02
    gravity_pressure: float = 0.05
    dp_disc: float = 0.10

    # table reproduction
    table_cell: float = 0.10                 # tables I and II
    oscillator_table_factor: float = 3.0     # tables III and IV

    # oscillator headline closure
    oscillator_energy: float = 0.03
    oscillator_temperature_factor: float = 1.5
    oscillator_pressure_factor: float = 3.0

    # effective-rate rounding documented for the gravity models
    lambda_karolyhazy_factor: float = 3.0
    lambda_dp_factor: float = 2.0

    # numerical identities
    machine_rel: float = 1e-12
    self_consistency: float = 1e-6


TOLERANCES = Tolerances()


def within(value: float, reference: float, rel: float) -> bool:
    """True when value is within the relative tolerance of reference."""
    return abs(value - reference) <= rel * abs(reference)


def within_factor(value: float, reference: float, factor: float) -> bool:
    """True when value/reference lies in [1/factor, factor]."""
    if value <= 0 or reference <= 0:
        return False
    ratio = value / reference
    return 1.0 / factor <= ratio <= factor
