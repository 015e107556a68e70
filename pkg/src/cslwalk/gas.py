"""Mean time between gas-molecule impacts in the impact realm.

All three geometries share the same scaling, tau ~ sqrt(T/300) / P with
pressure in picoTorr; only the leading coefficient differs.  Validity of
the impact realm (individually resolvable hits) is exposed as a flag, not
enforced.
"""

from __future__ import annotations

from math import sqrt

from .constants import CONSTANTS, PhysicalConstants

SPHERE_COLLISION_COEFF = 2.0      # s, at T = 300 K and P = 1 pT
DISC_COLLISION_COEFF = 1.03       # s
PLATE_COLLISION_COEFF = 1.3e-9    # s cm^2


def _check(T: float, P: float):
    if T <= 0:
        raise ValueError(f"temperature must be positive, got {T}")
    if P <= 0:
        raise ValueError(f"pressure must be positive, got {P}")


def tau_sphere(T_e: float, P: float, constants: PhysicalConstants = CONSTANTS) -> float:
    """Mean molecule-sphere collision time (s); P in picoTorr."""
    _check(T_e, P)
    return SPHERE_COLLISION_COEFF * sqrt(T_e / constants.T_room) / P


def tau_disc(T_e: float, P: float, constants: PhysicalConstants = CONSTANTS) -> float:
    """Mean molecule-disc collision time (s); P in picoTorr."""
    _check(T_e, P)
    return DISC_COLLISION_COEFF * sqrt(T_e / constants.T_room) / P


def tau_plate(A: float, T: float, P: float, constants: PhysicalConstants = CONSTANTS) -> float:
    """Mean molecule-plate collision time (s) for plate area A (cm^2)."""
    if A <= 0:
        raise ValueError(f"area must be positive, got {A}")
    _check(T, P)
    return PLATE_COLLISION_COEFF / A * sqrt(T / constants.T_room) / P


def pressure_for_collision_time_sphere(
    T_e: float, tau: float, constants: PhysicalConstants = CONSTANTS
) -> float:
    """Pressure (picoTorr) giving mean sphere collision time tau (s)."""
    _check(T_e, tau)
    return SPHERE_COLLISION_COEFF * sqrt(T_e / constants.T_room) / tau


def pressure_for_collision_time_disc(
    T_e: float, tau: float, constants: PhysicalConstants = CONSTANTS
) -> float:
    """Pressure (picoTorr) giving mean disc collision time tau (s)."""
    _check(T_e, tau)
    return DISC_COLLISION_COEFF * sqrt(T_e / constants.T_room) / tau


def pressure_for_collision_time_plate(
    A: float, T: float, tau: float, constants: PhysicalConstants = CONSTANTS
) -> float:
    """Pressure (picoTorr) giving mean plate collision time tau (s)."""
    if A <= 0:
        raise ValueError(f"area must be positive, got {A}")
    _check(T, tau)
    return PLATE_COLLISION_COEFF / A * sqrt(T / constants.T_room) / tau


def impact_realm_ok(tau_c: float, t_observation: float) -> bool:
    """True when the mean collision time exceeds the observation time."""
    return tau_c > t_observation
