"""Physical constants (CGS) and explicit unit conversions.

Every downstream formula reads from the table below; no module re-declares
a constant locally.  API conventions: lengths in cm, masses in g,
temperatures in K, pressures in picoTorr, angular frequencies in rad/s.
"""

from __future__ import annotations

import enum
import math
from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class PhysicalConstants:
    hbar: float = 1.0546e-27        # erg s
    k_B: float = 1.3807e-16         # erg / K
    c_light: float = 2.998e10       # cm / s
    m_nucleon: float = 1.6726e-24   # g
    G_newton: float = 6.674e-8      # cm^3 g^-1 s^-2
    T_room: float = 300.0           # K
    amu_in_g: float = 1.6605e-24    # g

    def as_dict(self) -> dict:
        return asdict(self)


CONSTANTS = PhysicalConstants()


class MassConvention(str, enum.Enum):
    """Sphere mass conventions.

    PAPER_FIT uses M = D R^3, the convention the fitted displacement
    coefficients are consistent with; it is the default wherever those
    coefficients are being reproduced.  GEOMETRIC uses the exact sphere
    volume, M = (4 pi / 3) D R^3, and is kept for physics-consistency
    checks.
    """

    PAPER_FIT = "paper_fit"
    GEOMETRIC = "geometric"


def torr_to_picotorr(p: float) -> float:
    """Convert a pressure from Torr to picoTorr."""
    if p < 0:
        raise ValueError(f"pressure must be non-negative, got {p}")
    return p * 1e12


def picotorr_to_torr(p: float) -> float:
    """Convert a pressure from picoTorr to Torr."""
    if p < 0:
        raise ValueError(f"pressure must be non-negative, got {p}")
    return p * 1e-12


def amu_to_grams(m: float, constants: PhysicalConstants = CONSTANTS) -> float:
    """Convert a mass from atomic mass units to grams."""
    if m < 0:
        raise ValueError(f"mass must be non-negative, got {m}")
    return m * constants.amu_in_g


def grams_to_amu(m: float, constants: PhysicalConstants = CONSTANTS) -> float:
    """Convert a mass from grams to atomic mass units."""
    if m < 0:
        raise ValueError(f"mass must be non-negative, got {m}")
    return m / constants.amu_in_g


def sphere_mass(
    R: float,
    D: float,
    convention: MassConvention = MassConvention.PAPER_FIT,
) -> float:
    """Mass in grams of a sphere of radius R (cm) and density D (g/cc)."""
    if R <= 0:
        raise ValueError(f"radius must be positive, got {R}")
    if D <= 0:
        raise ValueError(f"density must be positive, got {D}")
    if convention is MassConvention.GEOMETRIC:
        return (4.0 / 3.0) * math.pi * D * R**3
    return D * R**3
