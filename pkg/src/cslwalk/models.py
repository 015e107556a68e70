"""Stochastic-collapse model parameterizations and geometric form factors.

A collapse model is a (rate, localization length) pair.  Named presets
carry the standard literature values; gravity-induced decoherence enters
through effective rates computed from its own parameters.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .constants import CONSTANTS, PhysicalConstants

# Standard collapse rates (1/s)
LAMBDA_GRW = 1e-16
LAMBDA_CSL = 1e-16
LAMBDA_CSL_ALT = 1e-17      # alternative CSL normalization in use
LAMBDA_ADLER = 1e-8
# Rounded effective rates quoted for the gravity models; the defining
# relations below give 2.5e-24 and 1.77e-23.  Presets keep the rounded
# values so that table reproduction matches print.
LAMBDA_KAROLYHAZY_ROUNDED = 1e-24
LAMBDA_DP_ROUNDED = 1e-23

R_C_DEFAULT = 1e-5          # cm, critical localization length


class ModelName(str, enum.Enum):
    GRW = "grw"
    CSL = "csl"
    ADLER = "adler"
    KAROLYHAZY = "karolyhazy"
    DIOSI_PENROSE = "dp"
    CUSTOM = "custom"


@dataclass(frozen=True)
class CollapseModel:
    """A named collapse parameterization: rate lam (1/s), length r_c (cm)."""

    name: ModelName
    lam: float
    r_c: float = R_C_DEFAULT

    def __post_init__(self):
        if self.lam < 0:
            raise ValueError(f"collapse rate must be non-negative, got {self.lam}")
        if self.r_c <= 0:
            raise ValueError(f"localization length must be positive, got {self.r_c}")


_PRESET_RATES = {
    ModelName.GRW: LAMBDA_GRW,
    ModelName.CSL: LAMBDA_CSL,
    ModelName.ADLER: LAMBDA_ADLER,
    ModelName.KAROLYHAZY: LAMBDA_KAROLYHAZY_ROUNDED,
    ModelName.DIOSI_PENROSE: LAMBDA_DP_ROUNDED,
}


def preset(name: ModelName | str, lam: float | None = None, r_c: float | None = None) -> CollapseModel:
    """Build a collapse model from a named preset, with optional overrides.

    CUSTOM requires an explicit rate.  For CSL the alternative rate 1e-17
    is selectable via the lam override.
    """
    name = ModelName(name)
    if name is ModelName.CUSTOM:
        if lam is None:
            raise ValueError("custom model requires an explicit rate")
    elif lam is None:
        lam = _PRESET_RATES[name]
    return CollapseModel(name=name, lam=lam, r_c=R_C_DEFAULT if r_c is None else r_c)


@dataclass(frozen=True)
class FormFactors:
    """Geometric suppression factors for translation and rotation.

    Stored as anchor values: f_trans = 0.62 holds for a sphere with
    R = r_c, f_rot = 1/3 for a disc with thickness ~0.5 r_c and radius
    ~2 r_c.  Other geometries must supply their own values.
    """

    f_trans: float = 0.62
    f_rot: float = 1.0 / 3.0

    def __post_init__(self):
        for label, f in (("f_trans", self.f_trans), ("f_rot", self.f_rot)):
            if not 0 < f <= 1:
                raise ValueError(f"{label} must be in (0, 1], got {f}")


@dataclass(frozen=True)
class KarolyhazyParams:
    """Gravity-decoherence parameters: coherence cell a_c (cm), time tau_g (s).

    The reference point a_c = 1e-5 cm, tau_g = 1000 s corresponds to the
    micro-macro transition for a 1e-5 cm, 1 g/cc object.  a_c = 0 is the
    degenerate no-coherence-cell limit (zero diffusion).
    """

    a_c: float = 1e-5
    tau_g: float = 1000.0

    def __post_init__(self):
        if self.a_c < 0:
            raise ValueError(f"coherence cell length must be non-negative, got {self.a_c}")
        if self.tau_g <= 0:
            raise ValueError(f"decoherence time must be positive, got {self.tau_g}")


def effective_lambda_karolyhazy(p: KarolyhazyParams) -> float:
    """Effective collapse rate (1/s) that makes the sphere displacement law
    reproduce the Karolyhazy gravity displacement 0.1 a_c (t/tau_g)^{3/2}.

    Matching the two t^{3/2} laws gives lam = (a_c / (200 tau_g^{3/2}))^2,
    which is 2.5e-24 at the reference point (quoted rounded as 1e-24).
    """
    return (p.a_c / (200.0 * p.tau_g**1.5)) ** 2


def effective_lambda_dp(a: float, constants: PhysicalConstants = CONSTANTS) -> float:
    """Effective Diosi-Penrose collapse rate, G m_nucleon^2 / (a hbar), in 1/s.

    Evaluates to ~1.77e-23 at a = 1e-5 cm (quoted rounded as 1e-23).
    """
    if a <= 0:
        raise ValueError(f"localization length must be positive, got {a}")
    return constants.G_newton * constants.m_nucleon**2 / (a * constants.hbar)
