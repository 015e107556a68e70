"""Monte-Carlo oracle for the closed-form diffusion laws.

Simulates momentum-diffusion random walks whose ensemble statistics must
reproduce the analytic t^{3/2} displacement laws.  The stochastic system
is linear with additive noise:

    dp = sqrt(2 D_p) dW,    dx = (p / M) dt,    start from rest,

so the per-step momentum update is exact in distribution; positions use
trapezoidal accumulation, whose variance bias is O(1/n_steps^2).

Per-trajectory random streams are split from the master seed by index
(SeedSequence spawn keys), so results are independent of evaluation order
and bit-reproducible for a fixed configuration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import CONSTANTS, PhysicalConstants
from .models import CollapseModel
from .diffusion import DISC_ROTATION_COEFF, DISC_ROTATION_REF_SQRT_LAMBDA


@dataclass(frozen=True)
class SimConfig:
    """Monte-Carlo run configuration.

    diffusion_coefficient is (g cm/s)^2 / s for translation or
    (erg s)^2 / s for rotation; inertia is the matching mass (g) or
    moment of inertia (g cm^2).
    """

    diffusion_coefficient: float
    inertia: float
    t_final: float
    dt: float
    n_traj: int
    seed: int
    n_record: int = 50

    def __post_init__(self):
        if self.diffusion_coefficient < 0:
            raise ValueError("diffusion coefficient must be non-negative")
        if self.inertia <= 0:
            raise ValueError("inertia must be positive")
        if self.dt <= 0:
            raise ValueError("dt must be positive")
        if self.t_final < self.dt:
            raise ValueError("t_final must be at least dt")
        if self.n_traj < 2:
            raise ValueError("need at least two trajectories")
        if self.n_record < 1:
            raise ValueError("need at least one recording point")

    @property
    def n_steps(self) -> int:
        return max(1, int(round(self.t_final / self.dt)))


@dataclass
class TrajectoryEnsemble:
    """Recorded displacement samples and their RMS statistics."""

    times: np.ndarray                 # (n_record,)
    displacement_samples: np.ndarray  # (n_record, n_traj)
    rms: np.ndarray                   # (n_record,)
    rms_standard_error: np.ndarray    # (n_record,)
    seed_used: int
    warnings: tuple[str, ...] = ()

    @property
    def final_rms(self) -> float:
        return float(self.rms[-1])

    @property
    def final_rms_standard_error(self) -> float:
        return float(self.rms_standard_error[-1])

    def fit_powerlaw(self) -> tuple[float, float]:
        return fit_powerlaw(self.times, self.rms)


def csl_momentum_diffusion_coefficient(
    model: CollapseModel,
    f_trans: float,
    n_nucleons: float,
    constants: PhysicalConstants = CONSTANTS,
) -> float:
    """Momentum diffusion constant, (g cm/s)^2 / s, fixed by matching the
    walk's second moment <x^2> = (2/3) (D_p / M^2) t^3 to the sphere
    displacement law: D_p = lam hbar^2 f N^2 / (4 r_c^2).
    """
    if f_trans <= 0 or n_nucleons <= 0:
        raise ValueError("form factor and nucleon count must be positive")
    return model.lam * constants.hbar**2 * f_trans * n_nucleons**2 / (4.0 * model.r_c**2)


def csl_rotational_diffusion_coefficient(
    model: CollapseModel,
    f_rot: float,
    inertia: float,
) -> float:
    """Angular-momentum diffusion constant, (erg s)^2 / s, matching
    <theta^2> = (2/3) (D_L / I^2) t^3 to the disc rotation law.
    """
    if f_rot <= 0 or inertia <= 0:
        raise ValueError("form factor and inertia must be positive")
    prefactor = (
        DISC_ROTATION_COEFF * math.sqrt(f_rot) * math.sqrt(model.lam)
        / DISC_ROTATION_REF_SQRT_LAMBDA
    )
    return 1.5 * inertia**2 * prefactor**2


def _trajectory_rng(seed: int, index: int) -> np.random.Generator:
    # spawn_key indexing makes the stream a pure function of (seed, index)
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(index,)))


def simulate(config: SimConfig) -> TrajectoryEnsemble:
    """Run the ensemble and return recorded displacement statistics.

    Each step draws a zero-mean Gaussian momentum kick with variance
    2 D_p dt; positions integrate p/M with trapezoidal weights, starting
    from rest.  Identical seed and configuration give bit-identical
    output.
    """
    warnings = []
    if config.dt > config.t_final / 100.0:
        warnings.append(
            "dt exceeds t_final/100; discretization bias may be visible"
        )
    n_steps = config.n_steps
    n_record = min(config.n_record, n_steps)
    record_idx = np.unique(
        np.round(np.linspace(1, n_steps, n_record)).astype(int)
    )
    times = record_idx * config.dt

    kick_sigma = math.sqrt(2.0 * config.diffusion_coefficient * config.dt)
    samples = np.empty((record_idx.size, config.n_traj))
    scale = config.dt / config.inertia
    for i in range(config.n_traj):
        rng = _trajectory_rng(config.seed, i)
        kicks = rng.normal(0.0, kick_sigma, n_steps)
        p = np.cumsum(kicks)
        # trapezoid over p with p(0) = 0: x_k = dt/M (sum_{j<=k} p_j - p_k/2)
        x = (np.cumsum(p) - 0.5 * p) * scale
        samples[:, i] = x[record_idx - 1]

    mean_sq = np.mean(samples**2, axis=1)
    rms = np.sqrt(mean_sq)
    se_mean_sq = np.std(samples**2, axis=1, ddof=1) / math.sqrt(config.n_traj)
    with np.errstate(divide="ignore", invalid="ignore"):
        se_rms = np.where(rms > 0, se_mean_sq / (2.0 * rms), 0.0)
    return TrajectoryEnsemble(
        times=times,
        displacement_samples=samples,
        rms=rms,
        rms_standard_error=se_rms,
        seed_used=config.seed,
        warnings=tuple(warnings),
    )


def fit_powerlaw(times, values) -> tuple[float, float]:
    """Least-squares power-law fit on log-log axes.

    Returns (exponent, prefactor) for values ~ prefactor * times^exponent.
    Requires at least five points, strictly increasing positive times and
    positive values.
    """
    times = np.asarray(times, dtype=float)
    values = np.asarray(values, dtype=float)
    if times.ndim != 1 or times.size < 5:
        raise ValueError("need at least five time points")
    if times.size != values.size:
        raise ValueError("times and values must have equal length")
    if np.any(times <= 0) or np.any(np.diff(times) <= 0):
        raise ValueError("times must be positive and strictly increasing")
    if np.any(values <= 0):
        raise ValueError("values must be positive for a log-log fit")
    slope, intercept = np.polyfit(np.log(times), np.log(values), 1)
    return float(slope), float(math.exp(intercept))
