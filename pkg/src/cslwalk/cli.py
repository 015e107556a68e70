"""Command-line surface tying the library together.

Subcommands: constants, sphere, disc, gravity, feasibility, oscillator,
table, sweep, curve, simulate.  Results go to stdout or --out as JSON or
CSV; every emitted file embeds a run record (command line, effective
parameters, constants snapshot, version, warnings) for provenance.

Parameter precedence: command-line flag, then config file (--config or
the CSLWALK_CONFIG environment variable, "key = value" lines), then the
built-in default.  Exit codes: 0 success, 2 validation error, 3 regime
violation under --strict.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from . import __version__, feasibility, gas, oscillator
from .constants import CONSTANTS
from .diffusion import (
    DiscSpec,
    LawTag,
    ObjectKind,
    PowerLaw,
    SphereSpec,
    csl_disc_law,
    csl_sphere_law,
    displacement_curve,
    karolyhazy_law,
    qbd_law,
)
from .models import FormFactors, KarolyhazyParams, ModelName, preset
from .simulate import (
    SimConfig,
    csl_momentum_diffusion_coefficient,
    csl_rotational_diffusion_coefficient,
    fit_powerlaw,
    simulate,
)
from .thermal import EMISSION_FIT_COEFF

CONFIG_ENV_VAR = "CSLWALK_CONFIG"

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_REGIME = 3


def load_config(path: str) -> dict[str, str]:
    """Parse a plain "key = value" config file; '#' starts a comment."""
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
            key, value = line.split("=", 1)
            values[key.strip()] = value.strip()
    return values


@dataclass
class Params:
    """Resolve parameters with flag > config file > default precedence."""

    args: argparse.Namespace
    config: dict[str, str]
    used: dict = field(default_factory=dict)

    def get(self, key: str, default, cast=float):
        value = getattr(self.args, key, None)
        if value is None:
            if key in self.config:
                value = cast(self.config[key])
            else:
                value = default
        self.used[key] = value
        return value


def _run_record(args: argparse.Namespace, params: Params, warnings=()) -> dict:
    return {
        "command": args.command_line,
        "config": dict(sorted(params.used.items(), key=lambda kv: kv[0])),
        "constants": CONSTANTS.as_dict(),
        "version": __version__,
        "warnings": list(warnings),
    }


def _fmt(value) -> str:
    if isinstance(value, float):
        return f"{value:.6e}"
    return str(value)


def _write(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def emit_json(result: dict, record: dict, out: str | None):
    payload = {"run_record": record, "result": result}
    _write(json.dumps(payload, indent=2) + "\n", out)


def emit_csv(header, rows, record: dict, out: str | None):
    lines = ["# run_record: " + json.dumps(record, separators=(",", ":"))]
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    _write("\n".join(lines) + "\n", out)


# ---------------------------------------------------------------------------
# shared argument groups
# ---------------------------------------------------------------------------


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument("--out", help="write output to this path instead of stdout")
    parser.add_argument("--config", help="config file path (key = value lines)")


def _add_model(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--model",
        choices=[m.value for m in ModelName],
        help="collapse model preset (default grw)",
    )
    parser.add_argument("--lambda", dest="lam", type=float, help="collapse rate override (1/s)")
    parser.add_argument("--rc", type=float, help="localization length override (cm)")


def _add_scenario(parser: argparse.ArgumentParser, kind: str):
    parser.add_argument("--epsilon", type=float, help="thermal/collapse displacement fraction")
    parser.add_argument("--chi", type=float, help="observation/collision time fraction")
    parser.add_argument("--Te", dest="te", type=float, help="external temperature (K)")
    unit = "rad" if kind == "disc" else "cm"
    parser.add_argument("--target", type=float, help=f"target displacement ({unit})")
    parser.add_argument("--R", dest="radius", type=float, help="object radius (cm)")
    parser.add_argument("--D", dest="density", type=float, help="object density (g/cc)")
    parser.add_argument("--f-trans", dest="f_trans", type=float, help="translation form factor")
    parser.add_argument("--f-rot", dest="f_rot", type=float, help="rotation form factor")
    parser.add_argument(
        "--strict",
        action="store_true",
        help="exit 3 when any regime flag is violated",
    )


def _model_from(params: Params, default_name: str = "grw"):
    name = params.get("model", default_name, str)
    lam = params.get("lam", None, float)
    r_c = params.get("rc", None, float)
    return preset(name, lam=lam, r_c=r_c)


def _form_factors(params: Params) -> FormFactors:
    return FormFactors(
        f_trans=params.get("f_trans", 0.62, float),
        f_rot=params.get("f_rot", 1.0 / 3.0, float),
    )


def _scenario(params: Params, kind: ObjectKind, default_te: float = 100.0):
    model = _model_from(params)
    ff = _form_factors(params)
    if kind is ObjectKind.DISC:
        obj = DiscSpec(D=params.get("density", 1.0, float))
        target_default = 1e-3
    else:
        obj = SphereSpec(
            R=params.get("radius", 1e-5, float),
            D=params.get("density", 1.0, float),
        )
        target_default = 1e-5
    return feasibility.Scenario(
        obj=obj,
        model=model,
        target=params.get("target", target_default, float),
        epsilon=params.get("epsilon", 0.1, float),
        chi=params.get("chi", 0.1, float),
        T_e=params.get("te", default_te, float),
        form_factors=ff,
    )


def _feasibility_json(result: feasibility.FeasibilityResult) -> dict:
    return {
        "T_i_K": result.T_i,
        "P_picotorr": result.P,
        "t_csl_s": result.t_csl,
        "tau_c_s": result.tau_c,
        "regime_flags": sorted(f.value for f in result.regime_flags),
        "violated_flags": sorted(f.value for f in result.violated_flags),
        "warnings": list(result.warnings),
        "details": result.details,
    }


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------


def cmd_constants(args, config) -> int:
    params = Params(args, config)
    record = _run_record(args, params)
    emit_json(CONSTANTS.as_dict(), record, args.out)
    return EXIT_OK


def _finish_feasibility(args, params, result) -> int:
    record = _run_record(args, params, result.warnings)
    emit_json(_feasibility_json(result), record, args.out)
    if args.strict and result.violated_flags:
        return EXIT_REGIME
    return EXIT_OK


def cmd_sphere(args, config) -> int:
    params = Params(args, config)
    result = feasibility.solve_sphere(_scenario(params, ObjectKind.SPHERE))
    return _finish_feasibility(args, params, result)


def cmd_disc(args, config) -> int:
    params = Params(args, config)
    result = feasibility.solve_disc(_scenario(params, ObjectKind.DISC))
    return _finish_feasibility(args, params, result)


def cmd_gravity(args, config) -> int:
    params = Params(args, config)
    kind = ObjectKind(params.get("kind", "sphere", str))
    scenario = _scenario(params, kind, default_te=1.0)
    if scenario.model.name not in (ModelName.KAROLYHAZY, ModelName.DIOSI_PENROSE):
        scenario = feasibility.Scenario(
            obj=scenario.obj,
            model=preset(ModelName.KAROLYHAZY),
            target=scenario.target,
            epsilon=scenario.epsilon,
            chi=scenario.chi,
            T_e=scenario.T_e,
            form_factors=scenario.form_factors,
        )
    kparams = KarolyhazyParams(
        a_c=params.get("ac", 1e-5, float),
        tau_g=params.get("taug", 1000.0, float),
    )
    result = feasibility.gravity_feasibility(scenario, kparams)
    return _finish_feasibility(args, params, result)


def cmd_oscillator(args, config) -> int:
    params = Params(args, config)
    spec = oscillator.OscillatorSpec.from_mass_amu(
        params.get("mass_amu", 1e12, float),
        params.get("omega", 1e10, float),
        A=params.get("area", 1e-12, float),
        Q=params.get("q", 1e5, float),
        r_c=params.get("rc", 1e-5, float) or 1e-5,
    )
    lam = params.get("lam", None, float)
    if lam is None:
        lam = preset(params.get("model", "grw", str)).lam
        params.used["lam"] = lam
    eta_law = params.get("eta_law", "grw", str)
    eta = oscillator.eta_for(spec, eta_law, lam, params.get("eta", None, float))
    epsilon = params.get("epsilon", 0.1, float)
    chi = params.get("chi", 0.1, float)
    t = params.get("t", 1.0, float)
    delta_e = oscillator.csl_energy_gain(eta, spec.mass(), t)
    T_req = oscillator.required_temperature(spec, eta, epsilon, t)
    P_req = oscillator.required_pressure(spec, eta, epsilon, chi, T_req)
    result = {
        "delta_e_erg": delta_e,
        "required_temperature_k": T_req,
        "required_pressure_pt": P_req,
        "min_observation_time_s": oscillator.min_observation_time(spec.Q, spec.omega),
        "classical_displacement_cm": oscillator.classical_displacement(
            delta_e, spec.mass(), spec.omega
        ),
        "zero_point_energy_erg": 0.5 * CONSTANTS.hbar * spec.omega,
        "eta_cm2_s": eta,
        "eta_law": eta_law,
        "n_nucleons": spec.N,
        "mass_g": spec.mass(),
        "tau_c_s": gas.tau_plate(spec.A, T_req, P_req),
    }
    record = _run_record(args, params)
    emit_json(result, record, args.out)
    return EXIT_OK


def cmd_table(args, config) -> int:
    params = Params(args, config)
    table_id = args.id.upper()
    if table_id in ("I", "II"):
        qbd_key = "qbd_rate_sphere" if table_id == "I" else "qbd_rate_disc"
        result = feasibility.generate_table(
            table_id,
            form_factors=_form_factors(params),
            qbd_rate=params.get(qbd_key, None, float),
        )
        header = ["target"]
        for col in result.columns:
            header += [f"{col}_computed", f"{col}_printed"]
        header.append("flags")
        rows = []
        for row in result.rows:
            cells: list = [row.target]
            for col in result.columns:
                cells += [row.computed[col], row.printed[col]]
            cells.append(";".join(row.flags))
            rows.append(cells)
        record = _run_record(args, params)
        record["provenance"] = result.provenance
        emit_csv(header, rows, record, args.out)
        return EXIT_OK
    if table_id in ("III", "IV"):
        lam = params.get("lam", None, float)
        if lam is None:
            lam = preset(params.get("model", "grw", str)).lam
            params.used["lam"] = lam
        result = oscillator.generate_oscillator_table(
            table_id, eta_law=params.get("eta_law", "csl", str), lam=lam
        )
        unit = "K" if table_id == "III" else "picotorr"
        header = ["mass_amu", "omega_rad_s", f"computed_{unit}", f"printed_{unit}"]
        rows = [[c.mass_amu, c.omega, c.computed, c.printed] for c in result.cells]
        record = _run_record(args, params)
        record["provenance"] = result.provenance
        emit_csv(header, rows, record, args.out)
        return EXIT_OK
    raise ValueError(f"unknown table id {args.id!r}; expected I, II, III or IV")


def _grid(params: Params) -> list[float]:
    import math as _math

    start = params.get("start", None, float)
    stop = params.get("stop", None, float)
    num = int(params.get("num", 25, int))
    if start is None or stop is None:
        raise ValueError("--start and --stop are required")
    if start <= 0 or stop <= start or num < 2:
        raise ValueError("need 0 < start < stop and at least two points")
    spacing = params.get("spacing", "log", str)
    if spacing == "log":
        ratio = (stop / start) ** (1.0 / (num - 1))
        return [start * ratio**i for i in range(num)]
    if spacing == "linear":
        step = (stop - start) / (num - 1)
        return [start + step * i for i in range(num)]
    raise ValueError(f"spacing must be log or linear, got {spacing!r}")


def cmd_sweep(args, config) -> int:
    params = Params(args, config)
    kind = ObjectKind(params.get("kind", "sphere", str))
    scenario = _scenario(params, kind)
    values = _grid(params)
    points = feasibility.sweep(args.param, values, scenario)
    header = [args.param, points[0].output_name, "kind", "model"]
    rows = [
        [p.param_value, p.output_value, kind.value, scenario.model.name.value]
        for p in points
    ]
    record = _run_record(args, params)
    emit_csv(header, rows, record, args.out)
    return EXIT_OK


def _curve_law(params: Params, law_name: str, kind: ObjectKind) -> tuple[PowerLaw, str]:
    model = _model_from(params)
    ff = _form_factors(params)
    if law_name == "csl":
        law = (
            csl_disc_law(model, ff.f_rot)
            if kind is ObjectKind.DISC
            else csl_sphere_law(model, ff.f_trans)
        )
        return law, model.name.value
    if law_name == "gravity":
        kparams = KarolyhazyParams(
            a_c=params.get("ac", 1e-5, float), tau_g=params.get("taug", 1000.0, float)
        )
        return karolyhazy_law(kparams), ModelName.KAROLYHAZY.value
    if law_name == "qbd":
        return qbd_law(kind, params.get("qbd_rate", None, float)), "qbd"
    if law_name == "thermal":
        D = params.get("density", 1.0, float)
        R = params.get("radius", 1e-5, float)
        T_i = params.get("ti", 300.0, float)
        prefactor = EMISSION_FIT_COEFF * T_i**3 / (D * R**1.5)
        if kind is ObjectKind.DISC:
            prefactor /= feasibility.DISC_DIVISION_LENGTH
        return PowerLaw(prefactor=prefactor, exponent=1.5, tag=LawTag.THERMAL), "thermal"
    raise ValueError(f"unknown law {law_name!r}")


def cmd_curve(args, config) -> int:
    params = Params(args, config)
    kind = ObjectKind(params.get("kind", "sphere", str))
    law, model_name = _curve_law(params, args.law, kind)
    times = _grid(params)
    curve = displacement_curve(law, times, model_name)
    header = ["t_s", "value", "law", "model"]
    rows = [
        [t, v, curve.law_tag.value, curve.model_name]
        for t, v in zip(curve.times, curve.values)
    ]
    record = _run_record(args, params)
    emit_csv(header, rows, record, args.out)
    return EXIT_OK


def cmd_simulate(args, config) -> int:
    params = Params(args, config)
    kind = ObjectKind(params.get("kind", "sphere", str))
    model = _model_from(params)
    ff = _form_factors(params)
    t_final = params.get("t", None, float)
    if t_final is None:
        raise ValueError("--t is required")
    if kind is ObjectKind.SPHERE:
        sphere = SphereSpec(
            R=params.get("radius", 1e-5, float), D=params.get("density", 1.0, float)
        )
        inertia = sphere.mass()
        diff = csl_momentum_diffusion_coefficient(model, ff.f_trans, sphere.nucleon_count())
        analytic = csl_sphere_law(model, ff.f_trans)
    else:
        inertia = params.get("inertia", 1.0, float)
        diff = csl_rotational_diffusion_coefficient(model, ff.f_rot, inertia)
        analytic = csl_disc_law(model, ff.f_rot)
    dt = params.get("dt", t_final / 1000.0, float)
    cfg = SimConfig(
        diffusion_coefficient=diff,
        inertia=inertia,
        t_final=t_final,
        dt=dt,
        n_traj=int(params.get("ntraj", 1000, int)),
        seed=int(params.get("seed", 12345, int)),
    )
    ensemble = simulate(cfg)
    exponent, prefactor = (
        ensemble.fit_powerlaw() if ensemble.final_rms > 0 else (float("nan"), 0.0)
    )
    analytic_rms = analytic.displacement(float(ensemble.times[-1]))
    result = {
        "kind": kind.value,
        "model": model.name.value,
        "lambda": model.lam,
        "t_final_s": float(ensemble.times[-1]),
        "dt_s": cfg.dt,
        "n_traj": cfg.n_traj,
        "seed": cfg.seed,
        "final_rms": ensemble.final_rms,
        "final_rms_standard_error": ensemble.final_rms_standard_error,
        "analytic_rms": analytic_rms,
        "relative_error": (
            (ensemble.final_rms - analytic_rms) / analytic_rms if analytic_rms else 0.0
        ),
        "powerlaw_exponent": exponent,
        "powerlaw_prefactor": prefactor,
        "warnings": list(ensemble.warnings),
    }
    record = _run_record(args, params, ensemble.warnings)
    emit_json(result, record, args.out)
    if args.trajectories_out:
        header = ["trajectory", "t_s", "displacement"]
        rows = []
        for j in range(cfg.n_traj):
            for i, t in enumerate(ensemble.times):
                rows.append([j, float(t), float(ensemble.displacement_samples[i, j])])
        emit_csv(header, rows, record, args.trajectories_out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cslwalk",
        description="Collapse-model random-walk feasibility calculator",
    )
    parser.add_argument("--version", action="version", version=f"cslwalk {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", help="dump the physical-constants table as JSON")
    _add_common(p)
    p.set_defaults(handler=cmd_constants)

    def add_feasibility(name: str, kind: str, handler):
        q = sub.add_parser(name, help=f"required temperature and pressure for the {name}")
        _add_common(q)
        _add_model(q)
        _add_scenario(q, kind)
        if name == "gravity":
            q.add_argument("--kind", choices=["sphere", "disc"], help="object kind")
            q.add_argument("--ac", type=float, help="coherence cell length (cm)")
            q.add_argument("--taug", type=float, help="decoherence time (s)")
        q.set_defaults(handler=handler)
        return q

    add_feasibility("sphere", "sphere", cmd_sphere)
    add_feasibility("disc", "disc", cmd_disc)
    add_feasibility("gravity", "sphere", cmd_gravity)

    p = sub.add_parser("feasibility", help="feasibility solvers (sphere, disc, gravity)")
    fsub = p.add_subparsers(dest="feasibility_kind", required=True)
    for name, kind, handler in (
        ("sphere", "sphere", cmd_sphere),
        ("disc", "disc", cmd_disc),
        ("gravity", "sphere", cmd_gravity),
    ):
        q = fsub.add_parser(name)
        _add_common(q)
        _add_model(q)
        _add_scenario(q, kind)
        if name == "gravity":
            q.add_argument("--kind", choices=["sphere", "disc"])
            q.add_argument("--ac", type=float)
            q.add_argument("--taug", type=float)
        q.set_defaults(handler=handler)

    p = sub.add_parser("oscillator", help="oscillator heating feasibility")
    _add_common(p)
    _add_model(p)
    p.add_argument("--mass-amu", dest="mass_amu", type=float, help="oscillator mass (amu)")
    p.add_argument("--omega", type=float, help="angular frequency (rad/s)")
    p.add_argument("--area", type=float, help="plate area (cm^2)")
    p.add_argument("--Q", dest="q", type=float, help="quality factor")
    p.add_argument("--epsilon", type=float)
    p.add_argument("--chi", type=float)
    p.add_argument("--t", type=float, help="heating time (s)")
    p.add_argument(
        "--eta-law",
        dest="eta_law",
        choices=[law.value for law in oscillator.EtaLaw],
        help="heating-rate strategy (default grw)",
    )
    p.add_argument("--eta", type=float, help="custom heating rate (cm^-2 s^-1)")
    p.set_defaults(handler=cmd_oscillator)

    p = sub.add_parser("table", help="reproduce a reference table (I, II, III, IV)")
    _add_common(p)
    p.add_argument("--id", required=True, help="table id: I, II, III or IV")
    p.add_argument("--f-trans", dest="f_trans", type=float)
    p.add_argument("--f-rot", dest="f_rot", type=float)
    p.add_argument("--eta-law", dest="eta_law", choices=[law.value for law in oscillator.EtaLaw])
    p.add_argument("--model", choices=[m.value for m in ModelName])
    p.add_argument("--lambda", dest="lam", type=float)
    p.add_argument("--qbd-rate-sphere", dest="qbd_rate_sphere", type=float)
    p.add_argument("--qbd-rate-disc", dest="qbd_rate_disc", type=float)
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("sweep", help="sweep epsilon, chi or time for a scenario")
    _add_common(p)
    _add_model(p)
    p.add_argument("--param", required=True, choices=[s.value for s in feasibility.SweepParam])
    p.add_argument("--kind", choices=["sphere", "disc"])
    p.add_argument("--epsilon", type=float)
    p.add_argument("--chi", type=float)
    p.add_argument("--Te", dest="te", type=float)
    p.add_argument("--target", type=float)
    p.add_argument("--R", dest="radius", type=float)
    p.add_argument("--D", dest="density", type=float)
    p.add_argument("--f-trans", dest="f_trans", type=float)
    p.add_argument("--f-rot", dest="f_rot", type=float)
    p.add_argument("--start", type=float, help="first sweep value")
    p.add_argument("--stop", type=float, help="last sweep value")
    p.add_argument("--num", type=int, help="number of points (default 25)")
    p.add_argument("--spacing", choices=["log", "linear"])
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("curve", help="sample a displacement law over a time grid")
    _add_common(p)
    _add_model(p)
    p.add_argument("--law", required=True, choices=["csl", "gravity", "qbd", "thermal"])
    p.add_argument("--kind", choices=["sphere", "disc"])
    p.add_argument("--R", dest="radius", type=float)
    p.add_argument("--D", dest="density", type=float)
    p.add_argument("--Ti", dest="ti", type=float, help="internal temperature for the thermal law")
    p.add_argument("--f-trans", dest="f_trans", type=float)
    p.add_argument("--f-rot", dest="f_rot", type=float)
    p.add_argument("--ac", type=float)
    p.add_argument("--taug", type=float)
    p.add_argument("--qbd-rate", dest="qbd_rate", type=float)
    p.add_argument("--start", type=float, help="first time (s)")
    p.add_argument("--stop", type=float, help="last time (s)")
    p.add_argument("--num", type=int)
    p.add_argument("--spacing", choices=["log", "linear"])
    p.set_defaults(handler=cmd_curve)

    p = sub.add_parser("simulate", help="Monte-Carlo oracle for the diffusion laws")
    _add_common(p)
    _add_model(p)
    p.add_argument("--kind", choices=["sphere", "disc"])
    p.add_argument("--t", type=float, help="final time (s)")
    p.add_argument("--dt", type=float, help="step size (s, default t/1000)")
    p.add_argument("--ntraj", type=int, help="number of trajectories (default 1000)")
    p.add_argument("--seed", type=int, help="master seed (default 12345)")
    p.add_argument("--R", dest="radius", type=float)
    p.add_argument("--D", dest="density", type=float)
    p.add_argument("--inertia", type=float, help="moment of inertia for the disc (g cm^2)")
    p.add_argument("--f-trans", dest="f_trans", type=float)
    p.add_argument("--f-rot", dest="f_rot", type=float)
    p.add_argument(
        "--trajectories-out",
        dest="trajectories_out",
        help="also write per-trajectory samples as CSV to this path",
    )
    p.set_defaults(handler=cmd_simulate)

    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args.command_line = argv
    if not hasattr(args, "out"):
        args.out = None
    config_path = getattr(args, "config", None) or os.environ.get(CONFIG_ENV_VAR)
    try:
        config = load_config(config_path) if config_path else {}
        return args.handler(args, config)
    except (ValueError, OverflowError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


def entry_point():
    raise SystemExit(main())


if __name__ == "__main__":
    entry_point()
