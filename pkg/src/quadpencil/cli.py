"""Command-line front end: every theorem check reproducible from the shell.

Exit codes: 0 all checks pass, 1 a verified property failed, 2 input or
configuration error, 3 numerical failure. Reruns with identical config and
seed produce byte-identical outputs except for the timestamp line; the
QUADPENCIL_SEED environment variable overrides config seeds.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import beam as beam_mod
from .config import ProblemConfig, build_pencil, load_config
from .errors import ComputationError, ConfigError, InvalidArgumentError
from .evolution import energy_monotonicity_report, simulate
from .interlacing import check_form_order, compare_eigenvalues
from .linearization import (
    build_linearization,
    check_pencil_equivalence,
    full_spectrum,
    resolvent_region_check,
    structural_report,
)
from .pencil import compute_delta_gamma, compute_scalars
from .variational import IntervalDelta, locate_real_eigenvalues, verify_minmax

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_INPUT = 2
EXIT_NUMERICAL = 3


def _timestamp() -> str:
    return datetime.now(timezone.utc).isoformat()


def _emit_json(payload: dict, out: str | None) -> None:
    payload = dict(payload)
    payload["generated_at"] = _timestamp()
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_csv(rows: str, out: str | None) -> None:
    text = f"# generated_at={_timestamp()}\n" + rows
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load(path: str) -> ProblemConfig:
    config = load_config(path)
    env_seed = os.environ.get("QUADPENCIL_SEED")
    if env_seed is not None:
        try:
            seed = int(env_seed)
        except ValueError as exc:
            raise ConfigError(f"QUADPENCIL_SEED must be an integer: {env_seed!r}") from exc
        config = replace(config, seed=seed)
        if config.random is not None:
            config = replace(config, random={**config.random, "seed": seed})
    return config


def _complex_entry(z: complex) -> dict:
    return {"re": float(np.real(z)), "im": float(np.imag(z))}


def cmd_spectrum(args) -> int:
    config = _load(args.config)
    pencil = build_pencil(config)
    system = build_linearization(pencil)
    spectrum = full_spectrum(system, cluster_tolerance=args.cluster_tol)
    reports = {
        "structural": structural_report(system, spectrum).to_dict(),
        "pencil_equivalence": check_pencil_equivalence(pencil, spectrum).to_dict(),
    }
    _, gamma = compute_delta_gamma(pencil)
    if gamma > 0.0:
        reports["resolvent_regions"] = resolvent_region_check(pencil, spectrum).to_dict()
    else:
        reports["resolvent_regions"] = None
    ok = all(r["ok"] for r in reports.values() if r is not None)
    payload = {
        "schema": 1,
        "command": "spectrum",
        "eigenvalues": [
            {
                **_complex_entry(lam),
                "algebraic_multiplicity": int(am),
                "geometric_multiplicity": int(gm),
                "residual": float(res),
            }
            for lam, am, gm, res in zip(
                spectrum.eigenvalues,
                spectrum.algebraic_multiplicities,
                spectrum.geometric_multiplicities,
                spectrum.residuals,
            )
        ],
        "cluster_tolerance": spectrum.cluster_tolerance,
        "reports": reports,
        "ok": ok,
    }
    _emit_json(payload, args.out)
    return EXIT_OK if ok else EXIT_PROPERTY


def cmd_variational(args) -> int:
    config = _load(args.config)
    pencil = build_pencil(config)
    scalars = compute_scalars(pencil, seed=config.seed)
    if args.delta_lower is not None:
        lower = float(args.delta_lower)
    elif np.isfinite(scalars.alpha):
        lower = scalars.alpha + 1e-6 * abs(scalars.alpha)
    else:
        # Empty real-root cone: any interval works; take one holding every
        # possible real eigenvalue (the spectrum lies in |z| <= |A|).
        lower = -(np.linalg.norm(build_linearization(pencil).a_matrix, 2) + 1.0)
    interval = IntervalDelta(lower=lower)
    alpha_gate = scalars.alpha if np.isfinite(scalars.alpha) else None
    result = locate_real_eigenvalues(
        pencil, interval, config.tolerances.eigen, alpha_estimate=alpha_gate
    )
    minmax = verify_minmax(
        pencil, result, args.subspaces, config.seed, tol=config.tolerances.verify
    )
    ok = minmax.ok
    payload = {
        "schema": 1,
        "command": "variational",
        "alpha_estimate": scalars.alpha if np.isfinite(scalars.alpha) else None,
        "alpha_is_estimate": scalars.alpha_is_estimate,
        "delta": scalars.delta,
        "gamma": scalars.gamma,
        "disc_radius": scalars.disc_radius,
        "interval": {"lower": interval.lower, "upper": interval.upper},
        "kappa": result.kappa,
        "n_found": result.n_found,
        "eigenvalues": [
            {
                "value": diag.value,
                "multiplicity": diag.multiplicity,
                "residual": diag.residual,
                "bracket_width": diag.bracket_width,
                "iterations": diag.iterations,
                "semisimple": diag.semisimple,
            }
            for diag in result.per_eigenvalue
        ],
        "minmax_report": minmax.to_dict(),
        "ok": ok,
    }
    _emit_json(payload, args.out)
    return EXIT_OK if ok else EXIT_PROPERTY


def cmd_interlace(args) -> int:
    config_a = _load(args.config_a)
    config_b = _load(args.config_b)
    pencil_a = build_pencil(config_a)
    pencil_b = build_pencil(config_b)
    if pencil_a.dim != pencil_b.dim:
        raise ConfigError(
            f"configs have different dimensions: {pencil_a.dim} vs {pencil_b.dim}"
        )
    payload = {"schema": 1, "command": "interlace"}
    if not check_form_order(pencil_a, pencil_b):
        payload["comparison"] = {"ok": False, "form_order_ok": False}
        payload["ok"] = False
        _emit_json(payload, args.out)
        return EXIT_PROPERTY
    comparison = compare_eigenvalues(
        pencil_a, pencil_b,
        a=args.delta_lower,
        tol=config_a.tolerances.verify,
        locate_tol=config_a.tolerances.eigen,
        seed=config_a.seed,
    )
    payload["comparison"] = comparison.to_dict()
    payload["ok"] = comparison.ok
    _emit_json(payload, args.out)
    return EXIT_OK if comparison.ok else EXIT_PROPERTY


def cmd_simulate(args) -> int:
    config = _load(args.config)
    pencil = build_pencil(config)
    n = pencil.dim
    if config.initial is not None:
        z0, w0 = config.initial
        if z0.shape != (n,):
            raise ConfigError(
                f"initial data length {z0.shape[0]} does not match dimension {n}"
            )
    else:
        z0 = np.zeros(n)
        z0[0] = 1.0
        w0 = np.zeros(n)
    trace = simulate(pencil, z0, w0, args.t_final, args.dt)
    monotone = energy_monotonicity_report(trace)
    lines = ["time,energy,dissipation"]
    lines += [
        f"{t:.12g},{e:.16g},{d:.16g}"
        for t, e, d in zip(trace.times, trace.energies, trace.dissipation)
    ]
    _emit_csv("\n".join(lines) + "\n", args.out)
    if not monotone.ok:
        for check in monotone.failures():
            print(f"energy monotonicity violated: {check.label} {check.data}",
                  file=sys.stderr)
        return EXIT_PROPERTY
    return EXIT_OK


def cmd_beam_report(args) -> int:
    config = _load(args.config)
    if config.source != "beam":
        raise ConfigError("beam-report requires a config with source = beam")
    cfg = config.beam
    bounds = beam_mod.beam_bounds(cfg)
    report = beam_mod.verify_beam_theorem(
        cfg, tol=config.tolerances.verify,
        locate_tol=config.tolerances.eigen, seed=config.seed,
    )
    payload = {
        "schema": 1,
        "command": "beam-report",
        "bounds": {
            "applicable": bounds.applicable,
            "d_min": bounds.d_min,
            "d_max": bounds.d_max,
            "n_min_count": bounds.n_min_count,
            "upper_n": list(bounds.upper_n),
            "lower_n": list(bounds.lower_n),
        },
        "report": report.to_dict(),
        "ok": report.ok,
    }
    if cfg.damping.d_min == cfg.damping.d_max:
        payload["closed_form"] = [
            _complex_entry(z) for z in beam_mod.beam_closed_form(cfg)
        ]
    _emit_json(payload, args.out)
    return EXIT_OK if report.ok else EXIT_PROPERTY


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadpencil",
        description="Spectral checks for damped second-order systems",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="full complex spectrum plus structure checks")
    p.add_argument("config")
    p.add_argument("--out", default=None)
    p.add_argument("--cluster-tol", type=float, default=None)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("variational", help="real eigenvalues on (alpha, 0] plus min-max checks")
    p.add_argument("config")
    p.add_argument("--delta-lower", type=float, default=None)
    p.add_argument("--subspaces", type=int, default=50)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_variational)

    p = sub.add_parser("interlace", help="eigenvalue comparison of an ordered pencil pair")
    p.add_argument("config_a")
    p.add_argument("config_b")
    p.add_argument("--delta-lower", type=float, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_interlace)

    p = sub.add_parser("simulate", help="trapezoidal energy trace as CSV")
    p.add_argument("config")
    p.add_argument("--t-final", type=float, required=True)
    p.add_argument("--dt", type=float, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("beam-report", help="beam spectrum bounds and count checks")
    p.add_argument("config")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_beam_report)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, InvalidArgumentError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ComputationError as exc:
        print(f"numerical failure: {exc} {exc.details}", file=sys.stderr)
        return EXIT_NUMERICAL
    except np.linalg.LinAlgError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
