"""Problem configuration: JSON schema, validation, pencil construction.

One JSON document describes one problem. Exactly one of the three sources is
populated; matrices are row-major nested arrays; damping profiles are
registry names plus parameters so every fixture stays human-diffable.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .beam import BeamConfig, QuadratureSpec, make_damping_profile
from .errors import ConfigError, InvalidArgumentError
from .pencil import QuadraticPencil

SCHEMA_VERSION = 1
SYMMETRY_TOL = 1e-12


@dataclass(frozen=True)
class Tolerances:
    eigen: float = 1e-8
    inertia: float = 1e-12
    verify: float = 1e-7


@dataclass(frozen=True)
class ProblemConfig:
    source: str
    dense: tuple[np.ndarray, np.ndarray] | None = None
    beam: BeamConfig | None = None
    random: dict | None = None
    tolerances: Tolerances = field(default_factory=Tolerances)
    seed: int = 0
    initial: tuple[np.ndarray, np.ndarray] | None = None


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ConfigError(message)


def _parse_matrix(raw, name: str) -> np.ndarray:
    try:
        m = np.asarray(raw, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{name} is not a numeric matrix") from exc
    _require(m.ndim == 2 and m.shape[0] == m.shape[1] and m.shape[0] > 0,
             f"{name} must be a nonempty square matrix, got shape {m.shape}")
    scale = float(np.max(np.abs(m))) if m.size else 0.0
    _require(float(np.max(np.abs(m - m.T))) <= SYMMETRY_TOL * max(scale, 1e-300),
             f"{name} must be symmetric")
    return m


def load_config(path: str | Path) -> ProblemConfig:
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    return parse_config(doc)


def parse_config(doc: dict) -> ProblemConfig:
    _require(isinstance(doc, dict), "config document must be a JSON object")
    _require(doc.get("schema") == SCHEMA_VERSION,
             f"config schema must be {SCHEMA_VERSION}")
    source = doc.get("source")
    _require(source in ("dense", "beam", "random"),
             f"source must be one of dense/beam/random, got {source!r}")
    populated = [k for k in ("dense", "beam", "random") if doc.get(k) is not None]
    _require(populated == [source],
             f"exactly the {source!r} section must be populated, found {populated}")

    tol_doc = doc.get("tolerances", {})
    _require(isinstance(tol_doc, dict), "tolerances must be an object")
    tolerances = Tolerances(
        eigen=float(tol_doc.get("eigen", 1e-8)),
        inertia=float(tol_doc.get("inertia", 1e-12)),
        verify=float(tol_doc.get("verify", 1e-7)),
    )
    seed = int(doc.get("seed", 0))

    dense = beam = None
    random_spec = None
    if source == "dense":
        section = doc["dense"]
        _require(isinstance(section, dict) and "a0" in section and "d" in section,
                 "dense section needs 'a0' and 'd' matrices")
        a0 = _parse_matrix(section["a0"], "dense.a0")
        d = _parse_matrix(section["d"], "dense.d")
        _require(a0.shape == d.shape, "dense.a0 and dense.d must have equal shape")
        dense = (a0, d)
    elif source == "beam":
        section = doc["beam"]
        _require(isinstance(section, dict), "beam section must be an object")
        try:
            profile = make_damping_profile(section.get("damping", {}))
            quad_doc = section.get("quadrature", {})
            quadrature = QuadratureSpec(
                points_per_mode_pair=int(quad_doc.get("points_per_mode_pair", 8)),
                rule=str(quad_doc.get("rule", "gauss")),
            )
            beam = BeamConfig(
                a0=float(section.get("a0", 1.0)),
                damping=profile,
                n_modes=int(section.get("n_modes", 12)),
                quadrature=quadrature,
            )
        except (InvalidArgumentError, KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"invalid beam section: {exc}") from exc
    else:
        section = doc["random"]
        _require(isinstance(section, dict) and "dim" in section,
                 "random section needs at least 'dim'")
        random_spec = {
            "dim": int(section["dim"]),
            "seed": int(section.get("seed", seed)),
            "damping_scale": float(section.get("damping_scale", 1.0)),
            "ensure_real_root_cone": bool(section.get("ensure_real_root_cone", False)),
        }
        _require(random_spec["dim"] >= 1, "random.dim must be >= 1")

    initial = None
    if doc.get("initial") is not None:
        init = doc["initial"]
        _require(isinstance(init, dict) and "z0" in init and "w0" in init,
                 "initial section needs 'z0' and 'w0'")
        z0 = np.asarray(init["z0"], dtype=float)
        w0 = np.asarray(init["w0"], dtype=float)
        _require(z0.ndim == 1 and w0.shape == z0.shape,
                 "initial.z0 and initial.w0 must be equal-length vectors")
        initial = (z0, w0)

    return ProblemConfig(
        source=source,
        dense=dense,
        beam=beam,
        random=random_spec,
        tolerances=tolerances,
        seed=seed,
        initial=initial,
    )


def random_pencil(
    dim: int,
    seed: int,
    damping_scale: float = 1.0,
    ensure_real_root_cone: bool = False,
) -> QuadraticPencil:
    """Seeded random pencil: orthogonally rotated stiffness spectrum in
    [0.5, 5], Wishart-type damping.

    With ensure_real_root_cone the damping is rescaled until the
    nonemptiness criterion |A0^{-1/2} D A0^{-1/2}| > 2 |A0^{-1/2}| holds
    with a 25% margin, so the real-root cone is certified nonempty.
    """
    rng = np.random.default_rng(seed)
    q = np.linalg.qr(rng.standard_normal((dim, dim)))[0]
    a0 = q @ np.diag(rng.uniform(0.5, 5.0, dim)) @ q.T
    a0 = (a0 + a0.T) / 2.0
    b = rng.standard_normal((dim, dim))
    d = damping_scale * (b @ b.T) / dim
    d = (d + d.T) / 2.0
    if ensure_real_root_cone:
        w_a, v_a = np.linalg.eigh(a0)
        inv_sqrt = (v_a / np.sqrt(w_a)) @ v_a.T
        whitened = inv_sqrt @ d @ inv_sqrt
        s_norm = float(np.max(np.abs(np.linalg.eigvalsh(whitened))))
        needed = 2.5 / np.sqrt(w_a[0])
        if s_norm < needed:
            d = d * (needed / max(s_norm, 1e-300))
    return QuadraticPencil.from_matrices(a0, d)


def build_pencil(config: ProblemConfig) -> QuadraticPencil:
    if config.source == "dense":
        a0, d = config.dense
        try:
            return QuadraticPencil.from_matrices(a0, d)
        except InvalidArgumentError as exc:
            raise ConfigError(f"invalid dense pencil: {exc}") from exc
    if config.source == "beam":
        from .beam import discretize_beam

        return discretize_beam(config.beam)
    spec = config.random
    return random_pencil(
        spec["dim"], spec["seed"], spec["damping_scale"],
        spec["ensure_real_root_cone"],
    )
