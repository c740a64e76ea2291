"""Scenario configuration: a flat key = value file.

Lines are ``key = value`` with ``#`` comments; list values are comma
separated.  Angles accept exact pi literals ("pi/4", "2pi/3", "0.5") so
that alpha grids carry no decimal drift.  See README.md for the schema.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

from .errors import ConfigError

_PI_RE = re.compile(r"^\s*(\d+(?:\.\d+)?)?\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d+)?))?\s*$")

MIN_N_DIRS = 1000
MIN_QUAD_NODES = 64


def parse_angle(text: str) -> float:
    """Parse '0.5', 'pi', 'pi/4', '2pi/3' or '3*pi/4' into radians."""
    text = text.strip()
    m = _PI_RE.match(text)
    if m:
        num = float(m.group(1)) if m.group(1) else 1.0
        den = float(m.group(2)) if m.group(2) else 1.0
        return num * math.pi / den
    try:
        return float(text)
    except ValueError as exc:
        raise ConfigError(f"cannot parse angle {text!r}") from exc


def _parse_float(text: str, key: str) -> float:
    try:
        return float(text)
    except ValueError as exc:
        raise ConfigError(f"cannot parse number {text!r} for key {key!r}") from exc


def _parse_bool(text: str, key: str) -> bool:
    low = text.strip().lower()
    if low in ("on", "true", "yes", "1"):
        return True
    if low in ("off", "false", "no", "0"):
        return False
    raise ConfigError(f"cannot parse boolean {text!r} for key {key!r}")


@dataclass
class Scenario:
    """A parameter sweep over one model plus output toggles."""

    model: str = "jc"
    purity: tuple[float, ...] = (1.0,)
    alpha: tuple[float, ...] = (math.pi / 4,)
    a: float = 1.0
    tau: tuple[float, ...] = (1.0,)
    time_start: float = 0.0
    time_stop: float = 10.0
    time_steps: int = 101
    quantifiers: bool = True
    brute_force: bool = False
    n_dirs: int = 20000
    teleport: bool = False
    theta_nodes: int = 64
    phi_nodes: int = 64
    conformance: bool = False
    seed: int = 0
    output: str | None = None

    def time_grid(self) -> list[float]:
        if self.time_steps == 1:
            return [self.time_start]
        step = (self.time_stop - self.time_start) / (self.time_steps - 1)
        return [self.time_start + i * step for i in range(self.time_steps)]

    def grid_points(self) -> list[tuple]:
        """Deterministic sweep order: purity, then alpha, (then tau,) then time."""
        points = []
        times = self.time_grid()
        for p in self.purity:
            for al in self.alpha:
                if self.model == "dephasing":
                    for tau in self.tau:
                        for tm in times:
                            points.append((p, al, tau, tm))
                else:
                    for tm in times:
                        points.append((p, al, None, tm))
        return points


_KNOWN_KEYS = {
    "model",
    "purity",
    "alpha",
    "a",
    "tau",
    "time_start",
    "time_stop",
    "time_steps",
    "quantifiers",
    "brute_force",
    "n_dirs",
    "teleport",
    "theta_nodes",
    "phi_nodes",
    "conformance",
    "seed",
    "output",
}


def parse_scenario(text: str) -> Scenario:
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip().lower()
        if key not in _KNOWN_KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key in values:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        values[key] = value.strip()

    sc = Scenario()
    if "model" in values:
        model = values["model"].lower()
        if model not in ("jc", "dephasing"):
            raise ConfigError(f"model must be 'jc' or 'dephasing', got {model!r}")
        sc.model = model
    if "purity" in values:
        sc.purity = tuple(_parse_float(x, "purity") for x in values["purity"].split(","))
    if "alpha" in values:
        sc.alpha = tuple(parse_angle(x) for x in values["alpha"].split(","))
    if "a" in values:
        sc.a = _parse_float(values["a"], "a")
    if "tau" in values:
        sc.tau = tuple(_parse_float(x, "tau") for x in values["tau"].split(","))
    if "time_start" in values:
        sc.time_start = _parse_float(values["time_start"], "time_start")
    if "time_stop" in values:
        sc.time_stop = _parse_float(values["time_stop"], "time_stop")
    if "time_steps" in values:
        sc.time_steps = int(_parse_float(values["time_steps"], "time_steps"))
    for key in ("quantifiers", "brute_force", "teleport", "conformance"):
        if key in values:
            setattr(sc, key, _parse_bool(values[key], key))
    if "n_dirs" in values:
        sc.n_dirs = int(_parse_float(values["n_dirs"], "n_dirs"))
    if "theta_nodes" in values:
        sc.theta_nodes = int(_parse_float(values["theta_nodes"], "theta_nodes"))
    if "phi_nodes" in values:
        sc.phi_nodes = int(_parse_float(values["phi_nodes"], "phi_nodes"))
    if "seed" in values:
        sc.seed = int(_parse_float(values["seed"], "seed"))
    if "output" in values:
        sc.output = values["output"]

    _validate(sc)
    return sc


def _validate(sc: Scenario) -> None:
    if not sc.purity:
        raise ConfigError("purity grid is empty")
    if not sc.alpha:
        raise ConfigError("alpha grid is empty")
    for p in sc.purity:
        if not 0.0 <= p <= 1.0:
            raise ConfigError(f"purity {p} outside [0, 1]")
    for al in sc.alpha:
        if not 0.0 <= al <= math.pi / 2 + 1e-12:
            raise ConfigError(f"alpha {al} outside [0, pi/2]")
    if sc.model == "dephasing":
        if sc.a <= 0.0:
            raise ConfigError(f"coupling a must be > 0, got {sc.a}")
        if not sc.tau or any(t <= 0.0 for t in sc.tau):
            raise ConfigError("tau values must be > 0")
    if sc.time_steps < 1:
        raise ConfigError(f"time_steps must be >= 1, got {sc.time_steps}")
    if sc.time_stop < sc.time_start:
        raise ConfigError("time_stop must be >= time_start")
    if sc.time_start < 0.0:
        raise ConfigError("time_start must be >= 0")
    if sc.brute_force and sc.n_dirs < MIN_N_DIRS:
        raise ConfigError(f"n_dirs must be >= {MIN_N_DIRS}, got {sc.n_dirs}")
    if sc.teleport and (sc.theta_nodes < MIN_QUAD_NODES or sc.phi_nodes < MIN_QUAD_NODES):
        raise ConfigError(f"quadrature nodes must be >= {MIN_QUAD_NODES} per axis")


def load_scenario(path) -> Scenario:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return parse_scenario(text)
