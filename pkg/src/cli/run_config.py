"""
Run Configuration
Validated parameters of one CLI run
"""
import json
import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np

from src.config.numerics_config import (
    DEFAULT_EXTENSION,
    DEFAULT_FORWARD_EXCLUSION,
    DEFAULT_LAMBDA_RANGE,
    DEFAULT_MU_RANGE,
)
from src.config.settings import DEFAULT_FORMAT, DEFAULT_TOL, DEFAULT_WORKERS, OUTPUT_FOLDER, SUPPORTED_FORMATS
from src.errors import ConfigError, InvalidRangeError, NonPositiveError
from src.extensions.family import ExtensionParam, check_side
from src.extensions.flux import CHANNEL_LABELS, SPINS, FluxAlpha, reduce_flux
from src.utils.json_formatter import load_extension, matrix_from_json

logger = logging.getLogger(__name__)

COMMANDS = ("spectrum", "scatter", "eigfun", "kernel", "symcheck", "dirac")
EIGFUN_FIELDS = ("eigenfunction", "bound", "single-layer")

Grid = Tuple[float, float, int]


def parse_range(text: str, name: str) -> Tuple[float, float]:
    """'lo:hi' -> (lo, hi) with lo < hi"""
    parts = str(text).split(":")
    try:
        lo, hi = (float(p) for p in parts)
    except ValueError:
        raise InvalidRangeError(f"{name} must look like lo:hi, got {text!r}", name)
    if not (np.isfinite(lo) and np.isfinite(hi) and lo < hi):
        raise InvalidRangeError(f"{name} needs finite lo < hi, got {text!r}", name)
    return lo, hi


def parse_grid(text: str, name: str) -> Grid:
    """'lo:hi:count' -> (lo, hi, count); count = 1 keeps lo only"""
    parts = str(text).split(":")
    if len(parts) != 3:
        raise InvalidRangeError(f"{name} must look like lo:hi:count, got {text!r}", name)
    try:
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise InvalidRangeError(f"{name} must look like lo:hi:count, got {text!r}", name)
    if count < 1 or not (np.isfinite(lo) and np.isfinite(hi)) or (count > 1 and not lo < hi):
        raise InvalidRangeError(f"{name} needs count >= 1 and lo < hi, got {text!r}", name)
    return lo, hi, count


def grid_points(grid: Grid) -> np.ndarray:
    lo, hi, count = grid
    return np.array([lo]) if count == 1 else np.linspace(lo, hi, count)


def parse_complex(text: str, name: str) -> complex:
    """'re,im' or a Python complex literal"""
    text = str(text).strip()
    try:
        if "," in text:
            re_part, im_part = text.split(",")
            return complex(float(re_part), float(im_part))
        return complex(text.replace(" ", ""))
    except ValueError:
        raise ConfigError(f"{name} is not a complex number: {text!r}", name)


def parse_matrix(text: str, name: str) -> np.ndarray:
    """2x2 matrix from inline JSON or a JSON file"""
    source = str(text).strip()
    path = Path(source)
    if not source.startswith("[") and path.exists():
        source = path.read_text(encoding="utf-8")
    try:
        rows = json.loads(source)
    except json.JSONDecodeError as e:
        raise ConfigError(f"{name} is not valid JSON: {e}", name)
    return matrix_from_json(rows, (2, 2))


def parse_channel(text: Optional[str]) -> Optional[int]:
    """Flat index or label such as 'up,0'"""
    if text is None:
        return None
    text = str(text).strip()
    if text in CHANNEL_LABELS:
        return CHANNEL_LABELS.index(text)
    try:
        flat = int(text)
    except ValueError:
        raise ConfigError(f"channel must be 0-3 or one of {CHANNEL_LABELS}, got {text!r}", "channel")
    if not 0 <= flat < 4:
        raise ConfigError(f"channel index {flat} out of range", "channel")
    return flat


@dataclass
class RunConfig:
    """Parameters of one run, validated before any computation"""

    command: str
    alpha: FluxAlpha
    winding: int
    ext: ExtensionParam
    ext_source: str
    tol: float = DEFAULT_TOL
    out: Path = OUTPUT_FOLDER / "result.csv"
    fmt: str = DEFAULT_FORMAT
    workers: int = DEFAULT_WORKERS
    mu_range: Tuple[float, float] = DEFAULT_MU_RANGE
    lambda_range: Tuple[float, float] = DEFAULT_LAMBDA_RANGE
    energy: float = 1.0
    omega: float = 0.0
    omega_grid: Grid = (0.0, 2.0 * math.pi, 361)
    exclude_forward: float = DEFAULT_FORWARD_EXCLUSION
    spin: str = "up"
    sign: str = "+"
    field_kind: str = "eigenfunction"
    channel: Optional[int] = None
    z: complex = -1.0 + 0j
    x: Tuple[float, float] = (1.0, 0.0)
    r_grid: Grid = (0.5, 3.0, 11)
    theta_count: int = 8
    s_matrix: Optional[np.ndarray] = None
    t_matrix: Optional[np.ndarray] = None
    antilinear: bool = False
    gamma: float = 0.0

    def parameters(self) -> Dict[str, Any]:
        """JSON-safe summary for report headers"""
        return {
            "command": self.command,
            "alpha": self.alpha.alpha,
            "winding": self.winding,
            "ext": self.ext_source,
            "tol": self.tol,
        }


def build_run_config(args) -> RunConfig:
    """
    Validate parsed CLI arguments into a RunConfig

    Args:
        args: argparse namespace

    Returns:
        RunConfig
    """
    command = args.command
    if command not in COMMANDS:
        raise ConfigError(f"unknown command {command!r}", "run_config")

    alpha, winding = reduce_flux(float(args.alpha))
    if winding:
        logger.info("flux %s reduced to %s (gauge winding %d)", args.alpha, alpha.alpha, winding)

    ext_source = args.ext or DEFAULT_EXTENSION
    ext = load_extension(ext_source)

    tol = float(args.tol)
    if not tol > 0:
        raise NonPositiveError(f"--tol must be positive, got {tol}", "run_config")
    if args.format not in SUPPORTED_FORMATS:
        raise ConfigError(f"--format must be one of {SUPPORTED_FORMATS}", "run_config")
    workers = int(args.workers)
    if workers < 1:
        raise NonPositiveError(f"--workers must be at least 1, got {workers}", "run_config")

    out = Path(args.out) if args.out else OUTPUT_FOLDER / f"{command}.{args.format}"
    config = RunConfig(
        command=command,
        alpha=alpha,
        winding=winding,
        ext=ext,
        ext_source=ext_source,
        tol=tol,
        out=out,
        fmt=args.format,
        workers=workers,
    )

    if command == "spectrum":
        config.mu_range = parse_range(args.mu_range, "--mu-range") if args.mu_range else DEFAULT_MU_RANGE
        config.lambda_range = (
            parse_range(args.lambda_range, "--lambda-range") if args.lambda_range else DEFAULT_LAMBDA_RANGE
        )
    elif command == "scatter":
        config.energy = _positive(args.energy, "--energy")
        config.omega_grid = parse_grid(args.omega_grid, "--omega-grid")
        config.exclude_forward = float(args.exclude_forward)
        if config.exclude_forward < 0:
            raise NonPositiveError("--exclude-forward must be non-negative", "run_config")
    elif command == "eigfun":
        config.field_kind = args.field
        if config.field_kind not in EIGFUN_FIELDS:
            raise ConfigError(f"--field must be one of {EIGFUN_FIELDS}", "run_config")
        config.energy = _positive(args.energy, "--energy")
        config.omega = float(args.omega)
        config.spin = _spin(args.spin)
        config.sign = check_side(args.sign)
        config.channel = parse_channel(args.channel)
        config.z = parse_complex(args.z, "--z")
        config.r_grid = parse_grid(args.r_grid, "--r-grid")
        if config.r_grid[0] < 0:
            raise InvalidRangeError("--r-grid radii must be non-negative", "run_config")
        config.theta_count = int(args.theta_count)
        if config.theta_count < 1:
            raise NonPositiveError("--theta-count must be at least 1", "run_config")
    elif command == "kernel":
        config.z = parse_complex(args.z, "--z")
        config.x = _polar(args.x)
        config.r_grid = parse_grid(args.r_grid, "--r-grid")
        config.theta_count = int(args.theta_count)
        if config.theta_count < 1:
            raise NonPositiveError("--theta-count must be at least 1", "run_config")
    elif command == "symcheck":
        config.s_matrix = parse_matrix(args.S, "--S")
        t_matrix = parse_matrix(args.T, "--T")
        if np.max(np.abs(t_matrix.imag)) > 0:
            raise ConfigError("--T must be real", "run_config")
        config.t_matrix = t_matrix.real
        config.antilinear = bool(args.antilinear)
    elif command == "dirac":
        config.gamma = float(args.gamma) % (2.0 * math.pi)

    logger.debug("run config: %s", config.parameters())
    return config


def _positive(value, name: str) -> float:
    value = float(value)
    if not (np.isfinite(value) and value > 0):
        raise NonPositiveError(f"{name} must be positive, got {value}", "run_config")
    return value


def _spin(value: str) -> str:
    if value not in SPINS:
        raise ConfigError(f"--spin must be one of {SPINS}", "run_config")
    return value


def _polar(text: str) -> Tuple[float, float]:
    parts: Sequence[str] = str(text).split(",")
    try:
        r, theta = float(parts[0]), float(parts[1])
    except (ValueError, IndexError):
        raise ConfigError(f"--x must look like r,theta, got {text!r}", "run_config")
    if not r > 0:
        raise NonPositiveError("--x radius must be positive", "run_config")
    return r, theta
