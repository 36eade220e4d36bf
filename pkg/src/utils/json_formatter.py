"""
Output Formatting
Extension files, complex JSON encoding and CSV/JSON report writers
"""
import json
from io import StringIO
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import numpy as np
import pandas as pd

from src.config.numerics_config import EXTENSION_PRESETS
from src.config.settings import SUPPORTED_FORMATS
from src.errors import ConfigError
from src.extensions.family import ExtensionParam
from src.extensions.flux import CHANNEL_LABELS

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"


def complex_to_json(z: complex) -> Dict[str, float]:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def complex_from_json(value: Any) -> complex:
    """Accept {"re", "im"}, [re, im] or a bare real number"""
    if isinstance(value, dict):
        try:
            return complex(float(value["re"]), float(value.get("im", 0.0)))
        except (KeyError, TypeError, ValueError):
            raise ConfigError(f"bad complex entry {value!r}", "load_extension")
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return complex(float(value[0]), float(value[1]))
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return complex(float(value), 0.0)
    raise ConfigError(f"bad complex entry {value!r}", "load_extension")


def matrix_from_json(rows: Any, shape=None) -> np.ndarray:
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise ConfigError("matrix must be a list of rows", "load_extension")
    matrix = np.array([[complex_from_json(v) for v in row] for row in rows], dtype=complex)
    if shape is not None and matrix.shape != shape:
        raise ConfigError(f"expected a matrix of shape {shape}, got {matrix.shape}", "load_extension")
    return matrix


def _real_array(rows: Any) -> np.ndarray:
    try:
        array = np.array(rows, dtype=float)
    except (TypeError, ValueError) as e:
        raise ConfigError(f"re/im entries must be real numbers: {e}", "load_extension")
    if array.shape != (4, 4):
        raise ConfigError(f"expected 4x4 re/im arrays, got shape {array.shape}", "load_extension")
    return array


def extension_to_json(ext: ExtensionParam) -> Dict[str, Any]:
    if ext.is_friedrichs:
        return {"kind": "friedrichs"}
    matrix = np.asarray(ext.matrix, dtype=complex)
    return {"kind": ext.kind, "re": matrix.real.tolist(), "im": matrix.imag.tolist()}


def extension_from_json(data: Any) -> ExtensionParam:
    if not isinstance(data, dict) or "kind" not in data:
        raise ConfigError("extension JSON needs a 'kind' field", "load_extension")
    kind = data["kind"]
    if kind in EXTENSION_PRESETS:
        return preset_extension(kind)
    if kind not in ("theta", "beta"):
        raise ConfigError(f"unknown extension kind {kind!r}", "load_extension")
    if "re" in data:
        # split form: real parts under "re", optional imaginary parts under "im"
        matrix = _real_array(data["re"]) + 1j * _real_array(data.get("im", np.zeros((4, 4)).tolist()))
    elif "matrix" in data:
        matrix = matrix_from_json(data["matrix"], (4, 4))
    else:
        raise ConfigError(f"extension kind {kind!r} needs 're'/'im' arrays or a 'matrix' field", "load_extension")
    return ExtensionParam(kind, matrix)


def preset_extension(name: str) -> ExtensionParam:
    preset = EXTENSION_PRESETS[name]
    if preset["kind"] == "friedrichs":
        return ExtensionParam.friedrichs()
    return ExtensionParam.from_theta(preset["matrix_scale"] * np.eye(4, dtype=complex))


def load_extension(source: Union[str, Path, None]) -> ExtensionParam:
    """
    Load an extension from a preset name, a JSON file or inline JSON

    Args:
        source: "friedrichs", "krein", a path, or a JSON string

    Returns:
        ExtensionParam
    """
    if source is None:
        return ExtensionParam.friedrichs()
    text = str(source).strip()
    if text in EXTENSION_PRESETS:
        return preset_extension(text)

    path = Path(text)
    if not text.startswith("{") and path.exists():
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise ConfigError(f"cannot read extension file {path}: {e}", "load_extension")
        logger.debug("load_extension: read %s", path)

    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"extension is neither a preset, a file nor valid JSON: {e}", "load_extension")
    return extension_from_json(data)


def save_extension(ext: ExtensionParam, path: Union[str, Path]) -> Path:
    """Write an extension JSON file that load_extension reads back unchanged"""
    path = Path(path)
    path.write_text(format_for_display(extension_to_json(ext)) + "\n", encoding="utf-8")
    return path


def format_for_display(output_data: Dict[str, Any]) -> str:
    """Pretty format JSON for display"""
    return json.dumps(output_data, indent=2, ensure_ascii=False)


def check_format(fmt: str) -> str:
    if fmt not in SUPPORTED_FORMATS:
        raise ConfigError(f"format must be one of {SUPPORTED_FORMATS}, got {fmt!r}", "output")
    return fmt


def complex_columns(prefix: str, values: Sequence[complex]) -> Dict[str, List[float]]:
    """Paired re/im columns"""
    values = [complex(v) for v in values]
    return {f"re_{prefix}": [v.real for v in values], f"im_{prefix}": [v.imag for v in values]}


def charge_columns(charges: Sequence[np.ndarray]) -> Dict[str, List[float]]:
    columns: Dict[str, List[float]] = {}
    for flat, label in enumerate(CHANNEL_LABELS):
        columns.update(complex_columns(f"q[{label}]", [q[flat] for q in charges]))
    return columns


def create_final_output(command: str, parameters: Dict[str, Any], results: Dict[str, Any]) -> Dict[str, Any]:
    """
    Create the JSON document of one run

    Args:
        command: Subcommand name
        parameters: Resolved run parameters
        results: Tables and scalars produced by the run

    Returns:
        Complete structured output
    """
    return {
        "command": command,
        "parameters": parameters,
        "results": results,
    }


def frame_records(df: pd.DataFrame) -> List[Dict[str, Any]]:
    return json.loads(df.to_json(orient="records", double_precision=15))


def write_table(df: pd.DataFrame, path: Union[str, Path], fmt: str,
                command: str = "", parameters: Optional[Dict[str, Any]] = None) -> Path:
    """Write one table as CSV or as the JSON run document"""
    check_format(fmt)
    path = Path(path)
    if fmt == "csv":
        df.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    else:
        output = create_final_output(command, parameters or {}, {"rows": frame_records(df)})
        path.write_text(format_for_display(output) + "\n", encoding="utf-8")
    logger.info("wrote %d rows to %s", len(df), path)
    return path


def spectrum_frames(records, resonance) -> Dict[str, pd.DataFrame]:
    """Eigenvalue table and resonance charge table"""
    spectrum = pd.DataFrame({
        "mu": [rec.mu for rec in records],
        "eigenvalue": [rec.eigenvalue for rec in records],
        "multiplicity": [rec.multiplicity for rec in records],
    })
    charges = list(resonance.charges) if resonance is not None else []
    resonances = pd.DataFrame({"index": list(range(len(charges))), **charge_columns(charges)})
    return {"spectrum": spectrum, "resonances": resonances}


def write_spectrum_report(records, resonance, exceptional: Sequence[float], path: Union[str, Path],
                          fmt: str, parameters: Optional[Dict[str, Any]] = None) -> Path:
    """
    Spectrum report: eigenvalues, then the resonance section

    The CSV form appends the resonance table under a '# resonances' marker;
    the JSON form also carries the kernel basis of every eigenvalue.

    Args:
        records: EigenvalueRecord list
        resonance: ZeroResonance or None
        exceptional: Exceptional energies found
        path: Output path
        fmt: 'csv' or 'json'
        parameters: Run parameters for the JSON header

    Returns:
        The written path
    """
    check_format(fmt)
    path = Path(path)
    frames = spectrum_frames(records, resonance)
    if fmt == "csv":
        body = frames["spectrum"].to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
        if resonance is None:
            body += "# resonances: none\n"
        else:
            body += f"# resonances: dimension {resonance.dimension}\n"
            body += frames["resonances"].to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
        path.write_text(body, encoding="utf-8")
    else:
        results = {
            "eigenvalues": [
                {
                    "mu": rec.mu,
                    "eigenvalue": rec.eigenvalue,
                    "multiplicity": rec.multiplicity,
                    "kernel_basis": [[complex_to_json(v) for v in q] for q in rec.kernel_basis],
                }
                for rec in records
            ],
            "resonances": None if resonance is None else {
                "dimension": resonance.dimension,
                "charges": [[complex_to_json(v) for v in q] for q in resonance.charges],
            },
            "exceptional_points": list(exceptional),
        }
        output = create_final_output("spectrum", parameters or {}, results)
        path.write_text(format_for_display(output) + "\n", encoding="utf-8")
    logger.info("wrote spectrum report (%d eigenvalues) to %s", len(records), path)
    return path


def read_spectrum_csv(path: Union[str, Path]) -> Dict[str, Any]:
    """Parse a spectrum CSV back into its eigenvalue table and resonance section"""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    marker = next(i for i, line in enumerate(lines) if line.startswith("# resonances"))
    spectrum = pd.read_csv(StringIO("\n".join(lines[:marker]) + "\n"))
    resonances = None
    if lines[marker].strip() != "# resonances: none":
        resonances = pd.read_csv(StringIO("\n".join(lines[marker + 1:]) + "\n"))
    return {"spectrum": spectrum, "resonances": resonances, "marker": lines[marker]}
