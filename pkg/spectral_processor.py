"""
Spectral Processor - Core Run Logic
Runs each CLI job as a sequence of steps and writes its report
"""
import logging
import math
import sys
from typing import Any, Dict, List, Tuple

import numpy as np
import pandas as pd

from src.cli.run_config import RunConfig, grid_points
from src.errors import AbPauliError, ChargeNotInKernelError
from src.extensions.flux import SPINS, as_charge4, unit_charge
from src.resolvent import bound_state, exceptional_points, krein_kernel, point_spectrum, single_layer, zero_resonance
from src.scattering import WaveVector, theta_amplitude, theta_eigenfunction
from src.symmetry import (
    TRACE_NAMES,
    DiracSpinor,
    classify_dirac,
    classify_pauli,
    dirac_membership,
    dirac_square_charges,
    dirac_traces,
    dirac_traces_numeric,
)
from src.symmetry.dirac import TRACE_DOWN_MINUS_ALPHA, TRACE_UP_ALPHA_MINUS_1
from src.utils import parallel_map, write_spectrum_report, write_table
from src.utils.json_formatter import complex_columns

logger = logging.getLogger(__name__)

SPIN_PAIRS = [(s_in, s_out) for s_in in SPINS for s_out in SPINS]


def _step(message: str) -> None:
    print(message, file=sys.stderr)


def _failure(error: AbPauliError, stage: str) -> Dict[str, Any]:
    return {
        "success": False,
        "error": str(error),
        "stage": error.operation if error.operation != "unknown" else stage,
        "exit_code": error.exit_code,
    }


# --- per-point workers (module level so worker processes can unpickle them) ---

def eigenfunction_point(point: Tuple[float, float], alpha, ext, spin, energy, omega, sign, tol) -> np.ndarray:
    kvec = WaveVector.from_energy(energy, omega)
    return theta_eigenfunction(alpha, ext, spin, kvec, sign, point, tol)


def single_layer_point(point: Tuple[float, float], alpha, z, charge) -> np.ndarray:
    return single_layer(alpha, z, charge, point)


def bound_state_point(point: Tuple[float, float], alpha, ext, record, charge) -> np.ndarray:
    return bound_state(alpha, ext, record, charge, point)


def kernel_point(point: Tuple[float, float], alpha, ext, z, x, tol) -> np.ndarray:
    return krein_kernel(alpha, ext, z, x, point, tol)


def _polar_grid(config: RunConfig) -> List[Tuple[float, float]]:
    thetas = 2.0 * math.pi * np.arange(config.theta_count) / config.theta_count
    return [(float(r), float(th)) for r in grid_points(config.r_grid) for th in thetas]


class SpectralProcessor:
    """Main run coordinator: one method per CLI subcommand"""

    def run(self, config: RunConfig) -> Dict[str, Any]:
        """Dispatch on config.command"""
        handler = getattr(self, f"run_{config.command}")
        return handler(config)

    def run_spectrum(self, config: RunConfig) -> Dict[str, Any]:
        """
        Point spectrum, zero-energy resonances and exceptional points

        Args:
            config: Validated run configuration

        Returns:
            Result dictionary
        """
        stage = "point_spectrum"
        try:
            # Step 1: Negative eigenvalues
            _step("🔍 Scanning for negative eigenvalues...")
            records = point_spectrum(config.alpha, config.ext, config.mu_range, config.tol)

            # Step 2: Zero-energy resonances
            stage = "zero_resonance"
            _step("🔍 Checking for zero-energy resonances...")
            resonance = zero_resonance(config.alpha, config.ext)

            # Step 3: Exceptional points (finite Theta only)
            stage = "exceptional_points"
            exceptional: List[float] = []
            if not config.ext.is_friedrichs:
                _step("🔍 Scanning boundary values for exceptional points...")
                exceptional = exceptional_points(config.alpha, config.ext, config.lambda_range)
                if exceptional:
                    _step(f"⚠️  {len(exceptional)} exceptional energies found")

            # Step 4: Write report
            stage = "output"
            _step("💾 Writing spectrum report...")
            path = write_spectrum_report(records, resonance, exceptional, config.out, config.fmt, config.parameters())

            _step("✅ Spectrum complete!")
            return {
                "success": True,
                "data": {
                    "eigenvalues": [rec.eigenvalue for rec in records],
                    "multiplicities": [rec.multiplicity for rec in records],
                    "resonance_dimension": 0 if resonance is None else resonance.dimension,
                    "exceptional_points": exceptional,
                },
                "path": str(path),
            }
        except AbPauliError as e:
            return _failure(e, stage)

    def run_scatter(self, config: RunConfig) -> Dict[str, Any]:
        """
        Outgoing amplitudes and cross sections over an angle grid

        The incident direction is 0; angles within the exclusion half-width of
        the forward direction are dropped.

        Args:
            config: Validated run configuration

        Returns:
            Result dictionary
        """
        stage = "theta_amplitude"
        try:
            # Step 1: Build the angle grid
            omegas = grid_points(config.omega_grid)
            distance = np.abs(np.angle(np.exp(1j * omegas)))
            kept = omegas[distance > config.exclude_forward]
            _step(f"📐 {len(kept)} of {len(omegas)} angles kept after forward exclusion")

            # Step 2: Amplitudes per spin pair
            _step("🔍 Evaluating scattering amplitudes...")
            kvec = WaveVector.from_energy(config.energy, 0.0)
            columns: Dict[str, Any] = {"omega": kept}
            for s_in, s_out in SPIN_PAIRS:
                label = f"{s_in},{s_out}"
                amps = [
                    2.0 * math.pi * theta_amplitude(config.alpha, config.ext, kvec, "-", (s_in, s_out), float(om))
                    for om in kept
                ]
                columns.update(complex_columns(f"f[{label}]", amps))
                columns[f"dsigma[{label}]"] = [abs(f) ** 2 for f in amps]

            # Step 3: Write table
            stage = "output"
            _step("💾 Writing amplitude table...")
            path = write_table(pd.DataFrame(columns), config.out, config.fmt, "scatter", config.parameters())
            _step("✅ Scattering complete!")
            return {"success": True, "data": {"rows": len(kept)}, "path": str(path)}
        except AbPauliError as e:
            return _failure(e, stage)

    def _field_task(self, config: RunConfig):
        """Pick the per-point worker and its bound arguments"""
        alpha, ext = config.alpha, config.ext
        if config.field_kind == "eigenfunction":
            return eigenfunction_point, dict(
                alpha=alpha, ext=ext, spin=config.spin, energy=config.energy,
                omega=config.omega, sign=config.sign, tol=config.tol,
            )
        if config.field_kind == "single-layer":
            charge = unit_charge(config.channel if config.channel is not None else 0)
            return single_layer_point, dict(alpha=alpha, z=config.z, charge=charge)

        records = point_spectrum(alpha, ext, tol=config.tol)
        if not records:
            raise ChargeNotInKernelError("extension has no negative eigenvalue", "bound_state")
        record = records[0]
        charge = unit_charge(config.channel) if config.channel is not None else as_charge4(record.kernel_basis[0])
        return bound_state_point, dict(alpha=alpha, ext=ext, record=record, charge=charge)

    def run_eigfun(self, config: RunConfig) -> Dict[str, Any]:
        """
        Field values on a polar grid

        Args:
            config: Validated run configuration

        Returns:
            Result dictionary
        """
        stage = "theta_eigenfunction" if config.field_kind == "eigenfunction" else config.field_kind
        try:
            # Step 1: Resolve what to evaluate
            _step(f"🔧 Preparing {config.field_kind} evaluation...")
            task, kwargs = self._field_task(config)

            # Step 2: Evaluate over the grid
            points = _polar_grid(config)
            _step(f"🔍 Evaluating {len(points)} grid points on {config.workers} worker(s)...")
            values = parallel_map(task, points, config.workers, **kwargs)

            # Step 3: Write table
            stage = "output"
            columns: Dict[str, Any] = {
                "r": [p[0] for p in points],
                "theta": [p[1] for p in points],
            }
            for slot, spin in enumerate(SPINS):
                columns.update(complex_columns(f"psi[{spin}]", [v[slot] for v in values]))
            _step("💾 Writing field grid...")
            path = write_table(pd.DataFrame(columns), config.out, config.fmt, "eigfun", config.parameters())
            _step("✅ Field grid complete!")
            return {"success": True, "data": {"points": len(points)}, "path": str(path)}
        except AbPauliError as e:
            return _failure(e, stage)

    def run_kernel(self, config: RunConfig) -> Dict[str, Any]:
        """Resolvent kernel G(x, x') for fixed x over a grid of x'"""
        stage = "krein_kernel"
        try:
            points = _polar_grid(config)
            _step(f"🔍 Evaluating the resolvent kernel at {len(points)} points...")
            values = parallel_map(
                kernel_point, points, config.workers,
                alpha=config.alpha, ext=config.ext, z=config.z, x=config.x, tol=config.tol,
            )
            stage = "output"
            columns: Dict[str, Any] = {
                "r": [p[0] for p in points],
                "theta": [p[1] for p in points],
            }
            for i, s_out in enumerate(SPINS):
                for j, s_in in enumerate(SPINS):
                    columns.update(complex_columns(f"G[{s_out},{s_in}]", [v[i, j] for v in values]))
            path = write_table(pd.DataFrame(columns), config.out, config.fmt, "kernel", config.parameters())
            _step("✅ Kernel table complete!")
            return {"success": True, "data": {"points": len(points)}, "path": str(path)}
        except AbPauliError as e:
            return _failure(e, stage)

    def run_symcheck(self, config: RunConfig) -> Dict[str, Any]:
        """Classify (S, T) for the Pauli and the Dirac form"""
        stage = "classify_pauli"
        try:
            _step("🔍 Classifying the transformation...")
            pauli = classify_pauli(config.s_matrix, config.t_matrix, config.antilinear)
            stage = "classify_dirac"
            dirac = classify_dirac(config.s_matrix, config.t_matrix, config.antilinear)
            stage = "output"
            rows = [
                {
                    "form": form,
                    "admissible": verdict.admissible,
                    "potential_sign": verdict.potential_sign,
                    "field_sign": verdict.field_sign,
                    "family": verdict.family or "",
                    "rule": verdict.transformed_potential_rule,
                    "reason": verdict.reason,
                }
                for form, verdict in (("pauli", pauli), ("dirac", dirac))
            ]
            path = write_table(pd.DataFrame(rows), config.out, config.fmt, "symcheck", config.parameters())
            _step("✅ Classification complete!")
            return {
                "success": True,
                "data": {"pauli": pauli.admissible, "dirac": dirac.admissible},
                "path": str(path),
            }
        except AbPauliError as e:
            return _failure(e, stage)

    def run_dirac(self, config: RunConfig) -> Dict[str, Any]:
        """Traces, membership and squared-operator charges for the angle gamma"""
        stage = "dirac_traces"
        try:
            _step("🔍 Computing Dirac boundary data...")
            spinor = DiracSpinor.from_extension(1.0, config.gamma)
            quantities: List[Tuple[str, complex]] = [
                (name, dirac_traces(config.alpha, spinor, name)) for name in TRACE_NAMES
            ]
            for name in (TRACE_UP_ALPHA_MINUS_1, TRACE_DOWN_MINUS_ALPHA):
                quantities.append((f"{name} (extrapolated)", dirac_traces_numeric(config.alpha, spinor, name)))

            stage = "dirac_membership"
            member = dirac_membership(config.alpha, config.gamma, spinor)
            quantities.append(("membership", complex(float(member))))

            stage = "dirac_square_charges"
            report = dirac_square_charges(config.alpha, config.gamma)
            quantities.append(("regularized_determinant", report.regularized_determinant))
            det = report.determinant
            quantities.append(("determinant", complex("nan") if det is None else det))
            quantities.append(("kernel_dimension", complex(report.kernel_dimension)))

            stage = "output"
            df = pd.DataFrame({
                "quantity": [q[0] for q in quantities],
                "re": [q[1].real for q in quantities],
                "im": [q[1].imag for q in quantities],
            })
            path = write_table(df, config.out, config.fmt, "dirac", config.parameters())
            _step("✅ Dirac report complete!")
            return {
                "success": True,
                "data": {"membership": member, "only_trivial_charges": report.only_trivial},
                "path": str(path),
            }
        except AbPauliError as e:
            return _failure(e, stage)


