"""
Command Line Interface
Subcommands spectrum, scatter, eigfun, kernel, symcheck and dirac
"""
import argparse
import logging
import sys
from typing import List, Optional

from src.config.logging_config import setup_logging
from src.config.settings import DEFAULT_FORMAT, DEFAULT_TOL, DEFAULT_WORKERS, SUPPORTED_FORMATS
from src.config.numerics_config import DEFAULT_FORWARD_EXCLUSION
from src.cli.run_config import EIGFUN_FIELDS, build_run_config
from src.errors import AbPauliError

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", type=float, required=True, help="AB flux in flux quanta (reduced to (0, 1))")
    common.add_argument("--ext", default=None, help="friedrichs, krein, an extension JSON file or inline JSON")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="numerical tolerance")
    common.add_argument("--out", default=None, help="output file")
    common.add_argument("--format", choices=SUPPORTED_FORMATS, default=DEFAULT_FORMAT)
    common.add_argument("--workers", type=int, default=DEFAULT_WORKERS, help="processes for grid evaluation")
    common.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING")

    parser = argparse.ArgumentParser(
        prog="abpauli",
        description="Self-adjoint extensions of the Aharonov-Bohm Pauli operator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    spectrum = sub.add_parser("spectrum", parents=[common], help="eigenvalues, resonances, exceptional points")
    spectrum.add_argument("--mu-range", default=None, help="lo:hi for eigenvalues -mu")
    spectrum.add_argument("--lambda-range", default=None, help="lo:hi for the exceptional-point scan")

    scatter = sub.add_parser("scatter", parents=[common], help="amplitudes and cross sections")
    scatter.add_argument("--energy", type=float, default=1.0)
    scatter.add_argument("--omega-grid", default="0:6.283185307179586:361", help="lo:hi:count")
    scatter.add_argument("--exclude-forward", type=float, default=DEFAULT_FORWARD_EXCLUSION,
                         help="half-width around the forward direction")

    eigfun = sub.add_parser("eigfun", parents=[common], help="field values on a polar grid")
    eigfun.add_argument("--field", choices=EIGFUN_FIELDS, default="eigenfunction")
    eigfun.add_argument("--energy", type=float, default=1.0)
    eigfun.add_argument("--omega", type=float, default=0.0)
    eigfun.add_argument("--spin", default="up")
    eigfun.add_argument("--sign", default="+")
    eigfun.add_argument("--channel", default=None, help="charge channel: 0-3 or up,0 / up,-1 / down,0 / down,-1")
    eigfun.add_argument("--z", default="-1,0", help="spectral point re,im for single-layer")
    eigfun.add_argument("--r-grid", default="0.5:3:11", help="lo:hi:count")
    eigfun.add_argument("--theta-count", type=int, default=8)

    kernel = sub.add_parser("kernel", parents=[common], help="resolvent kernel table")
    kernel.add_argument("--z", default="-1,0", help="spectral point re,im")
    kernel.add_argument("--x", default="1,0", help="fixed point r,theta")
    kernel.add_argument("--r-grid", default="0.6:3:9", help="lo:hi:count for r' (x' = x is rejected)")
    kernel.add_argument("--theta-count", type=int, default=8)

    symcheck = sub.add_parser("symcheck", parents=[common], help="classify a symmetry (S, T)")
    symcheck.add_argument("--S", required=True, help="2x2 complex matrix as JSON")
    symcheck.add_argument("--T", required=True, help="2x2 real matrix as JSON")
    symcheck.add_argument("--antilinear", action="store_true")

    dirac = sub.add_parser("dirac", parents=[common], help="Dirac boundary data for angle gamma")
    dirac.add_argument("--gamma", type=float, default=0.0)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one subcommand

    Args:
        argv: Arguments without the program name

    Returns:
        Exit code: 0 success, 2 input error, 3 numerical failure
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level)

    try:
        config = build_run_config(args)
    except AbPauliError as e:
        print(f"❌ {e.operation}: {e}", file=sys.stderr)
        return e.exit_code

    # imported late: the processor pulls in every numerical package
    from spectral_processor import SpectralProcessor

    result = SpectralProcessor().run(config)
    if not result["success"]:
        print(f"❌ {result['stage']}: {result['error']}", file=sys.stderr)
        logger.error("%s failed in %s: %s", config.command, result["stage"], result["error"])
        return result["exit_code"]

    print(f"✅ wrote {result['path']}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
