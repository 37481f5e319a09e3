"""
Command-line front end: `pisotcs run <target>` and `pisotcs list`.

Exit codes: 0 success, 2 invalid arguments, 3 numerical failure.
"""

import argparse
import sys
from typing import List, Optional

from pydantic import ValidationError

from pisotcs.__version__ import __version__
from pisotcs.client.config import configure, get_config, load_from_env, load_from_file
from pisotcs.shared.errors import DivergentProduct, InvalidSpec, NonConvergent, OutOfDomain
from pisotcs.shared.utils.logging import configure_logging, get_component_logger

from .domain import Dataset, FigureRequest, GridSpec, QSpecifier
from .runner import list_targets, make_request, ordered_map, run
from .targets import TARGETS
from .writer import write_dataset

logger = get_component_logger("cli")

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3


def _complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from e


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pisotcs",
        description="Coherent-state quantization with Pisot q-deformed integers.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v for info, -vv for debug logging")
    parser.add_argument("--config", help="key=value configuration file")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="list the available targets")

    run_p = sub.add_parser("run", help="compute a target dataset")
    run_p.add_argument("target", help="target name, see 'pisotcs list'")
    run_p.add_argument("--q", action="append", default=[],
                       help="q specifier: s:<int>, f:<int>, val:<real> or 1 (repeatable)")
    run_p.add_argument("--z", action="append", type=_complex, default=[],
                       help="phase-space point or modulus (repeatable)")
    run_p.add_argument("--k", action="append", type=int, default=[],
                       help="Fourier order for dkr (repeatable)")
    run_p.add_argument("--grid", help="sweep as start:stop:num")
    run_p.add_argument("--z0", type=_complex, default=1.0, help="reference point of phase_density")
    run_p.add_argument("--time", type=float, default=0.0, help="evolution time of phase_density")
    run_p.add_argument("--out", help="output path (stdout when omitted)")
    run_p.add_argument("--format", choices=["csv", "json"], default=None)
    run_p.add_argument("--emit-plot", action="store_true", help="write a gnuplot script next to --out")
    run_p.add_argument("--with-runtime", action="store_true", help="include the runtime in the metadata")
    run_p.add_argument("--workers", type=int, default=None, help="worker threads for grid sweeps")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    load_from_env()
    if args.verbose:
        configure_logging(level="debug" if args.verbose > 1 else "info")

    try:
        if args.config:
            load_from_file(args.config)
        if args.command == "list":
            sys.stdout.write(list_targets())
            return EXIT_OK

        if args.target not in TARGETS:
            logger.error(f"unknown target {args.target!r}")
            sys.stderr.write(list_targets())
            return EXIT_USAGE
        if args.workers is not None:
            configure(workers=args.workers)

        request = make_request(
            args.target,
            q=args.q,
            z=args.z,
            k=args.k,
            grid=args.grid,
            z0=args.z0,
            time=args.time,
            out=args.out,
            format=args.format or get_config().output_format,
            emit_plot=args.emit_plot,
            with_runtime=args.with_runtime,
        )
    except (InvalidSpec, ValidationError, OSError) as e:
        logger.error(f"invalid arguments: {e}")
        return EXIT_USAGE

    try:
        dataset = run(request)
    except (NonConvergent, DivergentProduct, OutOfDomain) as e:
        logger.error(f"{request.target} failed: {e}")
        return EXIT_NUMERICAL
    except InvalidSpec as e:
        logger.error(f"invalid arguments: {e}")
        return EXIT_USAGE

    write_dataset(
        dataset,
        out=request.out,
        fmt=request.format,
        emit_plot=request.emit_plot,
        with_runtime=request.with_runtime,
    )
    return EXIT_OK


__all__ = [
    "Dataset",
    "FigureRequest",
    "GridSpec",
    "QSpecifier",
    "TARGETS",
    "build_parser",
    "list_targets",
    "main",
    "make_request",
    "ordered_map",
    "run",
    "write_dataset",
]
