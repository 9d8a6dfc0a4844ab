"""Command-line front end: analyze, verify, export, oracle and iso"""

import argparse
import logging
import sys
import time
from pathlib import Path
from typing import Any, Dict, List, Optional, TextIO

from . import reports
from .catalogue import VerifyOptions, run_verify
from .config.settings import RUN_KEYS, RunConfig, load_run_config, settings
from .core import blowup, zdgraph
from .core.blowup import BlowupSpec
from .core.isorecon import AbstractGraph, AtomRegime, psi_from_pairs, reconstruct, verify_ring_iso
from .core.topology import locality_region
from .utils.errors import (
    CapExceededError,
    ConfigurationError,
    DegenerateModelError,
    EmptyGraphError,
    InvalidModelError,
    InvalidSetError,
    NotASubsetError,
    ReconstructionError,
    RegimeMismatchError,
    SyntaxParseError,
    ZeroDivisorGraphError,
)
from .utils.parser import parse_alphabet, parse_flavor, parse_model, parse_psi, parse_window

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_BAD_INPUT = 2
EXIT_EMPTY_GRAPH = 3

_BAD_INPUT = (
    ConfigurationError,
    SyntaxParseError,
    InvalidSetError,
    InvalidModelError,
    NotASubsetError,
)


def _blowup_spec(
    config: RunConfig, ground: Optional[str] = None, ideal: Optional[str] = None
) -> BlowupSpec:
    model = parse_model(ground or config.ground, ideal or config.ideal)
    return BlowupSpec.for_model(
        model,
        parse_flavor(config.flavor),
        window=parse_window(config.window),
        alphabet=parse_alphabet(config.alphabet),
        cap=config.cap,
        mutate=config.mutate,
    )


def _emit(text: str, out: Optional[str], stream: TextIO) -> None:
    if out is None:
        stream.write(text)
        return
    Path(out).write_text(text)
    logger.info(f"Wrote {out}")


def cmd_analyze(config: RunConfig, stream: Optional[TextIO] = None) -> int:
    """Print the invariant table; the JSON report goes to --out or follows the table"""
    stream = stream or sys.stdout
    model = parse_model(config.ground, config.ideal)
    flavor = parse_flavor(config.flavor)
    report = zdgraph.analyze(model, flavor)
    stream.write(reports.graph_report_table(report))
    document = reports.graph_report_json(report) + "\n"
    if config.out is None:
        stream.write("\n")
    _emit(document, config.out, stream)
    return EXIT_OK


def cmd_verify(config: RunConfig, stream: Optional[TextIO] = None) -> int:
    stream = stream or sys.stdout
    options = VerifyOptions(
        only=config.only,
        mutate=config.mutate,
        seed=config.seed,
        alphabet=config.alphabet,
        cap=config.cap,
        budget_seconds=config.budget,
        hull_samples=settings.hull_samples,
        orthogonal_samples=settings.orthogonal_samples,
        iso_rounds=settings.iso_rounds,
        iso_samples=settings.iso_samples,
        workers=settings.verify_workers,
    )
    report = run_verify(options)
    stream.write(reports.verify_text(report))
    if config.out is not None:
        _emit(reports.dumps(reports.verify_document(report)) + "\n", config.out, stream)
    return EXIT_OK if report.passed else EXIT_FAILURE


def cmd_export(config: RunConfig, stream: Optional[TextIO] = None) -> int:
    """DOT to stdout, or DOT / node-link JSON to --out chosen by its suffix"""
    stream = stream or sys.stdout
    g = blowup.generate(_blowup_spec(config))
    if config.out is not None and Path(config.out).suffix == ".json":
        blowup.write_json(g, config.out)
    else:
        _emit(blowup.to_dot(g), config.out, stream)
    return EXIT_OK


def cmd_oracle(
    config: RunConfig, graph_file: Optional[str] = None, stream: Optional[TextIO] = None
) -> int:
    """Oracle metrics of an exported graph, or of the configured blow-up"""
    stream = stream or sys.stdout
    if graph_file is not None:
        if not Path(graph_file).is_file():
            raise ConfigurationError(f"Graph file not found: {graph_file}")
        g = blowup.read_json(graph_file)
    else:
        g = blowup.generate(_blowup_spec(config))
    report = blowup.oracle_metrics(g, config.budget)
    _emit(report.to_json() + "\n", config.out, stream)
    return EXIT_OK


def _load_psi(config: RunConfig, same_model: bool, gx: AbstractGraph) -> Dict[Any, Any]:
    if config.psi is None:
        # identity on one model; across models the chromatic check decides first
        return {v: v for v in gx.graph.nodes} if same_model else {}
    path = Path(config.psi)
    if not path.is_file():
        raise ConfigurationError(f"psi file not found: {config.psi}")
    try:
        return psi_from_pairs(parse_psi(path.read_text()))
    except ReconstructionError as e:
        raise SyntaxParseError(f"Malformed psi file {config.psi}: {e}")


def cmd_iso(config: RunConfig, stream: Optional[TextIO] = None) -> int:
    """Reconstruct phi from psi between two C_F blow-ups and verify the ring map"""
    stream = stream or sys.stdout
    target_ground = config.target_ground or config.ground
    target_ideal = config.target_ideal or config.ideal
    spec_x = _blowup_spec(config)
    spec_y = _blowup_spec(config, target_ground, target_ideal)
    gx = AbstractGraph.from_explicit(blowup.generate(spec_x))
    gy = AbstractGraph.from_explicit(blowup.generate(spec_y))
    psi = _load_psi(config, spec_x.model == spec_y.model, gx)

    regime = AtomRegime.FINITE if locality_region(spec_x.model).is_finite else AtomRegime.INFINITE
    deadline = time.monotonic() + config.budget
    desc = reconstruct(gx, gy, psi, regime, deadline)
    verdict = verify_ring_iso(desc, settings.iso_samples, seed=config.seed)
    document = {**desc.to_document(), **verdict.to_document()}
    _emit(reports.dumps(document) + "\n", config.out, stream)
    return EXIT_OK if verdict.verified else EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zdgraph",
        description="Zero-divisor graphs of rings of functions on discrete spaces",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    commands = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="Run configuration file or name in the config paths")
    common.add_argument("--ground", help="countable or finite:n")
    common.add_argument("--ideal", help="all, finite or powerset:<set>")
    common.add_argument("--flavor", help="cp or cpinf")
    common.add_argument("--window", help="Finite window of X_P for blow-ups")
    common.add_argument("--alphabet", help="Nonzero blow-up values, e.g. 1,2")
    common.add_argument("--cap", type=int, help="Largest blow-up to materialize")
    common.add_argument("--out", help="Output file")
    common.add_argument("--seed", type=int, help="Seed for sampled checks")
    common.add_argument("--budget", type=float, help="Oracle time budget in seconds")

    commands.add_parser("analyze", parents=[common], help="Closed-form invariants of a model")

    verify = commands.add_parser("verify", parents=[common], help="Cross-check the model catalogue")
    verify.add_argument(
        "--only", help="One check tag, e.g. distance, or a result tag, e.g. Th2.7"
    )
    verify.add_argument(
        "--mutate", action="store_true", default=None, help="Inject an adjacency fault"
    )

    export = commands.add_parser("export", parents=[common], help="Write a blow-up as DOT or JSON")
    export.add_argument(
        "--mutate", action="store_true", default=None, help="Inject an adjacency fault"
    )

    oracle = commands.add_parser("oracle", parents=[common], help="Exact invariants of a blow-up")
    oracle.add_argument(
        "graph", nargs="?", help="Exported JSON graph (default: generate from the model)"
    )

    iso = commands.add_parser("iso", parents=[common], help="Reconstruct a ring isomorphism")
    iso.add_argument("--psi", help="JSON file of [x_vertex, y_vertex] pairs")
    iso.add_argument("--target-ground", dest="target_ground", help="Ground of the second model")
    iso.add_argument("--target-ideal", dest="target_ideal", help="Ideal of the second model")
    return parser


def _overrides(args: argparse.Namespace) -> Dict[str, Any]:
    return {key: getattr(args, key) for key in RUN_KEYS if getattr(args, key, None) is not None}


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point; returns the process exit code"""
    parser = build_parser()
    args = parser.parse_args(argv)
    level = getattr(logging, settings.log_level.upper(), logging.INFO)
    if args.verbose:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr)

    try:
        config = load_run_config(args.config, _overrides(args))
        if args.command == "analyze":
            return cmd_analyze(config)
        if args.command == "verify":
            return cmd_verify(config)
        if args.command == "export":
            return cmd_export(config)
        if args.command == "oracle":
            return cmd_oracle(config, args.graph)
        return cmd_iso(config)
    except _BAD_INPUT as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except EmptyGraphError as e:
        print(f"error: empty zero-divisor graph (Th 2.12: |X_P| < 2): {e}", file=sys.stderr)
        return EXIT_EMPTY_GRAPH
    except DegenerateModelError as e:
        print(f"error: degenerate model (Th 2.12): {e}", file=sys.stderr)
        return EXIT_EMPTY_GRAPH
    except (CapExceededError, ReconstructionError, RegimeMismatchError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except ZeroDivisorGraphError as e:
        logger.debug(f"{type(e).__name__} in {args.command}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
