"""The ``crossmod`` command line.

Commands:
    validate         Build the descriptor and run every structural check.
    invariants       Report π₁ and π₂ of the crossed module with the π₁-action.
    crossed-product  Compute C*(A⋊G), the ideal I_u and A⋊C with its blocks.
    decompose        Run the four-step factorization of A⋊C.
    verify           Run verification suites over the bundled corpus.
    corpus           List the bundled instances and validate each one.

Exit status is 0 when every requested check passes, 1 when a check fails,
2 when the descriptor does not parse and 3 when it fails validation.
"""

import argparse
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from crossmod.algebra import wedderburn
from crossmod.bundles import (
    cross_sectional,
    crossed_product,
    crossed_product_ideal,
    semidirect_bundle,
)
from crossmod.config import use_settings
from crossmod.corpus import bundled_corpus
from crossmod.decomposition import full_decomposition
from crossmod.duality import crossed_product_via_fiber_check
from crossmod.errors import CheckFailed, CrossmodError, ParseError, ValidationError
from crossmod.groups import invariant_factors
from crossmod.modules import pi1, pi2
from crossmod.porters import JSONPorter
from crossmod.types import COMMANDS, FORMATS, SUITES, CrossedModule, Report, RunConfig, StrictAction
from crossmod.utils import ReportPrinter, build, load_descriptor
from crossmod.verify import run_suite

EXIT_CODES = {CheckFailed: 1, ParseError: 2, ValidationError: 3}


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser of the ``crossmod`` command."""
    parser = argparse.ArgumentParser(
        prog="crossmod",
        description="Crossed modules of finite groups, Fell bundles and their crossed products.",
    )
    parser.add_argument("command", choices=COMMANDS, help="What to run.")
    parser.add_argument("--input", help="JSON descriptor of a crossed module or strict action.")
    parser.add_argument("--tolerance", type=float, default=1e-9, help="Numerical tolerance.")
    parser.add_argument("--seed", type=int, default=42, help="Seed for Wedderburn sampling.")
    parser.add_argument("--output", help="Write the report here instead of stdout.")
    parser.add_argument("--format", choices=FORMATS, default="human", help="Report format.")
    parser.add_argument("--suite", choices=SUITES, help="Suite for the verify command.")
    return parser


def _load(config: RunConfig) -> Union[CrossedModule, StrictAction]:
    assert config.input_path is not None
    descriptor = load_descriptor(config.input_path)
    try:
        return build(descriptor)
    except ParseError:
        raise
    except CrossmodError as error:
        raise ValidationError(f"{type(error).__name__}: {error}", error.witness)


def _load_action(config: RunConfig) -> StrictAction:
    obj = _load(config)
    if not isinstance(obj, StrictAction):
        raise ValidationError(
            f"Command '{config.command}' needs a strict action descriptor, got a crossed module."
        )
    return obj


def _group_summary(group: Any) -> Dict[str, Any]:
    summary: Dict[str, Any] = {"order": group.order, "abelian": group.is_abelian}
    if group.is_abelian:
        summary["invariant_factors"] = invariant_factors(group)
    return summary


def _validate(config: RunConfig) -> Tuple[bool, Dict[str, Any]]:
    obj = _load(config)
    C = obj.C if isinstance(obj, StrictAction) else obj
    data: Dict[str, Any] = {
        "kind": "strict_action" if isinstance(obj, StrictAction) else "crossed_module",
        "name": obj.name,
        "G_order": C.G.order,
        "H_order": C.H.order,
        "checks": {"crossed_module": True},
        "provenance": {"crossed_module": "make_crossed_module"},
    }
    if isinstance(obj, StrictAction):
        data["algebra_dim"] = obj.A.dim
        data["checks"]["strict_action"] = True
        data["provenance"]["strict_action"] = "make_strict_action"
    return True, data


def _invariants(config: RunConfig) -> Tuple[bool, Dict[str, Any]]:
    obj = _load(config)
    C = obj.C if isinstance(obj, StrictAction) else obj
    quotient, _ = pi1(C)
    module = pi2(C)
    data = {
        "pi1": _group_summary(quotient),
        "pi2": {**_group_summary(module.group), "trivial_action": module.is_trivial_action},
        "two_abelian": C.is_two_abelian,
        "abelian": C.is_abelian,
        "thin": C.is_thin,
        "provenance": {"pi1": "pi1", "pi2": "pi2"},
    }
    return True, data


def _crossed_product(config: RunConfig) -> Tuple[bool, Dict[str, Any]]:
    act = _load_action(config)
    cmb = semidirect_bundle(act, config.tolerance)
    sections, _ = cross_sectional(cmb.bundle, config.tolerance)
    ideal = crossed_product_ideal(cmb, config.tolerance)
    crossed, _ = crossed_product(cmb, config.tolerance)
    vector = wedderburn(crossed, config.tolerance, config.seed).dimension_vector.to_list()
    data: Dict[str, Any] = {
        "algebra_dim": act.A.dim,
        "cross_sectional_dim": sections.dim,
        "ideal_dim": ideal.dim,
        "crossed_product_dim": crossed.dim,
        "dimension_vector": vector,
        "seed": config.seed,
        "provenance": {
            "cross_sectional_dim": "cross_sectional",
            "ideal_dim": "crossed_product_ideal",
            "dimension_vector": "wedderburn",
        },
    }
    passed = True
    if act.C.is_two_abelian:
        passed = crossed_product_via_fiber_check(cmb, config.tolerance)
        data["fiber_ideal_check"] = passed
        data["provenance"]["fiber_ideal_check"] = "crossed_product_via_fiber_check"
    return passed, data


def _decompose(config: RunConfig) -> Tuple[bool, Dict[str, Any]]:
    act = _load_action(config)
    report = full_decomposition(act, config.tolerance, config.seed)
    return report.success, report.to_dict()


def _verify(config: RunConfig, show_progress: bool) -> Tuple[bool, Dict[str, Any]]:
    suite = config.suite or "all"
    results = run_suite(
        suite,
        tol=config.tolerance,
        seed=config.seed,
        workers=config.workers,
        show_progress=show_progress,
    )
    counts = {status: 0 for status in ("passed", "failed", "skipped")}
    for result in results:
        counts[result.status] += 1
    data = {"suite": suite, "counts": counts, "results": [r.to_dict() for r in results]}
    return all(r.passed for r in results), data


def _corpus(config: RunConfig) -> Tuple[bool, Dict[str, Any]]:
    instances: List[Dict[str, Any]] = []
    for instance in bundled_corpus():
        entry: Dict[str, Any] = {"name": instance.name, "description": instance.description}
        try:
            instance.build()
            entry["valid"] = True
        except CrossmodError as error:
            entry.update(valid=False, error=type(error).__name__)
        instances.append(entry)
    return all(entry["valid"] for entry in instances), {"instances": instances}


def execute(config: RunConfig, show_progress: bool = False) -> Report:
    """Dispatch one command and return its report.

    Raises:
        ParseError: If the descriptor does not parse.
        ValidationError: If the descriptor describes no valid object.

    """
    with use_settings(tolerance=config.tolerance, seed=config.seed):
        if config.command == "validate":
            passed, data = _validate(config)
        elif config.command == "invariants":
            passed, data = _invariants(config)
        elif config.command == "crossed-product":
            passed, data = _crossed_product(config)
        elif config.command == "decompose":
            passed, data = _decompose(config)
        elif config.command == "verify":
            passed, data = _verify(config, show_progress)
        else:
            passed, data = _corpus(config)
    return Report(config.command, bool(passed), data, config.to_dict())


def run(config: RunConfig, show_progress: bool = False) -> Tuple[int, Report]:
    """Run a command and return its exit status with the report.

    Parse and validation failures become failed reports naming the error
    and its witness instead of propagating.
    """
    try:
        report = execute(config, show_progress)
    except (ParseError, ValidationError) as error:
        data = {"error": type(error).__name__, "message": str(error), "witness": list(error.witness)}
        return EXIT_CODES[type(error)], Report(config.command, False, data, config.to_dict())
    return (0 if report.passed else EXIT_CODES[CheckFailed]), report


def emit(report: Report, config: RunConfig) -> None:
    """Write the report in the configured format to the configured destination."""
    if config.format == "json":
        JSONPorter(lines=False).export([report], config.output)
        return
    if config.output is None:
        ReportPrinter().print(report)
        return
    from rich.console import Console

    with open(config.output, "w", encoding="utf-8") as f:
        ReportPrinter(Console(file=f, width=120)).print(report)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point of the ``crossmod`` console script."""
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig(
            command=args.command,
            input_path=args.input,
            tolerance=args.tolerance,
            seed=args.seed,
            output=args.output,
            format=args.format,
            suite=args.suite,
        )
    except ValueError as error:
        print(f"crossmod: error: {error}", file=sys.stderr)
        return EXIT_CODES[ParseError]
    code, report = run(config, show_progress=config.format == "human")
    emit(report, config)
    return code


if __name__ == "__main__":
    sys.exit(main())
