"""
Command-line entry point

    dsg-bound bound --input rings/dim41.ring --ideal jacobian --attest half-cm-local
    dsg-bound invariants --input rings/egdimsing1.ring --ideal jacobian --format json
    dsg-bound gb --input rings/dual_numbers.ring --ideal "x, y^2"

Reports go to standard output, progress and errors to standard error.

Exit codes:
    0  success
    1  a hypothesis failed or is unattested (conditional report still printed)
    2  parse error
    3  unsupported input
    4  resource cap or internal certificate failure
"""

import argparse
import sys
from typing import Callable, Sequence

from .constants.attestations import get_attestations_list, parse_attestations, validate_attestations
from .constants.formulas import FORMULA_DESCRIPTIONS, VALID_FORMULAS
from .constants.strategies import STRATEGY_CHOICES, STRATEGY_DESCRIPTIONS
from .errors import ToolError, UnsupportedInputError
from .ideals.ideal import ideal_from_text, zero_ideal
from .invariants.artinian import artinian_data
from .invariants.context import build_context
from .invariants.jacobian import jacobian_data
from .invariants.hypotheses import verify_hypotheses
from .models import is_usable
from .poly.ring_file import load_ring_file
from .resolution.free_resolution import minimal_free_resolution, quotient_presentation, resolve_ring
from .utils import console
from .utils.config import EngineConfig, get_config
from .utils.report_utils import VALID_FORMATS, render_report
from .utils.workflow_visualizer import workflow_mermaid
from .workflows.executor import BoundWorkflowExecutor


def _bounded_int(text: str, least: int, what: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a {what} integer, got {text!r}")
    if value < least:
        raise argparse.ArgumentTypeError(f"expected a {what} integer, got {value}")
    return value


def _positive_int(text: str) -> int:
    return _bounded_int(text, 1, "positive")


def _non_negative_int(text: str) -> int:
    return _bounded_int(text, 0, "non-negative")


def _split_radicals(values: Sequence[str] | None) -> list[str]:
    """--radical "p1; p2" (repeatable) -> ["p1", "p2"]"""
    texts = []
    for value in values or []:
        texts += [part.strip() for part in value.split(";") if part.strip()]
    return texts


def _add_common(p: argparse.ArgumentParser, *, ideal_default: str | None = "jacobian") -> None:
    p.add_argument("--input", required=True, metavar="FILE", help="Ring file")
    p.add_argument(
        "--ideal", default=ideal_default,
        help='"jacobian", "socle" or generators "g1, g2, ..."'
             + (f" (default: {ideal_default})" if ideal_default else ""),
    )
    p.add_argument("--format", choices=VALID_FORMATS, default="text", help="Report format (default: text)")
    p.add_argument("--cap", type=_positive_int, help="Largest nilpotency exponent tried")
    p.add_argument("--verbose", action="store_true", help="Progress lines on standard error")


def _add_hypothesis_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--attest", default="", help="Comma separated attestations")
    p.add_argument("--radical", action="append", metavar='"p1; p2"', help="Candidate primes of √(I + J)")
    p.add_argument("--t-loewy", type=_non_negative_int, dest="t_loewy", help="Attested ℓℓ(T) for dimsing1 / countable-cm")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dsg-bound",
        description="Upper bounds for the dimension of the singularity category of a presented ring",
        epilog="Attestations:\n" + get_attestations_list() + "\n\nStrategies:\n" + "\n".join(
            f"  - {name}: {text}" for name, text in STRATEGY_DESCRIPTIONS.items()
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest="command")

    gb_p = subparsers.add_parser("gb", help="Reduced Gröbner basis of I + J")
    _add_common(gb_p, ideal_default=None)

    nf_p = subparsers.add_parser("nf", help="Normal form of a polynomial modulo I + J")
    _add_common(nf_p, ideal_default=None)
    nf_p.add_argument("--poly", required=True, help="Polynomial to reduce")

    inv_p = subparsers.add_parser("invariants", help="μ, grade, depth, ℓℓ, n(R/I) and type")
    _add_common(inv_p)
    inv_p.add_argument("--attest", default="", help="Comma separated attestations")
    inv_p.add_argument("--radical", action="append", metavar='"p1; p2"', help="Candidate primes of √(I + J)")

    jac_p = subparsers.add_parser("jacobian", help="The Jacobian ideal of R")
    _add_common(jac_p, ideal_default=None)

    bound_p = subparsers.add_parser("bound", help="Bound dim D_sg(R)")
    _add_common(bound_p)
    _add_hypothesis_flags(bound_p)
    bound_p.add_argument("--formula", choices=VALID_FORMULAS, default="main", help="Bound formula (default: main)")
    bound_p.add_argument("--strategy", choices=STRATEGY_CHOICES, default="auto", help="Ball strategy for D^b(R/I)")
    bound_p.add_argument("--derived-radius", type=_positive_int, dest="derived_radius",
                         help="Radius of D^b(R/I) supplied by the user")
    bound_p.add_argument("--mod-radius", type=_non_negative_int, dest="mod_radius",
                         help="radius of mod R/I in D_sg(R) supplied by the user (formula main-radius)")
    bound_p.add_argument("--nilpotency", type=_positive_int, help="Attested n(R/I)")

    verify_p = subparsers.add_parser("verify", help="Check the hypotheses of a formula")
    _add_common(verify_p)
    _add_hypothesis_flags(verify_p)
    verify_p.add_argument("--formula", choices=VALID_FORMULAS, default="main", help="Bound formula (default: main)")

    resolve_p = subparsers.add_parser("resolve", help="Minimal graded free resolution of R or P/(I + J)")
    _add_common(resolve_p, ideal_default=None)

    subparsers.add_parser("workflow", help="Mermaid diagram of the bound pipeline")
    return parser


def _config(args) -> EngineConfig:
    return get_config(nilpotency_cap=getattr(args, "cap", None), verbose=getattr(args, "verbose", False) or None)


def _attestations(args) -> list[str]:
    names = parse_attestations(getattr(args, "attest", ""))
    valid, unknown = validate_attestations(names)
    if not valid:
        raise UnsupportedInputError(f"unknown attestation(s): {', '.join(unknown)}")
    return names


def _load(args, config: EngineConfig):
    return load_ring_file(args.input, config=config).presentation


def _attempt(warnings: list[str], what: str, compute: Callable):
    try:
        return compute()
    except UnsupportedInputError as e:
        warnings.append(f"{what} not computed: {e.message}")
        return None


def cmd_gb(args, config: EngineConfig) -> tuple[dict, int]:
    ring = _load(args, config)
    ideal = ideal_from_text(ring, args.ideal, config=config) if args.ideal else zero_ideal(ring)
    basis = ideal.lifted
    return {
        "ring": ring.describe(),
        "ideal": ideal.describe(),
        "basis": [ring.format(g) for g in basis.elements],
        "size": len(basis),
        "unit": basis.is_unit,
    }, 0


def cmd_nf(args, config: EngineConfig) -> tuple[dict, int]:
    ring = _load(args, config)
    ideal = ideal_from_text(ring, args.ideal, config=config) if args.ideal else zero_ideal(ring)
    f = ring.parse(args.poly)
    remainder = ideal.lifted.normal_form(f)
    return {
        "ring": ring.describe(),
        "ideal": ideal.describe(),
        "poly": ring.format(f),
        "normal_form": ring.format(remainder),
        "member": not remainder,
    }, 0


def cmd_invariants(args, config: EngineConfig) -> tuple[dict, int]:
    ring = _load(args, config)
    candidates = [ideal_from_text(ring, t, config=config) for t in _split_radicals(args.radical)] or None
    ctx = build_context(
        ring, args.ideal,
        attestations=_attestations(args),
        radical_candidates=candidates,
        config=config,
    )
    warnings: list[str] = []
    _attempt(warnings, "μ(I)", lambda: ctx.mu)
    koszul = _attempt(warnings, "grade I", lambda: ctx.koszul)
    if koszul is not None:
        ctx.grade
    ctx.depth
    ctx.quotient_dim
    ctx.loewy
    nil = _attempt(warnings, "n(R/I)", lambda: ctx.nil)
    if ctx.depth == 0:
        ctx.socle
    artinian = None
    if ring.dimension == 0:
        artinian = _attempt(warnings, "ℓℓ(R)", lambda: artinian_data(ring, config=config))

    payload = {
        "ring": ring.describe(),
        "field": str(ring.field),
        "ideal": ctx.ideal.describe(),
        "ideal_kind": ctx.ideal_kind,
        "invariants": ctx.values().model_dump(exclude={"loewy_t"}) | {"height": ctx.height},
        "jacobian_h": ring.h,
        "koszul_nonvanishing": (
            {f"H_{i}": nonzero for i, nonzero in sorted(koszul.nonvanishing.items())} if koszul else None
        ),
        "nilradical": nil.radical.describe() if nil is not None and nil.radical is not None else None,
        "nilradical_status": nil.status if nil is not None else None,
        "warnings": ctx.warnings + warnings,
    }
    if artinian is not None:
        payload["artinian"] = {
            "loewy_length": artinian.loewy_length,
            "socle": artinian.socle.formatted_generators(),
            "type": artinian.type,
        }
    return payload, 0


def cmd_jacobian(args, config: EngineConfig) -> tuple[dict, int]:
    ring = _load(args, config)
    data = jacobian_data(ring, config=config)
    payload = {
        "ring": ring.describe(),
        "h": data.h,
        "minors": data.raw_minors,
        "generators": data.ideal.formatted_generators(),
        "unit": data.ideal.is_unit,
    }
    if data.note:
        payload["note"] = data.note
    return payload, 0


def cmd_bound(args, config: EngineConfig):
    ring = _load(args, config)
    executor = BoundWorkflowExecutor(config)
    report = executor.run(
        ring,
        args.ideal,
        formula=args.formula,
        strategy=args.strategy,
        attestations=_attestations(args),
        radical_texts=_split_radicals(args.radical),
        derived_radius=args.derived_radius,
        mod_radius=args.mod_radius,
        t_loewy=args.t_loewy,
        nilpotency_override=args.nilpotency,
    )
    return report, report.exit_code


def cmd_verify(args, config: EngineConfig) -> tuple[dict, int]:
    ring = _load(args, config)
    ideal_text = "socle" if args.formula == "depth-zero" else args.ideal
    candidates = [ideal_from_text(ring, t, config=config) for t in _split_radicals(args.radical)] or None
    ctx = build_context(
        ring, ideal_text,
        attestations=_attestations(args),
        radical_candidates=candidates,
        config=config,
    )
    hypotheses = verify_hypotheses(ctx, args.formula, t_loewy=args.t_loewy)
    payload = {
        "ring": ring.describe(),
        "ideal": ctx.ideal.describe(),
        "formula": args.formula,
        "description": FORMULA_DESCRIPTIONS[args.formula],
        "hypotheses": hypotheses,
        "attestations": sorted(ctx.attestations),
        "warnings": ctx.warnings,
    }
    code = 0 if all(is_usable(h.status) for h in hypotheses) else 1
    return payload, code


def cmd_resolve(args, config: EngineConfig) -> tuple[dict, int]:
    ring = _load(args, config)
    if args.ideal:
        ideal = ideal_from_text(ring, args.ideal, config=config)
        if ideal.is_unit:
            raise UnsupportedInputError("P/(I + J) is the zero ring")
        presentation = quotient_presentation(ring.poly_ring, ideal.lifted.elements)
        resolution = minimal_free_resolution(presentation, ring.weights, config=config)
        target = f"P/({ideal.describe()} + J)"
    else:
        resolution = resolve_ring(ring, config=config)
        target = "R"
    payload = {
        "ring": ring.describe(),
        "module": target,
        "betti": resolution.betti_numbers,
        "graded_betti": resolution.graded_betti(),
        "projective_dimension": resolution.projective_dimension,
        "depth": ring.n - resolution.projective_dimension if resolution.complete else None,
        "complete": resolution.complete,
    }
    return payload, 0


_HANDLERS = {
    "gb": cmd_gb,
    "nf": cmd_nf,
    "invariants": cmd_invariants,
    "jacobian": cmd_jacobian,
    "bound": cmd_bound,
    "verify": cmd_verify,
    "resolve": cmd_resolve,
}


def run_command(argv: Sequence[str] | None = None, *, stdout=None) -> int:
    """
    Parse argv, run one subcommand and print its report.

    Returns:
        Process exit code
    """
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse usage errors are parse errors
        return 2 if e.code else 0

    if args.command is None:
        parser.print_help(sys.stderr)
        return 2
    if args.command == "workflow":
        print(workflow_mermaid(), file=stdout)
        return 0

    try:
        config = _config(args)
    except ValueError as e:
        # malformed DSG_* environment variable
        console.failure(str(e))
        return 2
    console.set_verbose(config.verbose)

    try:
        payload, code = _HANDLERS[args.command](args, config)
    except ToolError as e:
        console.failure(e.message)
        if args.format == "json":
            print(render_report(e.to_dict(), "json"), file=stdout)
        return e.exit_code

    print(render_report(payload, args.format), file=stdout)
    return code


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
