"""Argument parsing and the process boundary of the `sectio` command."""
import argparse
import json
import sys
import time
from typing import List, Optional

from sectio import logger
from sectio.config.constants import (EXIT_COMPUTATION_ERROR, EXIT_OK,
                                     EXIT_USAGE_ERROR)
from sectio.config.settings import configure, settings
from sectio.errors import (ElaborationError, ExpressionSyntaxError,
                           InvalidParameter, OrderCapExceeded,
                           SearchBudgetExceeded, SectioError)
from sectio.cli.commands import COMMANDS, PREDICATES
from sectio.cli.document import ResultDocument, render_text
from sectio.cli.elaborate import Elaborator

USAGE_ERRORS = (ExpressionSyntaxError, ElaborationError, InvalidParameter, OrderCapExceeded)
# commands whose --max-order bounds the catalog instead of capping group orders
CATALOG_COMMANDS = ("verify-batch", "search")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-order", type=int, default=None,
                        help="Order cap (default 64); for verify-batch and search, the largest catalog order")
    common.add_argument("--budget-nodes", type=int, default=None, help="Node budget of searches")
    common.add_argument("--json", action="store_true", help="Print only the result document")
    common.add_argument("--seed", type=int, default=None, help="Seed for sampled checks")
    common.add_argument("--jobs", type=int, default=None, help="Worker processes for verify-batch")

    parser = argparse.ArgumentParser(
        prog="sectio",
        description="Covering numbers and sectional numbers of finite group homomorphisms",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=help_text)

    command("sigma", "Covering number of a group").add_argument("group")
    command("sigma-cyclic", "Cyclic covering number of a group").add_argument("group")
    command("sec", "Sectional number of a homomorphism").add_argument("hom")
    command("sigma-hom", "Covering number of a homomorphism").add_argument("hom")
    command("poset", "Sectionable subgroups of the codomain").add_argument("hom")
    cocycle = command("cocycle", "Extension cocycle of an epimorphism")
    cocycle.add_argument("hom")
    cocycle.add_argument("--subgroup", default=None, help="Generators of a codomain subgroup to restrict to")
    hpoint = command("hpoint", "Whether an element is an H-point")
    hpoint.add_argument("group")
    hpoint.add_argument("target")
    hpoint.add_argument("element", type=int)
    command("covers", "All minimum covers by proper subgroups").add_argument("group")
    command("verify", "Run the theorem checks on one homomorphism").add_argument("hom")
    command("verify-batch", "Run the theorem checks over the catalog")
    search = command("search", "Scan the catalog for a named property")
    search.add_argument("--predicate", required=True, choices=sorted(PREDICATES))
    command("describe", "Element index table of a group").add_argument("group")
    return parser


def _apply_flags(args: argparse.Namespace) -> None:
    overrides = {"RANDOM_SEED": args.seed, "JOBS": args.jobs}
    if args.budget_nodes is not None:
        overrides["SEARCH_BUDGET_NODES"] = args.budget_nodes
        overrides["COVER_BUDGET_NODES"] = args.budget_nodes
    if args.max_order is not None:
        if args.command not in CATALOG_COMMANDS:
            overrides["MAX_ORDER"] = args.max_order
        elif args.max_order > settings.MAX_ORDER:
            overrides["MAX_ORDER"] = args.max_order
    configure(**overrides)


def _inputs(args: argparse.Namespace) -> dict:
    names = ("group", "target", "hom", "element", "subgroup", "predicate")
    return {n: str(getattr(args, n)) for n in names if getattr(args, n, None) is not None}


def run(args: argparse.Namespace) -> ResultDocument:
    """Execute one parsed command, mirroring any error into the document."""
    start = time.perf_counter()
    names = None
    try:
        _apply_flags(args)
        doc, names = COMMANDS[args.command](args, Elaborator())
    except USAGE_ERRORS as e:
        logger.error(f"{args.command}: {e}")
        doc = ResultDocument(command=args.command, inputs=_inputs(args), error=str(e), exit_code=EXIT_USAGE_ERROR)
    except SearchBudgetExceeded as e:
        logger.error(f"{args.command}: {e}")
        doc = ResultDocument(command=args.command, inputs=_inputs(args), error=str(e),
                             budget_status="exceeded", exit_code=EXIT_COMPUTATION_ERROR)
    except (SectioError, ValueError) as e:
        logger.error(f"{args.command}: {e}", exc_info=True)
        doc = ResultDocument(command=args.command, inputs=_inputs(args), error=str(e),
                             exit_code=EXIT_COMPUTATION_ERROR)
    doc.timing_seconds = time.perf_counter() - start
    if not args.json:
        print(render_text(doc, names), file=sys.stdout)
    print(json.dumps(doc.model_dump(mode="json"), indent=None if args.json else 2), file=sys.stdout)
    return doc


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE_ERROR
    doc = run(args)
    return doc.exit_code if doc.exit_code else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
