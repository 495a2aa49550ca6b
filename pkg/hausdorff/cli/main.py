"""
Command line front end::

    hausdorff classify --num "(x+1.5)(x+2)(x+4)" --den "(x+1)(x+3)(x+3.5)" --property cm
    hausdorff net2d --family bipoly-i --params 1,1,1,2

Shifts follow r(x) = prod (x+a_i) / prod (x+b_i): the actual zeros and poles sit at -a_i, -b_i.
"""
from __future__ import annotations
import argparse
import logging
import sys
from typing import List, Optional

import hausdorff
from hausdorff.cli.classify import (
    NET_FAMILIES,
    AnalysisRequest,
    NetRequest,
    classify_command,
    conditions_command,
    decompose_command,
    net2d_command,
    weight_command,
)
from hausdorff.cli.parse import parse_factored_poly, parse_pair, parse_rational_list
from hausdorff.cli.serialize import report_to_json, report_to_text
from hausdorff.exact import rat_from_string
from hausdorff.exceptions import HausdorffError
from hausdorff.oracle import DEFAULT_TOL_REL, Budget, Property
from hausdorff.weight import DEFAULT_GRID_SIZE

logger = logging.getLogger(__name__)

COMMANDS = {
    "classify": classify_command,
    "decompose": decompose_command,
    "weight": weight_command,
    "conditions": conditions_command,
    "net2d": net2d_command,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--num", help='factored numerator, e.g. "(x+1.5)(x+2)"')
    common.add_argument("--num-coeffs", help="numerator coefficients, ascending degree, comma separated")
    common.add_argument("--den", help='factored denominator, e.g. "(x+1)(x+3)"; omit for none')
    common.add_argument("--property", choices=("cm", "ca", "both"), default="both")
    common.add_argument("--max-order", type=int, default=Budget.max_order)
    common.add_argument("--max-shift", type=int, default=Budget.max_shift)
    common.add_argument("--max-order-2d", default=None, help="N1,N2")
    common.add_argument("--max-shift-2d", default=None, help="M1,M2")
    common.add_argument("--grid", type=int, default=DEFAULT_GRID_SIZE)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL_REL)
    common.add_argument("--shift", default="0", help="add a constant to the sequence")
    common.add_argument("--dump-weight", metavar="PATH", help="write sampled (t, w) as CSV")
    common.add_argument("--json", action="store_true")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="hausdorff",
        description="Complete monotonicity and complete alternation of rational sequences and nets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("classify", "decompose", "weight", "conditions"):
        sub.add_parser(name, parents=[common])
    net = sub.add_parser("net2d", parents=[common])
    net.add_argument("--family", choices=NET_FAMILIES, required=True)
    net.add_argument("--params", default="", help="comma separated family parameters")
    net.add_argument("--alpha", default="1", help="scale of n in 1 / (psi(m) + alpha n)")
    return parser


def request_from_args(args: argparse.Namespace) -> AnalysisRequest:
    defaults = Budget()
    budget = Budget(
        args.max_order,
        args.max_shift,
        parse_pair(args.max_order_2d) if args.max_order_2d else defaults.max_order_2d,
        parse_pair(args.max_shift_2d) if args.max_shift_2d else defaults.max_shift_2d,
    )
    properties = (
        frozenset(Property) if args.property == "both" else frozenset((Property(args.property.upper()),))
    )
    net = None
    if args.command == "net2d":
        params = tuple(parse_rational_list(args.params)) if args.params.strip() else ()
        net = NetRequest(args.family, params, rat_from_string(args.alpha))
    return AnalysisRequest(
        poles=tuple(parse_factored_poly(args.den)) if args.den else (),
        zeros=tuple(parse_factored_poly(args.num)) if args.num else None,
        numerator_coeffs=tuple(parse_rational_list(args.num_coeffs)) if args.num_coeffs else None,
        net=net,
        properties=properties,
        budget=budget,
        grid_size=args.grid,
        tol_rel=args.tol,
        shift=rat_from_string(args.shift),
        dump_weight=args.dump_weight,
    )


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG)
        hausdorff._debug = True
    try:
        report = COMMANDS[args.command](request_from_args(args))
    except HausdorffError as e:
        print("error: " + e.message, file=sys.stderr)
        return e.exit_code
    print(report_to_json(report) if args.json else report_to_text(report))
    return 0
