#!/usr/bin/env python
# coding: utf-8
"""
Command line entry point ``stress-shield``.
"""
from __future__ import annotations
import argparse
import sys
from typing import List, Sequence

from .. import __version__
from ..cfg.config import Config
from ..events.args.event_args import CancelEventArgs
from ..events.named_event import GblNamedEvent
from ..events.shield_events import EventArg, event_ctx
from ..exceptions import ex as mEx
from ..reduction.constrained import KktRule
from ..reduction.reduction_mode import ReductionMode
from ..sampling.montecarlo import InfeasiblePolicy
from ..utils.out import Out
from . import arg_types
from .cmds import check, map as map_cmd, mc, solve
from .exit_code import ExitCode

_MODES = [m.value for m in ReductionMode]
_RULES = [r.value for r in KktRule]


def _on_printing(source: object, args: CancelEventArgs) -> None:
    args.cancel = True


# region parser
# region        Create Parsers


def _create_parser(name: str) -> argparse.ArgumentParser:
    return argparse.ArgumentParser(prog=name, description="Optimal electric field for stress reduction.")


# endregion     Create Parsers

# region        process arg command
def _args_common(parser: argparse.ArgumentParser, modes: Sequence[str], mode_required: bool = True) -> None:
    parser.add_argument(
        "-m",
        "--mode",
        help="Minimization problem.",
        choices=list(modes),
        dest="mode",
        required=mode_required,
        default=None,
    )
    parser.add_argument(
        "-q",
        "--quiet",
        help="Suppress informational messages. Data output is unaffected.",
        action="store_true",
        dest="quiet",
        default=False,
    )


def _args_rule(parser: argparse.ArgumentParser, default: KktRule) -> None:
    parser.add_argument(
        "--rule",
        help=f"Constrained case rule. Defaults to {default.value}.",
        choices=_RULES,
        dest="rule",
        default=default.value,
    )


def _args_seed(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--seed",
        help=f"Unsigned 64 bit seed. Defaults to ${Config().seed_env_var} or 0.",
        type=arg_types.seed_value,
        dest="seed",
        default=None,
    )


def _args_json(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--json",
        help="Write a single JSON object instead of key=value lines.",
        action="store_true",
        dest="json",
        default=False,
    )


def _args_cmd_solve(parser: argparse.ArgumentParser) -> None:
    _args_common(parser, _MODES, mode_required=False)
    parser.add_argument(
        "-s",
        "--sigma",
        help="Stress components xx,yy,zz,xy,xz,yz, or xx,yy,xy with --plane.",
        type=arg_types.float_list,
        dest="sigma",
        required=True,
    )
    parser.add_argument(
        "--plane",
        help="Read --sigma as plane stress xx,yy,xy.",
        action="store_true",
        dest="plane",
        default=False,
    )
    parser.add_argument("--eps0", help="Vacuum permittivity. Defaults to 1.", type=float, dest="eps0", default=1.0)
    parser.add_argument(
        "--epsr", help="Relative permittivity. Defaults to 1.", type=float, dest="epsr", default=1.0
    )
    parser.add_argument(
        "--all-choices",
        help="Also report sigma_rel of every eigenvalue choice (unconstrained). With --json as all_choices.",
        action="store_true",
        dest="all_choices",
        default=False,
    )
    _args_rule(parser, KktRule.EXACT)
    _args_json(parser)


def _args_cmd_map(parser: argparse.ArgumentParser) -> None:
    _args_common(parser, _MODES)
    parser.add_argument("-o", "--out", help="Output CSV file.", dest="out", required=True)
    parser.add_argument(
        "-g",
        "--grid",
        help=f"Grid steps per axis. Defaults to {Config().map_grid}.",
        type=arg_types.positive_int,
        dest="grid",
        default=None,
    )
    parser.add_argument(
        "--range",
        help="Plane map eigenvalue range lo,hi. Defaults to -1,1.",
        type=arg_types.float_range,
        dest="range",
        default=(-1.0, 1.0),
    )
    _args_rule(parser, KktRule.LITERAL)


def _args_cmd_mc(parser: argparse.ArgumentParser) -> None:
    _args_common(parser, _MODES)
    parser.add_argument(
        "-n",
        "--samples",
        help=f"Sample count. Defaults to {Config().mc_samples}.",
        type=arg_types.positive_int,
        dest="samples",
        default=Config().mc_samples,
    )
    _args_seed(parser)
    parser.add_argument(
        "--policy",
        help="Infeasible sample policy. Defaults to count-as-one for unconstrained, exclude otherwise.",
        choices=[p.value for p in InfeasiblePolicy],
        dest="policy",
        default=None,
    )
    parser.add_argument(
        "-w",
        "--workers",
        help="Worker threads. Defaults to 1.",
        type=arg_types.positive_int,
        dest="workers",
        default=1,
    )
    _args_rule(parser, KktRule.LITERAL)
    _args_json(parser)


def _args_cmd_check(parser: argparse.ArgumentParser) -> None:
    _args_common(parser, _MODES)
    parser.add_argument(
        "-t",
        "--trials",
        help="Random tensors to check. Defaults to 100.",
        type=arg_types.positive_int,
        dest="trials",
        default=100,
    )
    _args_seed(parser)
    parser.add_argument(
        "--tol",
        help=f"Allowed objective gap relative to max(1, |sigma|^2). Defaults to {Config().check_tol}.",
        type=float,
        dest="tol",
        default=None,
    )
    _args_rule(parser, KktRule.EXACT)
    _args_json(parser)


def _args_process_cmd(a_parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.command == "solve":
        return solve.run(args)
    if args.command == "map":
        return map_cmd.run(args)
    if args.command == "mc":
        return mc.run(args)
    if args.command == "check":
        return check.run(args)
    if args.command == "version":
        Out.emit(__version__)
        return ExitCode.SUCCESS
    a_parser.print_help()
    return ExitCode.USAGE


def _args_action(a_parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    try:
        return int(_args_process_cmd(a_parser=a_parser, args=args))
    except mEx.CheckFailedError as e:
        Out.print(f"Check failed: {e.args[1]}", file=sys.stderr)
        return ExitCode.CHECK_FAILED
    except mEx.UnWritableError as e:
        Out.emit(f"error: {e}", sys.stderr)
        return ExitCode.IO
    except (mEx.UnsupportedPermittivityError, ValueError) as e:
        Out.emit(f"error: {e}", sys.stderr)
        return ExitCode.USAGE


# endregion        process arg command
# endregion parser


def main(argv: List[str] | None = None) -> int:
    """
    Runs the command line tool.

    Args:
        argv (List[str], optional): arguments without program name. Defaults to ``sys.argv[1:]``.

    Returns:
        int: process exit code, see :py:class:`~.exit_code.ExitCode`
    """
    parser = _create_parser("stress-shield")
    subparser = parser.add_subparsers(dest="command")

    cmd_solve = subparser.add_parser(name="solve", help="Solve a single stress tensor.")
    _args_cmd_solve(parser=cmd_solve)

    cmd_map = subparser.add_parser(name="map", help="Write a sigma_rel map as CSV.")
    _args_cmd_map(parser=cmd_map)

    cmd_mc = subparser.add_parser(name="mc", help="Monte Carlo mean of sigma_rel.")
    _args_cmd_mc(parser=cmd_mc)

    cmd_check = subparser.add_parser(name="check", help="Compare closed forms with the brute force oracle.")
    _args_cmd_check(parser=cmd_check)

    subparser.add_parser(name="version", help="Print version.")

    # region Read Args
    raw = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(arg_types.join_value_flags(raw))
    except SystemExit as e:
        # argparse exits 0 for --help and 2 on bad flags
        return ExitCode.SUCCESS if not e.code else ExitCode.USAGE
    # endregion Read Args

    if getattr(args, "quiet", False):
        with event_ctx(EventArg(GblNamedEvent.PRINTING, _on_printing)):
            return _args_action(a_parser=parser, args=args)
    return _args_action(a_parser=parser, args=args)


if __name__ == "__main__":
    raise SystemExit(main())
