# coding: utf-8
"""
Value parsing shared by the sub-commands.
"""
from __future__ import annotations
import argparse
import math
import os
from typing import List, Sequence, Tuple

from ..cfg.config import Config
from ..utils.tensor_core import MaterialParams

VALUE_FLAGS = ("--sigma", "--range")
"""Flags whose comma separated values may start with a minus sign"""


def join_value_flags(argv: Sequence[str]) -> List[str]:
    """
    Rewrites ``--sigma -5,-3,0`` as ``--sigma=-5,-3,0``.

    argparse would otherwise read a leading minus as a new option.
    """
    out: List[str] = []
    i = 0
    while i < len(argv):
        arg = argv[i]
        if arg in VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{arg}={argv[i + 1]}")
            i += 2
            continue
        out.append(arg)
        i += 1
    return out


def float_list(text: str) -> Tuple[float, ...]:
    """
    Parses comma separated finite floats.

    Raises:
        argparse.ArgumentTypeError: If a value is not a finite number.
    """
    try:
        values = tuple(float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated numbers, got '{text}'")
    if not all(math.isfinite(v) for v in values):
        raise argparse.ArgumentTypeError(f"values must be finite, got '{text}'")
    return values


def float_range(text: str) -> Tuple[float, float]:
    """Parses ``lo,hi`` with ``lo < hi``"""
    values = float_list(text)
    if len(values) != 2 or not values[0] < values[1]:
        raise argparse.ArgumentTypeError(f"expected lo,hi with lo < hi, got '{text}'")
    return values[0], values[1]


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{text}'")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def seed_value(text: str) -> int:
    """Parses an unsigned 64 bit seed"""
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer seed, got '{text}'")
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64 bit integer, got {value}")
    return value


def resolve_seed(args: argparse.Namespace) -> int:
    """
    Gets ``--seed``, else the seed environment variable, else ``0``.

    Raises:
        ValueError: If the environment variable does not hold a valid seed.
    """
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get(Config().seed_env_var, "").strip()
    if not env:
        return 0
    try:
        return seed_value(env)
    except argparse.ArgumentTypeError as e:
        raise ValueError(f"{Config().seed_env_var}: {e}") from e


def material(args: argparse.Namespace) -> MaterialParams:
    """
    Gets material from ``--eps0`` and ``--epsr``.

    Raises:
        MaterialParamsError: If a value is out of range.
    """
    return MaterialParams(eps0=args.eps0, epsr=args.epsr)
