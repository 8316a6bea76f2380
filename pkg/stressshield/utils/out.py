# coding: utf-8
from __future__ import annotations
import sys
from typing import Any, Iterable, Mapping, TextIO

from ..events.args.event_args import CancelEventArgs
from ..events.event_singleton import _Events
from ..events.named_event import GblNamedEvent


class Out:
    """Console output helpers."""

    @staticmethod
    def fmt(value: Any) -> str:
        """
        Formats a value for machine readable output.

        Floats use 17 significant digits so they parse back bit exact.
        ``None`` formats as an empty string and booleans as ``1`` / ``0``.

        Args:
            value (Any): value to format

        Returns:
            str: formatted value
        """
        if value is None:
            return ""
        if isinstance(value, bool):
            return "1" if value else "0"
        if isinstance(value, float):
            return format(value, ".17g")
        if isinstance(value, (tuple, list)):
            return ",".join(Out.fmt(v) for v in value)
        return str(value)

    @staticmethod
    def print(*args: Any, **kwargs: Any) -> None:
        """
        Prints to console unless a ``GblNamedEvent.PRINTING`` handler cancels it.

        Args:
            args (Any): passed to ``print()``
            kwargs (Any): passed to ``print()``
        """
        cargs = CancelEventArgs(Out.print.__qualname__)
        cargs.event_data = args
        _Events().trigger(GblNamedEvent.PRINTING, cargs)
        if cargs.cancel:
            return
        print(*args, **kwargs)

    @staticmethod
    def emit_kv(pairs: Mapping[str, Any] | Iterable[tuple], stream: TextIO | None = None) -> None:
        """
        Writes ``key=value`` lines. Never gated by ``PRINTING``.

        Args:
            pairs (Mapping[str, Any] | Iterable[tuple]): keys and values in output order.
            stream (TextIO, optional): Defaults to ``sys.stdout``.
        """
        out = sys.stdout if stream is None else stream
        items = pairs.items() if isinstance(pairs, Mapping) else pairs
        for key, value in items:
            out.write(f"{key}={Out.fmt(value)}\n")

    @staticmethod
    def emit(text: str, stream: TextIO | None = None) -> None:
        """
        Writes one line of machine readable output. Never gated by ``PRINTING``.

        Args:
            text (str): line without trailing newline.
            stream (TextIO, optional): Defaults to ``sys.stdout``.
        """
        out = sys.stdout if stream is None else stream
        out.write(text)
        out.write("\n")
