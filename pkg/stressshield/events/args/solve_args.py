# coding: utf-8
from __future__ import annotations
from typing import Any
from .event_args import AbstractEvent


class SolveArgs(AbstractEvent):
    """
    Args raised after a reduction solver finished.

    ``result`` holds the returned solution, ``NoRealSolution`` or ``Infeasible`` record.
    """

    __slots__ = ("source", "_event_name", "event_data", "_event_source", "mode", "sigma", "result")

    def __init__(self, source: Any, mode: str, sigma: Any = None, result: Any = None) -> None:
        """
        Constructor

        Args:
            source (Any): Event Source
            mode (str): Reduction mode such as ``tensile``
            sigma (Any, optional): Input stress tensor
            result (Any, optional): Solver result
        """
        super().__init__(source)
        self.mode = mode
        self.sigma = sigma
        self.result = result

    mode: str
    sigma: Any
    result: Any


class SolveCancelArgs(SolveArgs):
    """Args raised before a reduction solver runs. Setting ``cancel`` aborts the solve."""

    __slots__ = ("cancel",)

    def __init__(self, source: Any, mode: str, sigma: Any = None, cancel: bool = False) -> None:
        super().__init__(source=source, mode=mode, sigma=sigma)
        self.cancel = cancel

    cancel: bool
    """Gets/Sets cancel value"""
