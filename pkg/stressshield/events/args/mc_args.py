# coding: utf-8
from __future__ import annotations
from typing import Any
from .event_args import AbstractEvent


class McArgs(AbstractEvent):
    """Monte Carlo progress args."""

    __slots__ = ("source", "_event_name", "event_data", "_event_source", "mode", "n", "seed", "shard", "estimate")

    def __init__(self, source: Any, mode: str, n: int, seed: int) -> None:
        """
        Constructor

        Args:
            source (Any): Event Source
            mode (str): Reduction mode being sampled
            n (int): Total sample count
            seed (int): Root seed
        """
        super().__init__(source)
        self.mode = mode
        self.n = n
        self.seed = seed
        self.shard = -1
        self.estimate = None

    mode: str
    n: int
    seed: int
    shard: int
    """Index of the finished shard, ``-1`` outside of shard events"""
    estimate: Any
    """Final ``McEstimate`` on ``MC_DONE``"""


class McCancelArgs(McArgs):
    """Args raised before sampling starts. Setting ``cancel`` aborts the run."""

    __slots__ = ("cancel",)

    def __init__(self, source: Any, mode: str, n: int, seed: int, cancel: bool = False) -> None:
        super().__init__(source=source, mode=mode, n=n, seed=seed)
        self.cancel = cancel

    cancel: bool
    """Gets/Sets cancel value"""
