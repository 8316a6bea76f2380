# coding: utf-8
from __future__ import annotations
from typing import Any
from abc import ABC


class AbstractEvent(ABC):
    """
    Base of every event payload.

    ``source`` is the qualified name of the raising solver or helper. The dispatcher fills
    ``event_name`` and ``event_source`` when the args are delivered.
    """

    __slots__ = ()

    def __init__(self, source: Any) -> None:
        self.source = source
        self._event_name = ""
        self._event_source = None
        self.event_data = None

    source: Any
    """Gets/Sets Event source"""
    event_data: Any
    """Gets/Sets any extra payload, such as map rows or printed values"""

    @property
    def event_name(self) -> str:
        """Name the args were last triggered with"""
        return self._event_name

    @property
    def event_source(self) -> Any | None:
        """``Events`` instance or custom source that delivered the args"""
        return self._event_source

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__}: {self.event_name}>"


class EventArgs(AbstractEvent):
    """Plain args for events that carry only ``event_data``"""

    __slots__ = ("source", "_event_name", "event_data", "_event_source")


class CancelEventArgs(AbstractEvent):
    """
    Args of cancellable events without a typed payload, such as ``GblNamedEvent.PRINTING``.
    """

    __slots__ = ("source", "_event_name", "event_data", "cancel", "_event_source")

    def __init__(self, source: Any, cancel: bool = False) -> None:
        super().__init__(source)
        self.cancel = cancel

    cancel: bool
    """Gets/Sets cancel value"""
