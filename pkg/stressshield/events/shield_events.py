# coding: utf-8
"""
Public event hooks.

Solvers trigger on an internal singleton; :py:class:`ShieldEvents` observes it and
forwards to every live :py:class:`Events` instance.
"""
from __future__ import annotations
import contextlib
from weakref import proxy
from typing import Any, Generator, NamedTuple

from ..utils.type_var import EventCallback as EventCallback
from . import event_singleton


class EventArg(NamedTuple):
    """
    Event Args for passing event to :py:func:`~.event_ctx`
    """

    name: str
    """Event name"""
    callback: EventCallback
    """Event Callback"""


class ShieldEvents(event_singleton._WeakEvents):
    """Singleton Class for global events."""

    _instance = None

    def __new__(cls, *args, **kwargs):
        if not cls._instance:
            cls._instance = super(ShieldEvents, cls).__new__(cls, *args, **kwargs)
            cls._instance._init_registry()
            event_singleton._Events().add_observer(cls._instance)
        return cls._instance

    def __init__(self) -> None:
        pass


class Events(event_singleton._WeakEvents):
    """
    Locally scoped events.

    Callbacks are held as weak references. Keep a reference to a callback for as long as it
    should fire; bound methods assigned in ``__init__`` go out of scope immediately.
    """

    def __init__(self, source: Any | None = None) -> None:
        """
        Construct for Events

        Args:
            source (Any | None, optional): Value assigned to ``EventArgs.event_source``.
                Defaults to current instance of this class.
        """
        self._init_registry()
        self._source = source
        ShieldEvents().add_observer(self)

    def _event_source(self) -> Any:
        return self if self._source is None else self._source

    def _fire(self, event_name: str, event_args: Any) -> None:
        if event_args is not None:
            event_args._event_source = None
        super()._fire(event_name, event_args)


@contextlib.contextmanager
def event_ctx(*args: EventArg) -> Generator[Events, None, None]:
    """
    Event context manager.

    Adds callbacks for the duration of the block.

    Parameters:
        args (EventArg): One or more EventArgs to add.

    Yields:
        Generator[Events, None, None]: proxy of the scoped events

    .. collapse:: Example

        .. code-block:: python

            def on_printing(source, args):
                args.cancel = True

            with event_ctx(EventArg(GblNamedEvent.PRINTING, on_printing)):
                Out.print("not shown")
    """
    e_obj = Events()
    try:
        for arg in args:
            e_obj.on(arg.name, arg.callback)
        yield proxy(e_obj)
    finally:
        e_obj = None
