# coding: utf-8
"""
Internal Module only!

Shares events between solver classes. Listeners should use
:py:class:`~.shield_events.ShieldEvents` or :py:class:`~.shield_events.Events`.
"""
from __future__ import annotations
from weakref import ref, ReferenceType
from typing import Any, Dict, List, Protocol
from ..utils import type_var


class Observer(Protocol):
    """Receives every event a registry triggers"""

    def trigger(self, event_name: str, event_args: Any) -> None:
        ...


def _live(refs: List[ReferenceType]) -> List[ReferenceType]:
    return [r for r in refs if r() is not None]


class _WeakEvents(object):
    """Callback and observer registry holding weak references only."""

    def _init_registry(self) -> None:
        self._callbacks: Dict[str, List[ReferenceType[type_var.EventCallback]]] = {}
        self._observers: List[ReferenceType[Observer]] = []

    def on(self, event_name: str, callback: type_var.EventCallback) -> None:
        """
        Registers an event

        Args:
            event_name (str): Unique event name
            callback (Callable[[object, EventArgs], None]): Callback function
        """
        self._callbacks.setdefault(event_name, []).append(ref(callback))

    def remove(self, event_name: str, callback: type_var.EventCallback) -> bool:
        """
        Removes an event callback

        Args:
            event_name (str): Unique event name
            callback (Callable[[object, EventArgs], None]): Callback function

        Returns:
            bool: True if callback has been removed; Otherwise, False.
        """
        refs = self._callbacks.get(event_name)
        if not refs:
            return False
        try:
            refs.remove(ref(callback))
        except ValueError:
            return False
        return True

    def add_observer(self, *args: Observer) -> None:
        """
        Adds observers that get their ``trigger`` method called when this instance ``trigger`` method is called.

        Note:
            Observers are removed automatically when they are out of scope.
        """
        for observer in args:
            self._observers.append(ref(observer))

    def _event_source(self) -> Any:
        return self

    def _fire(self, event_name: str, event_args: Any) -> None:
        refs = self._callbacks.get(event_name)
        if refs:
            for callback_ref in list(refs):
                callback = callback_ref()
                if callback is None:
                    continue
                if event_args is None:
                    callback(self._event_source(), None)
                    continue
                event_args._event_name = event_name
                if event_args.event_source is None:
                    event_args._event_source = self._event_source()
                callback(event_args.source, event_args)
            refs[:] = _live(refs)
            if not refs:
                del self._callbacks[event_name]

    def _notify(self, event_name: str, event_args: Any) -> None:
        for observer_ref in list(self._observers):
            observer = observer_ref()
            if observer is not None:
                observer.trigger(event_name=event_name, event_args=event_args)
        self._observers[:] = _live(self._observers)

    def trigger(self, event_name: str, event_args: Any) -> None:
        """
        Trigger event(s) for a given name and forwards them to observers.

        Args:
            event_name (str): Name of event to trigger.
            event_args (EventArgs): Event args passed to the callback for trigger.
        """
        self._fire(event_name, event_args)
        self._notify(event_name, event_args)


class _Events(_WeakEvents):
    """
    Singleton that solver modules trigger their events on.
    """

    _instance = None

    def __new__(cls, *args, **kwargs):
        if not cls._instance:
            cls._instance = super(_Events, cls).__new__(cls, *args, **kwargs)
            cls._instance._init_registry()
        return cls._instance

    def __init__(self) -> None:
        pass
