from __future__ import annotations
from typing import Any, List
import pytest

if __name__ == "__main__":
    pytest.main([__file__])

from stressshield.events.args.event_args import CancelEventArgs, EventArgs
from stressshield.events.args.solve_args import SolveArgs, SolveCancelArgs
from stressshield.events.named_event import GblNamedEvent, SolveNamedEvent
from stressshield.events.shield_events import EventArg, Events, ShieldEvents, event_ctx
from stressshield.exceptions import ex as mEx
from stressshield.reduction.constrained import Constrained
from stressshield.reduction.plane_stress import PlaneStress, SymStress2
from stressshield.reduction.unconstrained import Unconstrained
from stressshield.utils.out import Out
from stressshield.utils.tensor_core import SymStress3


def test_event() -> None:
    fired = False

    def on_ev(source, event: EventArgs):
        nonlocal fired
        fired = True

    events = Events()
    events.on("ev", on_ev)
    events.trigger("ev", EventArgs("test"))
    assert fired is True


def test_event_cls_source() -> None:
    class MyClass:
        def __init__(self) -> None:
            self.events = Events(source=self)
            self.fired = False
            self.events.on("ev", MyClass.on_ev)

        def trigger(self) -> None:
            self.events.trigger("ev", EventArgs(self.__class__.__name__))

        @staticmethod
        def on_ev(source, event: EventArgs) -> None:
            event.event_source.fired = True

    clazz = MyClass()
    assert clazz.fired is False
    clazz.trigger()
    assert clazz.fired is True


def test_event_remove() -> None:
    count = 0

    def on_ev(source, event: EventArgs):
        nonlocal count
        count += 1

    events = Events()
    events.on("ev", on_ev)
    events.trigger("ev", EventArgs("test"))
    assert events.remove("ev", on_ev) is True
    assert events.remove("ev", on_ev) is False
    events.trigger("ev", EventArgs("test"))
    assert count == 1


def test_shield_events_singleton() -> None:
    assert ShieldEvents() is ShieldEvents()


def test_solver_events() -> None:
    names: List[str] = []

    def on_solve(source: Any, args: SolveArgs) -> None:
        names.append(args.event_name)

    events = Events()
    for name in (
        SolveNamedEvent.UNCONSTRAINED_SOLVING,
        SolveNamedEvent.UNCONSTRAINED_SOLVED,
        SolveNamedEvent.INFEASIBLE,
    ):
        events.on(name, on_solve)
    Unconstrained.solve_unconstrained(SymStress3.diag(-1.0, 1.0, 1.0))
    assert names == [SolveNamedEvent.UNCONSTRAINED_SOLVING, SolveNamedEvent.UNCONSTRAINED_SOLVED]
    names.clear()
    Unconstrained.solve_unconstrained(SymStress3.diag(-1.0, -1.0, -1.0))
    assert names == [SolveNamedEvent.UNCONSTRAINED_SOLVING, SolveNamedEvent.INFEASIBLE]


def test_solver_solved_result() -> None:
    results: List[Any] = []

    def on_solved(source: Any, args: SolveArgs) -> None:
        results.append(args.result)

    events = Events()
    events.on(SolveNamedEvent.TENSILE_SOLVED, on_solved)
    sol = Constrained.solve_tensile(SymStress3.diag(4.0, 2.0, -1.0))
    assert results == [sol]


def test_infeasible_solve_is_not_reported_solved() -> None:
    seen: List[str] = []

    def on_ev(source: Any, args: SolveArgs) -> None:
        seen.append(args.event_name)

    events = Events()
    for name in (
        SolveNamedEvent.TENSILE_SOLVED,
        SolveNamedEvent.COMPRESSIVE_SOLVED,
        SolveNamedEvent.INFEASIBLE,
    ):
        events.on(name, on_ev)
    Constrained.solve_tensile(SymStress3.diag(-1.0, -2.0, 3.0))
    assert seen == [SolveNamedEvent.INFEASIBLE]
    seen.clear()
    Constrained.solve_compressive(SymStress3.diag(1.0, 1.0, 1.0))
    assert seen == [SolveNamedEvent.INFEASIBLE]
    seen.clear()
    with pytest.raises(mEx.InfeasibleError):
        Constrained.solve_compressive(SymStress3.diag(1.0, 2.0, 3.0), raise_err=True)
    assert seen == [SolveNamedEvent.INFEASIBLE]


@pytest.mark.parametrize(
    "name,solve",
    [
        (SolveNamedEvent.UNCONSTRAINED_SOLVING, lambda: Unconstrained.solve_unconstrained(SymStress3.diag(1, 2, 3))),
        (SolveNamedEvent.TENSILE_SOLVING, lambda: Constrained.solve_tensile(SymStress3.diag(1, 2, 3))),
        (SolveNamedEvent.COMPRESSIVE_SOLVING, lambda: Constrained.solve_compressive(SymStress3.diag(-1, -2, 3))),
        (SolveNamedEvent.PLANE_SOLVING, lambda: PlaneStress.solve_plane(SymStress2.diag(1, 2))),
    ],
)
def test_solver_cancel(name: str, solve) -> None:
    def on_solving(source: Any, args: SolveCancelArgs) -> None:
        args.cancel = True

    with event_ctx(EventArg(name, on_solving)):
        with pytest.raises(mEx.CancelEventError):
            solve()


def test_printing_cancel(capsys) -> None:
    def on_printing(source: Any, args: CancelEventArgs) -> None:
        args.cancel = True

    with event_ctx(EventArg(GblNamedEvent.PRINTING, on_printing)):
        Out.print("hidden")
        Out.emit("data")
    Out.print("shown")
    captured = capsys.readouterr()
    assert "hidden" not in captured.out
    assert "data" in captured.out
    assert "shown" in captured.out
