# coding: utf-8
from __future__ import annotations
from typing import Any, TYPE_CHECKING
from ..utils.type_var import PathOrStr

if TYPE_CHECKING:
    from ..events.args.event_args import AbstractEvent


class StressShieldError(Exception):
    """Base error of this package"""

    pass


class MaterialParamsError(StressShieldError, ValueError):
    """Error when material parameters are outside their physical range"""

    def __init__(self, name: str, value: float, message: Any = None) -> None:
        """
        MaterialParamsError Constructor

        Args:
            name (str): Parameter name such as ``eps0``
            value (float): Rejected value
            message (Any, optional): Message of error
        """
        if message is None:
            message = f"Invalid material parameter {name}={value!r}"
        super().__init__(name, value, message)

    def __str__(self) -> str:
        return repr(self.args[2])


class NonFiniteError(StressShieldError, ValueError):
    """Error when a tensor or field component is NaN or infinite"""

    def __init__(self, name: str, value: float) -> None:
        super().__init__(name, value)

    def __str__(self) -> str:
        return repr(f"Component '{self.args[0]}' is not finite: {self.args[1]!r}")


class UnsupportedPermittivityError(StressShieldError):
    """
    Error when a solver that is derived for ``epsr = 1`` is called with another relative permittivity.
    """

    def __init__(self, epsr: float, solver: str = "") -> None:
        """
        UnsupportedPermittivityError Constructor

        Args:
            epsr (float): Relative permittivity that was passed.
            solver (str, optional): Name of rejecting solver.
        """
        super().__init__(epsr, solver)

    def __str__(self) -> str:
        name = self.args[1] or "solver"
        return repr(f"{name} supports only epsr = 1, got epsr={self.args[0]!r}")


class DegenerateStressError(StressShieldError, ValueError):
    """Error when a relative reduction is requested for an all zero eigenvalue triple"""

    pass


class EigenConvergenceError(StressShieldError):
    """Error when the Jacobi iteration does not converge within the sweep limit"""

    def __init__(self, sweeps: int, off_norm: float, message: Any = None) -> None:
        """
        EigenConvergenceError Constructor

        Args:
            sweeps (int): Number of sweeps performed
            off_norm (float): Remaining off diagonal norm
            message (Any, optional): Message of error
        """
        if message is None:
            message = f"Jacobi did not converge after {sweeps} sweeps, off diagonal norm: {off_norm:.4e}"
        super().__init__(sweeps, off_norm, message)

    def __str__(self) -> str:
        return repr(self.args[2])


class NoRealSolutionError(StressShieldError):
    """Error when the field magnitude of the unconstrained optimum is imaginary"""

    def __init__(self, result: Any, message: Any = None) -> None:
        """
        NoRealSolutionError Constructor

        Args:
            result (NoRealSolution): Result record describing the failure
            message (Any, optional): Message of error
        """
        if message is None:
            message = f"No real field exists, discriminant: {result.report.discriminant:.6g}"
        super().__init__(result, message)

    @property
    def result(self) -> Any:
        """Gets the ``NoRealSolution`` record"""
        return self.args[0]

    def __str__(self) -> str:
        return repr(self.args[1])


class InfeasibleError(StressShieldError):
    """Error when a sign constrained total stress cannot be reached"""

    def __init__(self, result: Any, message: Any = None) -> None:
        """
        InfeasibleError Constructor

        Args:
            result (Infeasible): Result record describing the failure
            message (Any, optional): Message of error
        """
        if message is None:
            message = f"{result.constraint.value} reduction is infeasible: {result.reason}"
        super().__init__(result, message)

    @property
    def result(self) -> Any:
        """Gets the ``Infeasible`` record"""
        return self.args[0]

    def __str__(self) -> str:
        return repr(self.args[1])


class CancelEventError(StressShieldError):
    """Error when an Event is canceled"""

    def __init__(self, event_args: AbstractEvent, message: Any = None, *args) -> None:
        """
        Cancel Event Error constructor

        Args:
            event_args (AbstractEvent): Args whose ``cancel`` was set
            message (Any, optional): Message of error
        """
        if message is None:
            message = f"Event '{event_args.event_name}' is canceled!"
        super().__init__(event_args, message, *args)

    def __str__(self) -> str:
        return repr(self.args[1])


class UnWritableError(StressShieldError):
    """Error when a dataset file can not be written"""

    def __init__(self, fnm: PathOrStr, *args: object) -> None:
        """
        UnWritableError Constructor

        Args:
            fnm (PathOrStr): File path that is not able to be written.
        """
        super().__init__(fnm, *args)

    def __str__(self) -> str:
        return repr(f"Un-writable file: '{self.args[0]}'")


class CheckFailedError(StressShieldError):
    """Error when a closed form objective exceeds the oracle objective by more than the tolerance"""

    def __init__(self, report: Any, message: Any = None) -> None:
        """
        CheckFailedError Constructor

        Args:
            report (CheckReport): Report of the failed check
            message (Any, optional): Message of error
        """
        if message is None:
            message = f"{report.violations} of {report.trials} trials exceed tol {report.tol:.3g}"
        super().__init__(report, message)

    def __str__(self) -> str:
        return repr(self.args[1])
