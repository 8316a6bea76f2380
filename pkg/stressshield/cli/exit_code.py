# coding: utf-8
from __future__ import annotations
from enum import IntEnum


class ExitCode(IntEnum):
    """Process exit codes of the command line tool"""

    SUCCESS = 0
    USAGE = 2
    """Bad flags or values outside their valid range"""
    INFEASIBLE = 3
    """No real or no admissible field, report still written"""
    IO = 4
    """Output file could not be written"""
    CHECK_FAILED = 5
    """Closed form lost to the oracle by more than the tolerance"""
