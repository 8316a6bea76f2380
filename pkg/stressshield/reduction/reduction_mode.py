# coding: utf-8
from __future__ import annotations
from enum import Enum


class ReductionMode(str, Enum):
    """Minimization problem to solve"""

    UNCONSTRAINED = "unconstrained"
    """Free field, total stress of any sign."""
    TENSILE = "tensile"
    """Total stress eigenvalues must stay ``>= 0``."""
    COMPRESSIVE = "compressive"
    """Total stress eigenvalues must stay ``<= 0``."""
    PLANE = "plane"
    """Two dimensional plane stress."""

    def __str__(self) -> str:
        return self.value

    @property
    def is_constrained(self) -> bool:
        """Gets if mode carries a sign constraint"""
        return self in (ReductionMode.TENSILE, ReductionMode.COMPRESSIVE)
