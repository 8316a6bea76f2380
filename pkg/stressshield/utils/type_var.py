# coding: utf-8
from __future__ import annotations
from typing import Any, Callable, Tuple, Union
from os import PathLike

PathOrStr = Union[str, PathLike]
"""Path like object or string"""

Triple = Tuple[float, float, float]
"""Three scalars such as an eigenvalue triple."""

Vec3 = Tuple[float, float, float]
"""Three component vector stored as a tuple."""

Six = Tuple[float, float, float, float, float, float]
"""Symmetric tensor components in ``xx, yy, zz, xy, xz, yz`` order."""

EventCallback = Callable[[Any, Any], None]
"""Event Callback"""
