"""Exact fusion rules and modular data for affine vertex algebras at admissible level
and for rational principal W-algebras."""
from __future__ import annotations

from .cyclo import CycloNum, root_of_unity
from .liealg import RootSystem, Weight, build_root_system, dual_root_system

__all__ = ["CycloNum", "RootSystem", "Weight", "build_root_system", "dual_root_system", "root_of_unity"]
__version__ = "0.1.0"
