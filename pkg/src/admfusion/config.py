"""Process-wide size caps and display precision shared by the compute modules."""
from __future__ import annotations

from dataclasses import dataclass

from .liealg import DEFAULT_WEYL_MAX


@dataclass
class Limits:
    weyl_max: int = DEFAULT_WEYL_MAX
    simples_max: int = 2000
    precision_bits: int = 53


LIMITS = Limits()
