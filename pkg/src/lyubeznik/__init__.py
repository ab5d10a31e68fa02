"""Deciding whether a monomial ideal has a minimal Lyubeznik resolution."""
from .core import GeneratorSet, divides, minimalize, multidegree
from .decide import Verdict, check_order, decide, oracle_decide
from .ideal_io import parse_ideal
from .orders import TotalOrder

__all__ = [
    "GeneratorSet",
    "TotalOrder",
    "Verdict",
    "check_order",
    "decide",
    "divides",
    "minimalize",
    "multidegree",
    "oracle_decide",
    "parse_ideal",
]
