"""Exact decision tooling for order-Ramsey properties of one-dimensional
semialgebraic predicate sets: predicate language, constructive
extraction pipelines, candidate-type analysis, and a real-closed-field
sentence decider built on cylindrical algebraic decomposition."""

from .algebra import TransformKind
from .poly import MultiPoly

__all__ = ["MultiPoly", "TransformKind"]
__version__ = "0.1.0"
