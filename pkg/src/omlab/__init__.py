"""omlab: Orlicz-Morrey norm computations with executable inclusion checks.

The package computes Luxemburg-type gauges for several Orlicz-Morrey space
variants (weight inside the integral, weight outside the per-ball mean,
their weak distribution-function versions, and an unnormalized third
variant), evaluates closed-form ball-indicator norms as built-in oracles,
and verifies the inclusion relations between spaces with the explicit
constants the order hypotheses predict.
"""

from . import geometry, growth, inclusion, norms, young
from .errors import (
    DocumentError,
    DomainError,
    HypothesisError,
    OmlabError,
    UnsupportedGeometryError,
)

__all__ = [
    "geometry",
    "growth",
    "inclusion",
    "norms",
    "young",
    "OmlabError",
    "DomainError",
    "UnsupportedGeometryError",
    "HypothesisError",
    "DocumentError",
]

__version__ = "0.1.0"
