"""Charts, monoid sections, weak morphisms, faces, scales and regularizations."""
from .chart import POINT, Chart
from .monoid import MonoidElement
from .morphism import AngleMap, WeakMorphism, compose, face, is_tangential_basepoint, tangential_basepoint
from .scale import Regularization, RegularizationReport, Scale, check_regularization

__all__ = [
    "Chart", "POINT", "MonoidElement", "AngleMap", "WeakMorphism", "compose", "face",
    "tangential_basepoint", "is_tangential_basepoint", "Scale", "Regularization",
    "RegularizationReport", "check_regularization",
]
