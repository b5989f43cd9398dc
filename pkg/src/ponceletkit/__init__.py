"""Poncelet curve packages on the unit circle via orthogonal polynomials,
Blaschke products and cut-off CMV matrices."""

from . import blaschke, cmv, cpoly, ellipse, numrange, opuc, poncelet
from .blaschke import BlaschkeProduct
from .cpoly import ComplexPoly
from .ellipse import EllipseComponent
from .poncelet import BezoutianP, CurveSample, InfinitePole, PonceletFamily

__version__ = "0.1.0"

__all__ = [
    "blaschke",
    "cmv",
    "cpoly",
    "ellipse",
    "numrange",
    "opuc",
    "poncelet",
    "BlaschkeProduct",
    "ComplexPoly",
    "EllipseComponent",
    "BezoutianP",
    "CurveSample",
    "InfinitePole",
    "PonceletFamily",
]
