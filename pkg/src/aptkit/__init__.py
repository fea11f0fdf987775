"""aptkit: exact barcode algebra over polynomial Novikov rings, interleaving
distances, and the rational polyhedral fan machinery behind Novikov toric
gluing.  Everything is computed in exact rational arithmetic."""

from .barcodes import Bar, Barcode, DecoratedInterval, bar, barcode, interval
from .geometry import Cone, Fan, dual_cone, faces_of, is_proper, separating_vector, validate_fan
from .k0 import K0Class
from .modules import PresentationND, free_module
from .polyhedra import OpenPolyhedron

__all__ = [
    "Bar",
    "Barcode",
    "Cone",
    "DecoratedInterval",
    "Fan",
    "K0Class",
    "OpenPolyhedron",
    "PresentationND",
    "bar",
    "barcode",
    "dual_cone",
    "faces_of",
    "free_module",
    "interval",
    "is_proper",
    "separating_vector",
    "validate_fan",
]

__version__ = "0.1.0"
