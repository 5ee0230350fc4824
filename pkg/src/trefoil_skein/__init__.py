"""Exact computations in the Kauffman bracket skein module of the trefoil complement."""

from .exactcoeff import LaurentT, RatFuncT
from .quantum_torus import QTorusPoly, embed, qt_mul
from .torus_skein import TorusSkein, mul
from .trefoil_module import Chirality, ModuleElt, act, pi

__all__ = [
    "LaurentT", "RatFuncT", "TorusSkein", "mul", "QTorusPoly", "embed", "qt_mul",
    "Chirality", "ModuleElt", "act", "pi",
]
