"""Exact verification toolkit for near-adjoint Kirillov-Reshetikhin modules."""

from .cartan import TYPES, build
from .qnum import LaurentPoly, QRat, qbinom, qint, render
from .straighten import inner, kr_axioms, normalize, prove_equal

__all__ = ["TYPES", "LaurentPoly", "QRat", "build", "inner", "kr_axioms", "normalize",
           "prove_equal", "qbinom", "qint", "render"]
__version__ = "0.1.0"
