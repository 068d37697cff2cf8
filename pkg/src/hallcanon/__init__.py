"""Exact Hall, canonical and iquantum algebra computations for Dynkin quivers."""

from .scalars import ScalarHalf, qbinom, qint, vpow
from .cartan import QuiverShape, RootDatum, parse_quiver_spec
from .hallgen import HallAlgebra
from .double import DrinfeldDouble
from .iquant import IQuantumGroup

__version__ = "0.1.0"

__all__ = ["ScalarHalf", "qbinom", "qint", "vpow", "QuiverShape", "RootDatum", "parse_quiver_spec",
           "HallAlgebra", "DrinfeldDouble", "IQuantumGroup", "__version__"]
