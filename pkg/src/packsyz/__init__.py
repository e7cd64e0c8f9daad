"""Equivariant homology of packing complexes and syzygies of Segre-Veronese varieties."""

from .characters import ClassFunction, Decomposition
from .complex import PackingComplex, ResourceLimitError
from .config import Config
from .partitions import NPartition, Partition

__version__ = "0.1.0"

__all__ = [
    "ClassFunction",
    "Config",
    "Decomposition",
    "NPartition",
    "PackingComplex",
    "Partition",
    "ResourceLimitError",
    "__version__",
]
