"""Partitions, abaci, the Mullineux map and branching combinatorics for
modular representations of symmetric groups."""

from .abacus import Abacus, node_classification, window
from .branching import GrothendieckSum, conjecture_sum, simple_branch
from .errors import SplittableError
from .families import acs_preimage, h_epsilon, is_big, is_completely_splittable, tilde
from .mullineux import MullineuxSymbol, mullineux, mullineux_symbol, partition_from_symbol
from .partitions import Node, Partition

__all__ = [
    "Abacus",
    "GrothendieckSum",
    "MullineuxSymbol",
    "Node",
    "Partition",
    "SplittableError",
    "acs_preimage",
    "conjecture_sum",
    "h_epsilon",
    "is_big",
    "is_completely_splittable",
    "mullineux",
    "mullineux_symbol",
    "node_classification",
    "partition_from_symbol",
    "simple_branch",
    "tilde",
    "window",
]
