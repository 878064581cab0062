"""Natural-number arithmetic over pluggable digit representations.

Three interchangeable representations implement one generic contract:

- :data:`BIGNAT` -- plain Python ints, the correctness baseline;
- :data:`BIJ` -- symbolic bijective base-2 digit sequences;
- :data:`TREE` -- recursively run-length compressed trees, which keep
  giant numbers (Mersenne, Fermat, perfect, sparse sets) tiny and make
  operations like exp2 and bitsize cheap.

See :mod:`giantnat.codecs` for collection encodings and bitwise algebra,
:mod:`giantnat.numtheory` for special numbers, primes and benchmarks, and
:mod:`giantnat.cli` for the command-line front end.
"""

from .core import EQ, GT, LT, DomainError, NatRep, Ordering, ParseError, view
from .bignat import BIGNAT, BigNatRep
from .bij import BIJ, BijDigits, BijNatRep
from .tree import LEAF, TREE, Dag, Tree, TreeNatRep, VNode, WNode

__version__ = "0.1.0"

__all__ = [
    "BIGNAT",
    "BIJ",
    "BigNatRep",
    "BijDigits",
    "BijNatRep",
    "Dag",
    "DomainError",
    "EQ",
    "GT",
    "LEAF",
    "LT",
    "NatRep",
    "Ordering",
    "ParseError",
    "TREE",
    "Tree",
    "TreeNatRep",
    "VNode",
    "WNode",
    "view",
    "__version__",
]
