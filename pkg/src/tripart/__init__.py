"""Tree/cotree/leftover decompositions of ordered polyhedral complexes over GF(2).

For every dimension p, the p-cells of a finite complex split into a maximal
p-tree, a maximal p-cotree, and a leftover set whose size is the p-th reduced
Betti number; the split, the canonical (co)cycle and (co)chain bases that come
with it, and a battery of independent checks are all computed here.
"""

from .complexes import (
    Cell,
    ComplexFormatError,
    OrderedComplex,
    from_boundary_format,
    from_simplicial_format,
)
from .gf2 import Gf2Matrix, int_product
from .kernels import BACKEND
from .reduction import (
    betti_numbers,
    classify,
    exhaustive_column_reduce,
    exhaustive_row_reduce,
    relative_cohomology_ranks,
)
from .tripartition import (
    IncrementalTriPartition,
    PersistenceDiagram,
    TriPartition,
    betti_of_prefix,
    persistence_diagram,
    tri_partition,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Cell",
    "ComplexFormatError",
    "Gf2Matrix",
    "IncrementalTriPartition",
    "OrderedComplex",
    "PersistenceDiagram",
    "TriPartition",
    "betti_numbers",
    "betti_of_prefix",
    "classify",
    "exhaustive_column_reduce",
    "exhaustive_row_reduce",
    "from_boundary_format",
    "from_simplicial_format",
    "int_product",
    "persistence_diagram",
    "relative_cohomology_ranks",
    "tri_partition",
    "__version__",
]
