"""Benzels, stones-and-bones tilings, ribbon tableaux and their bijections."""
from .hexgrid import (
    BenzelDomainError, EisensteinPoint, HexCell, HexKind, HexRegion, benzel,
    benzel_size, cl_invariant, reflect, rotate120, three_coloring,
)
from .ribbons import (
    RibbonTableau, RibbonTiling, TupleYoungTableau, compress, compress_inverse,
    ribbon_tableaux, ribbon_tilings, sw, sw_inverse, tableaux_of,
)
from .tiler import count_tilings, enumerate_tilings, tiling_stats
from .transfer import SquareBox, SquareRegion, hex_to_square, square_to_hex, transfer_region
from .young import Partition, abacus_word, from_quotient, k_quotient, lambda_n, partition_of, theta

__version__ = "0.1.0"
