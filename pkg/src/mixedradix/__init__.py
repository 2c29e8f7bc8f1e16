"""Mixed radix numeration toolbox.

Digits, rectangles of interpolating bases, table-driven radix conversion,
Newton bases of polynomials, Yang-Baxter consistency checks, and quadrant
decorations of reals in [0, 1).
"""

from .core import (
    DigitString,
    MixedRadixBasis,
    OverflowBasisError,
    PreconditionError,
    TranspositionStep,
    UnsupportedPairError,
    apply_permutation,
    decompose,
    psi,
    psi_inverse,
    psi_ne,
    recompose,
    transpose_digits,
)
from .convert import (
    CapacityError,
    ConversionStats,
    PsiTable,
    build_table,
    column_height,
    conversion_stats,
    convert_radix,
)
from .grid import (
    BasisWord,
    RectDecoration,
    decoration_of_integer,
    fill_from_north_west,
    fill_from_south_east,
    fill_from_south_west,
    integer_of_decoration,
    read_along_path,
    render_grid,
    word_nw,
    word_se,
)
from .poly import (
    ExactPoly,
    NewtonCoeffs,
    PolyBasis,
    derivatives,
    from_newton,
    horner_eval,
    phi,
    phi_inverse,
    taylor_coeffs,
    to_newton,
    transpose_newton,
)
from .yangbaxter import (
    braid_transform_consistency,
    hypercube_consistency,
    yb_check_phi,
    yb_check_psi,
)
from .furstenberg import (
    LayerStack,
    OrbitTable,
    QuadrantWindow,
    T_map,
    expand_real,
    face_weight,
    layer_fill,
    orbit,
    quadrant,
    rudolph_array,
    rudolph_diagonal,
    shift,
    uniformity_check,
)

__version__ = "1.0.0"

__all__ = [name for name in dir() if not name.startswith("_")]
