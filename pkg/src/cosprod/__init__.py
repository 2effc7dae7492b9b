"""Discrete point-mass measures, cosine-product identities for sin(x)/x,
Cantor measures, and distributions of random-sign series."""

from .cantor import (
    TernaryPoint,
    affine_phase_identity,
    cantor_cdf,
    cantor_char_complex,
    cantor_cos_product,
    cantor_measure,
    cantor_points,
)
from .errors import (
    AtomCapExceeded,
    BadBase,
    BadRange,
    BadStep,
    CosprodError,
    DepthTooLarge,
    EmptyMeasure,
    LocationOverflow,
    OutOfDomain,
)
from .measure import (
    ATOM_CAP,
    Atom,
    DiscreteMeasure,
    cdf_eval,
    char_fn_eval,
    char_fn_grid,
    coin_sum_measure,
    convolve,
    dirac,
    dump_csv,
    moments,
    shifted_coin_sum_measure,
)
from .products import (
    ProductSpec,
    basep_factor,
    basep_partial,
    basep_spectrum,
    riemann_factor,
    sinc,
    telescoping_check,
    vieta_partial,
)
from .randseries import (
    CoeffSeries,
    Histogram,
    SimConfig,
    histogram,
    partial_sum_measure,
    simulate,
    variance_of,
)
from .spectra import (
    DEFAULT_OMEGAS,
    DensityTable,
    QuadratureConfig,
    conjecture_integrals,
    density_table,
    harmonic_char,
    harmonic_density,
    midpoint_integrate,
)

__version__ = "0.1.0"
