"""Normalization of Puiseux hypersurfaces with exact arithmetic.

The forward direction takes a Puiseux series xi and returns its
distinguished exponents, the saturated semigroup with its Hilbert basis, a
smoothness verdict, the minimal polynomial of xi and a binomial presentation
of the normalization. The converse direction (:func:`hj_to_puiseux`) builds a
Puiseux hypersurface from Hirzebruch-Jung lattice data.
"""

from .cyclotomic import CycloNumber, cyclotomic_polynomial
from .errors import CertificateError, NormalizationError
from .expr import format_series, parse_series, parse_tuples
from .hj import HJResult, hj_exponents, hj_to_puiseux, lipman_lattice, rescale
from .lattice import (
    FracLattice,
    Lattice,
    hnf,
    index,
    kernel_lattice,
    lattice_from_generators,
    member,
    quotient_structure,
    snf,
)
from .minpoly import (
    PolyY,
    character_group,
    conjugates,
    evaluate,
    minimal_polynomial,
)
from .puiseux import (
    MonomialOrder,
    PuiseuxSeries,
    distinguished_exponents,
    omega_compare,
    support_group,
)
from .semigroup import (
    AffineSemigroup,
    SaturatedSemigroup,
    hilbert_basis,
    is_saturated,
    is_smooth,
    m_vector,
    saturate,
    span_group,
)
from .toric import (
    ToricPresentation,
    exponent_matrix,
    kernel_check,
    toric_binomials,
    toric_presentation,
)

__version__ = "0.1.0"
