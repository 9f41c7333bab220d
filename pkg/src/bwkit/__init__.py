"""Exact commutative-algebra toolkit for monomial ideals and simplicial
complexes: Hilbert series, dimension filtrations, layer (Bjorner-Wachs)
polynomials, reverse-lexicographic generic initial ideals, h-triangles,
and sequential Cohen-Macaulayness certificates.
"""

from .ring import (
    BWPolynomial,
    HilbertSeries,
    Monomial,
    Polynomial,
    RingSpec,
    UniPoly,
    apply_linear_change,
    bw_specialize,
    parse_polynomial,
    revlex_compare,
    revlex_key,
)
from .monomial import (
    BettiTable,
    FiltrationChain,
    MonomialIdeal,
    PrimaryDecomposition,
    betti_eliahou_kervaire,
    borel_depth,
    dimension_filtration,
    h_polynomial,
    hilbert_numerator,
    is_strongly_stable,
    krull_dimension,
    primary_decomposition,
)
from .groebner import (
    GinResult,
    GroebnerBasis,
    NotCertified,
    gin,
    initial_ideal,
    normal_form,
    reduced_groebner_basis,
)
from .simplicial import (
    FTriangle,
    HTriangle,
    HrwResult,
    LocalCohomologyTable,
    SimplicialComplex,
    alexander_dual,
    complex_of_ideal,
    f_triangle,
    face_degree,
    facet_subcomplex,
    graded_betti_hochster,
    h_triangle,
    hrw_check,
    is_cohen_macaulay,
    link,
    induced_subcomplex,
    local_cohomology_hochster,
    minimal_nonfaces,
    pure_skeleton,
    reduced_homology_ranks,
    scm_oracle,
    stanley_reisner_ideal,
    symmetric_shift,
)
from .filtration import (
    LayerDecomposition,
    NotSCM,
    ScmReport,
    bw_from_complex,
    bw_polynomial,
    extremal_from_bw,
    layer_decomposition,
    local_cohomology_scm,
    scm_check,
)

__version__ = "0.1.0"

__all__ = [
    "BWPolynomial",
    "BettiTable",
    "FTriangle",
    "FiltrationChain",
    "GinResult",
    "GroebnerBasis",
    "HTriangle",
    "HilbertSeries",
    "HrwResult",
    "LayerDecomposition",
    "LocalCohomologyTable",
    "Monomial",
    "MonomialIdeal",
    "NotCertified",
    "NotSCM",
    "Polynomial",
    "PrimaryDecomposition",
    "RingSpec",
    "ScmReport",
    "SimplicialComplex",
    "UniPoly",
    "alexander_dual",
    "apply_linear_change",
    "betti_eliahou_kervaire",
    "borel_depth",
    "bw_from_complex",
    "bw_polynomial",
    "bw_specialize",
    "complex_of_ideal",
    "dimension_filtration",
    "extremal_from_bw",
    "f_triangle",
    "face_degree",
    "facet_subcomplex",
    "gin",
    "graded_betti_hochster",
    "h_polynomial",
    "h_triangle",
    "hilbert_numerator",
    "hrw_check",
    "induced_subcomplex",
    "initial_ideal",
    "is_cohen_macaulay",
    "is_strongly_stable",
    "krull_dimension",
    "layer_decomposition",
    "link",
    "local_cohomology_hochster",
    "local_cohomology_scm",
    "minimal_nonfaces",
    "normal_form",
    "parse_polynomial",
    "primary_decomposition",
    "pure_skeleton",
    "reduced_groebner_basis",
    "reduced_homology_ranks",
    "revlex_compare",
    "revlex_key",
    "scm_check",
    "scm_oracle",
    "stanley_reisner_ideal",
    "symmetric_shift",
]
