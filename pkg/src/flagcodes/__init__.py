"""Flag codes over finite fields.

Exact GF(q) linear algebra, constant dimension and flag codes, the
structural characterization of quasi-optimum (D - 2) and D - 4 flag codes
checked against brute-force distance oracles, and the spread-based
constructions that realize them.
"""

from .cdc import (
    CodeError,
    ConstantDimensionCode,
    EnumerationCapExceeded,
    cdc_min_distance,
    enumerate_grassmannian,
    gaussian_binomial,
    is_max_distance,
    is_partial_spread,
    max_subspace_distance,
    partial_spread_bound,
    sunflower_center,
)
from .characterization import (
    BoundDescriptor,
    Certificate,
    certify_qodfc,
    check_dminus4,
    check_qodfc_disjoint,
    check_qodfc_nondisjoint,
    dminus4_oracle,
    nonmax_propagation_check,
    qodfc_cardinality_bound,
    qodfc_oracle,
)
from .constructions import (
    ConstructionError,
    SpreadScaffold,
    build_c_ell,
    build_flag_variety_line_hyperplane,
    build_max_cdc_high,
    build_qodfc,
    build_qodfc_hyperplane_type,
    build_spread_scaffold,
    build_sunflower,
    truncated_partial_spread,
)
from .field import FieldElement, FieldError, FieldSpec, enumerate_field, field_arith, find_irreducible, make_field
from .flags import (
    Flag,
    FlagCode,
    FlagError,
    TypeVector,
    disjointness_report,
    distinguished_indices,
    distinguished_type,
    dual_flag_code,
    enumerate_flag_variety,
    flag_distance,
    flagcode_min_distance,
    lr_indices,
    max_flag_distance,
    projected_flag_code,
    projected_subspace_code,
)
from .linalg import MatrixGF, Subspace, intersect, orthogonal_complement, rref, subspace_distance, subspace_from_rows

__version__ = "0.1.0"
