"""Exact-arithmetic toolkit for weighted projective hypersurfaces.

Classifies cyclic quotient singularities by the Reid-Tai criterion, counts
weighted monomials to get plurigenera, computes canonical volumes as exact
rationals, verifies the explicit low-volume / assigned-volume families, and
searches weight tuples for small-volume canonical hypersurfaces.
"""

__version__ = "0.1.0"

from .core import (
    CyclicQuotientSingularity,
    StratumRecord,
    Weights,
    coordinate_point_types,
    gcd_list,
    singular_strata,
    smallest_residue,
    stratum_quotient_type,
    well_formed,
)
from .errors import (
    BudgetError,
    EmptySearchError,
    NotSingularError,
    NotWellFormedError,
    ParameterError,
)
from .families import (
    AggregateReport,
    Check,
    FamilyReport,
    ample_witness,
    consecutive_family,
    degree_bound_witness,
    vanishing_witness,
    verify_all,
    volume_witness,
)
from .hilbert import (
    MonomialCountTable,
    monomial_count,
    monomial_count_enum,
    plurigenera_table,
    plurigenus,
    vanishing_threshold,
    variables_present,
)
from .hypersurface import (
    PointRecord,
    SingularityReport,
    StratumEntry,
    WeightedHypersurface,
    singularity_report,
)
from .search import SearchRecord, enumerate_candidates, find_min_volume, search_records
from .singularity import (
    QuotientReport,
    SingularityClass,
    ambient_canonical,
    ambient_canonical_bruteforce,
    classify_quotient,
    has_quasi_reflection,
    parse_quotient,
    quotient_report,
    reid_tai_min,
    reid_tai_sum,
)

__all__ = [
    "__version__",
    "AggregateReport",
    "BudgetError",
    "Check",
    "CyclicQuotientSingularity",
    "EmptySearchError",
    "FamilyReport",
    "MonomialCountTable",
    "NotSingularError",
    "NotWellFormedError",
    "ParameterError",
    "PointRecord",
    "QuotientReport",
    "SearchRecord",
    "SingularityClass",
    "SingularityReport",
    "StratumEntry",
    "StratumRecord",
    "WeightedHypersurface",
    "Weights",
    "ambient_canonical",
    "ambient_canonical_bruteforce",
    "ample_witness",
    "classify_quotient",
    "consecutive_family",
    "coordinate_point_types",
    "degree_bound_witness",
    "enumerate_candidates",
    "find_min_volume",
    "gcd_list",
    "has_quasi_reflection",
    "monomial_count",
    "monomial_count_enum",
    "parse_quotient",
    "plurigenera_table",
    "plurigenus",
    "quotient_report",
    "reid_tai_min",
    "reid_tai_sum",
    "search_records",
    "singular_strata",
    "singularity_report",
    "smallest_residue",
    "stratum_quotient_type",
    "vanishing_threshold",
    "vanishing_witness",
    "variables_present",
    "verify_all",
    "volume_witness",
    "well_formed",
]
