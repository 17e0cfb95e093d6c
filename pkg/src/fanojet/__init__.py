"""Exact intersection-theoretic toolkit for lines on complete intersections
and the embedding order of anticanonical polarizations.

Everything is integer or rational arithmetic; there is no floating point
anywhere in the library.
"""

from .schubert import (
    CohomologyElement,
    SchubertClass,
    from_chern_poly,
    integrate,
    mul,
    plucker_degree,
    sigma,
)
from .chern import (
    ChernPolynomial,
    sym_top_chern,
    sym_top_chern_oracle,
    sym_top_chern_paper,
)
from .lines import (
    CompleteIntersection,
    LineCount,
    count_lines,
    expected_family_dimension,
    line_family_through_point,
    lines_class,
)
from .fano import (
    EmbeddingOrderReport,
    analyze,
    anticanonical_degree,
    degree_of_twist,
    h0_of_twist,
)
from .bounds import (
    BoundsVerdict,
    PolarizedInvariants,
    box_product_order,
    curve_degree_floor,
    min_degree,
    min_sections,
    nefvalue_bound,
)
from .catalog import (
    AdjunctionOutcome,
    CatalogEntry,
    CatalogVerification,
    adjunction_cases,
    catalog_as_dicts,
    entries,
    verify_all,
)

__all__ = [
    "AdjunctionOutcome",
    "BoundsVerdict",
    "CatalogEntry",
    "CatalogVerification",
    "ChernPolynomial",
    "CohomologyElement",
    "CompleteIntersection",
    "EmbeddingOrderReport",
    "LineCount",
    "PolarizedInvariants",
    "SchubertClass",
    "adjunction_cases",
    "analyze",
    "anticanonical_degree",
    "box_product_order",
    "catalog_as_dicts",
    "count_lines",
    "curve_degree_floor",
    "degree_of_twist",
    "entries",
    "expected_family_dimension",
    "from_chern_poly",
    "h0_of_twist",
    "integrate",
    "line_family_through_point",
    "lines_class",
    "min_degree",
    "min_sections",
    "mul",
    "nefvalue_bound",
    "plucker_degree",
    "sigma",
    "sym_top_chern",
    "sym_top_chern_oracle",
    "sym_top_chern_paper",
    "verify_all",
]

__version__ = "0.1.0"
