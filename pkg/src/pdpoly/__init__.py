"""Exact power domination, zero forcing, and domination polynomials.

The package computes the counting polynomial of power dominating sets of a
graph exactly, together with its zero forcing and domination siblings,
closed forms and decomposition formulas, the quadratic threshold-graph
algorithm, fort machinery, root analysis, and catalog-level audits.
"""

from .errors import (
    ArityError,
    DomainError,
    FamilyDomainError,
    FormatError,
    HypothesisNotMet,
    IncompleteCatalog,
    IngestError,
    InvalidVertex,
    NotConnectedForm,
    NotDivisible,
    NumericFailure,
    PdpolyError,
    SelfLoop,
    TooLarge,
    TooShort,
)
from .graphs import (
    MAX_N,
    Graph,
    StructureReport,
    complete,
    complete_bipartite,
    connected_components,
    corona,
    cycle,
    disjoint_union,
    empty,
    family,
    format_edge_list_text,
    from_edge_list,
    from_graph6,
    identify,
    induced_subgraph,
    is_connected,
    join,
    mask_of,
    parse_edge_list_text,
    path,
    star,
    structure_report,
    to_graph6,
    vertices_of,
    wheel,
)
from .polynomial import IntPolynomial, binomial_minus_one, div_exact
from .propagation import (
    PropagationTrace,
    check_ip_bound,
    closed_neighborhood,
    domination_number,
    enumerate_forts,
    forcing_closure,
    fort_neighborhood_family,
    gamma_p,
    is_dominating,
    is_fort,
    is_pds_via_forts,
    is_power_dominating,
    is_zero_forcing,
    power_domination_trace,
    zero_forcing_number,
)
from .counting import (
    dom_polynomial,
    pd_polynomial,
    pd_set_count,
    pd_tail_coefficients,
    zf_polynomial,
)
from .closed_forms import (
    disjoint_union_poly,
    dom_equals_pd_condition,
    dominating_vertex_poly,
    formula_family,
    identification_poly,
    join_poly,
    zf_equals_pd_condition,
)
from .threshold import (
    BlockString,
    is_threshold_pds,
    normalize,
    threshold_graph,
    threshold_pd_polynomial,
)
from .roots import (
    FDecomposition,
    RootReport,
    analyze_graph,
    classify_by_distinct_roots,
    find_roots,
    integer_roots,
    is_k33,
    recognize_F,
    recognize_F_bruteforce,
    rouche_bound_graph,
    rouche_bound_universal,
)
from .catalog import (
    CatalogEntry,
    IngestResult,
    generate_all_labeled,
    group_by_polynomial,
    ingest,
    k1_k2_uniqueness_check,
    labeled_property_suite,
    nonuniqueness_families,
    unimodality_audit,
    uniqueness_report,
)

__version__ = "0.1.0"
