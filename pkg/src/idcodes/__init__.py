"""Exact identifying codes of graphs and of lexicographic products G[H]."""

from .graph import (
    Graph,
    ProductVertex,
    VertexSet,
    ball,
    complete,
    cycle,
    from_edge_list,
    is_connected,
    lex_product,
    max_degree,
    path,
    r_ball,
    star,
)
from .lexico import (
    ProductPlan,
    check_slice_conditions,
    construct_product_code,
    corollary_value,
    product_identifiable,
    r_identifying_impossible,
    theorem_min_identifying,
    verify_theorem,
)
from .solver import (
    CodeReport,
    Family,
    Kind,
    closed_form,
    covers,
    full_report,
    is_identifiable,
    is_identifying_code,
    min_identifying_code,
    min_separating_code,
    min_separating_undominated_code,
    separates,
)
from .twins import TwinPartition, reduced_partition, twin_classes

__version__ = "0.1.0"
