"""Alexander-module invariants of link diagrams and lower bounds on link cobordism genus."""

from .bounds import (bound_chain_report, cobordism_exists, genus_lower_bound,
                     gordian_bound, split_rank_check, weakly_split_bound)
from .catalog import lookup
from .diagram import LinkDiagram, format_pd, linking_matrix, parse_pd
from .invariants import (AdmissibleMap, alexander_polynomial, full_report,
                         link_determinant, min_generators_q, rank_r)
from .laurent import MultiLaurent

__version__ = "0.1.0"

__all__ = [
    "AdmissibleMap",
    "LinkDiagram",
    "MultiLaurent",
    "alexander_polynomial",
    "bound_chain_report",
    "cobordism_exists",
    "format_pd",
    "full_report",
    "genus_lower_bound",
    "gordian_bound",
    "link_determinant",
    "linking_matrix",
    "lookup",
    "min_generators_q",
    "parse_pd",
    "rank_r",
    "split_rank_check",
    "weakly_split_bound",
]
