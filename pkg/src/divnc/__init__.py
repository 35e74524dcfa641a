"""Generalized noncrossing partitions NC^(m)(W) for finite real reflection groups.

Exact enumeration, chain statistics, order-complex homology and the
Fuss-Catalan closed forms they are checked against.
"""

__version__ = "0.1.0"

from .formulas import DegreeTable, cat, cat_plus, degree_table, euler_value, verify_identities
from .groups import GroupRealization, GroupSpec, build_group, fixed_space_codim
from .ncposet import DivisiblePoset, NcTuple, TruncatedPoset, build_poset, enumerate_ncm, le, truncate
from .chains import (euler_closed_form_pipeline, euler_reduced, f_vector, min_rooted_multichain_count,
                     multichain_count, rank_selected_count)
from .homology import boundary_matrices, order_complex

__all__ = [
    "DegreeTable", "cat", "cat_plus", "degree_table", "euler_value", "verify_identities",
    "GroupRealization", "GroupSpec", "build_group", "fixed_space_codim",
    "DivisiblePoset", "NcTuple", "TruncatedPoset", "build_poset", "enumerate_ncm", "le", "truncate",
    "euler_closed_form_pipeline", "euler_reduced", "f_vector", "min_rooted_multichain_count",
    "multichain_count", "rank_selected_count",
    "boundary_matrices", "order_complex",
]
