"""Specific information, redundancy and union information."""

from .specific import (
    SourceSubset,
    SpecificInfoTable,
    as_source,
    mutual_information,
    source_target_table,
    specific_information,
    specific_information_table,
)
from .redundancy import (
    INCLUSION_EXCLUSION_LIMIT,
    i_min,
    i_min_from_table,
    i_union_inclexcl,
    i_union_inclexcl_from_table,
    i_union_max,
    i_union_max_from_table,
)

__all__ = [
    'SourceSubset',
    'SpecificInfoTable',
    'as_source',
    'source_target_table',
    'specific_information',
    'specific_information_table',
    'mutual_information',
    'i_min',
    'i_union_max',
    'i_union_inclexcl',
    'i_min_from_table',
    'i_union_max_from_table',
    'i_union_inclexcl_from_table',
    'INCLUSION_EXCLUSION_LIMIT',
]
