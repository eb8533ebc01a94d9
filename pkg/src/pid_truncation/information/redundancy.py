"""Redundancy I_min and union information I_union.

I_union has two forms: the expected maximum of specific information (the
production path) and the inclusion-exclusion sum over I_min, which is kept
as a cross-check and refuses more than ``INCLUSION_EXCLUSION_LIMIT`` sources. The ``*_from_table``
forms evaluate sub-collections of one prebuilt ``SpecificInfoTable``.
"""

import logging
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from ..core.exceptions import ArgumentError
from ..distributions import DiscreteJointDistribution, VariableRef
from .specific import SourceLike, SpecificInfoTable, specific_information_table

logger = logging.getLogger(__name__)

INCLUSION_EXCLUSION_LIMIT = 20


def _table(dist: DiscreteJointDistribution, target: VariableRef, sources: Sequence[SourceLike]) -> SpecificInfoTable:
    if not sources:
        raise ArgumentError("At least one source is required")
    return specific_information_table(dist, target, sources)


def _selected(table: SpecificInfoTable, rows: Optional[Sequence[int]]) -> np.ndarray:
    if rows is None:
        return table.values
    if not rows:
        raise ArgumentError("At least one source is required")
    return table.values[list(rows)]


def i_min_from_table(table: SpecificInfoTable, rows: Optional[Sequence[int]] = None) -> float:
    """I_min over the table's sources, or over the sources at ``rows``."""
    return table.weighted(_selected(table, rows).min(axis=0))


def i_union_max_from_table(table: SpecificInfoTable, rows: Optional[Sequence[int]] = None) -> float:
    """I_union by the expected maximum, over all sources or those at ``rows``."""
    return table.weighted(_selected(table, rows).max(axis=0))


def i_union_inclexcl_from_table(table: SpecificInfoTable, rows: Optional[Sequence[int]] = None) -> float:
    """I_union by inclusion-exclusion, over all sources or those at ``rows``."""
    values = _selected(table, rows)
    count = values.shape[0]
    if count > INCLUSION_EXCLUSION_LIMIT:
        raise ArgumentError(
            f"Inclusion-exclusion over {count} sources needs 2^{count} terms; "
            f"limit is {INCLUSION_EXCLUSION_LIMIT}"
        )
    logger.debug(f"Inclusion-exclusion over {count} sources")

    total = 0.0
    for size in range(1, count + 1):
        sign = 1.0 if size % 2 else -1.0
        for subset in combinations(range(count), size):
            total += sign * table.weighted(values[list(subset)].min(axis=0))
    return total


def i_min(dist: DiscreteJointDistribution, target: VariableRef, sources: Sequence[SourceLike]) -> float:
    """I_min = sum_y p(y) min_i I(Y=y : A_i)."""
    return i_min_from_table(_table(dist, target, sources))


def i_union_max(dist: DiscreteJointDistribution, target: VariableRef, sources: Sequence[SourceLike]) -> float:
    """I_union = sum_y p(y) max_i I(Y=y : A_i)."""
    return i_union_max_from_table(_table(dist, target, sources))


def i_union_inclexcl(dist: DiscreteJointDistribution, target: VariableRef, sources: Sequence[SourceLike]) -> float:
    """I_union as the alternating sum of I_min over every non-empty sub-collection."""
    if len(sources) > INCLUSION_EXCLUSION_LIMIT:
        raise ArgumentError(
            f"Inclusion-exclusion over {len(sources)} sources needs 2^{len(sources)} terms; "
            f"limit is {INCLUSION_EXCLUSION_LIMIT}"
        )
    return i_union_inclexcl_from_table(_table(dist, target, sources))
