"""Subset families, truncated information I^(k) and feature selection."""

from .family import SubsetFamily, enumerate_family
from .truncation import IkProfile, family_table, i_k, i_k_from_marginals, i_k_profile, k_marginals
from .selection import SelectionReport, select_features

__all__ = [
    'SubsetFamily',
    'enumerate_family',
    'IkProfile',
    'k_marginals',
    'family_table',
    'i_k',
    'i_k_from_marginals',
    'i_k_profile',
    'SelectionReport',
    'select_features',
]
