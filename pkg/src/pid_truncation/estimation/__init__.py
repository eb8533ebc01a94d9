"""Plug-in estimation, bias correction and deviation statistics."""

from .plugin import (
    BiasCorrectedEstimate,
    bias_delta,
    corrected_specific_information,
    estimate_profiles,
    i_k_estimate,
    i_k_estimate_empirical,
    i_k_estimate_profile,
    plugin_specific_information,
)
from .deviation import (
    DeviationStats,
    NormalizedDeviation,
    normalized_deviation,
    normalized_deviation_stats,
    normalized_deviations,
)
from .report import EstimateRecord, write_estimate_csv

__all__ = [
    'BiasCorrectedEstimate',
    'plugin_specific_information',
    'bias_delta',
    'corrected_specific_information',
    'i_k_estimate',
    'i_k_estimate_empirical',
    'i_k_estimate_profile',
    'estimate_profiles',
    'DeviationStats',
    'NormalizedDeviation',
    'normalized_deviation',
    'normalized_deviations',
    'normalized_deviation_stats',
    'EstimateRecord',
    'write_estimate_csv',
]
