"""Experiment harness: configurations, runners and long-format result tables."""

from .config import ExperimentConfig, ExperimentKind
from .results import RESULT_COLUMNS, ResultRow, ResultTable
from .base import BaseExperiment
from .profile import ProfileExperiment, StrongCouplingExperiment, WeakCouplingExperiment
from .sampling import SamplingExperiment
from .factory import ExperimentFactory, run_profile_strong, run_profile_weak, run_sampling

__all__ = [
    'ExperimentConfig',
    'ExperimentKind',
    'RESULT_COLUMNS',
    'ResultRow',
    'ResultTable',
    'BaseExperiment',
    'ProfileExperiment',
    'WeakCouplingExperiment',
    'StrongCouplingExperiment',
    'SamplingExperiment',
    'ExperimentFactory',
    'run_profile_weak',
    'run_profile_strong',
    'run_sampling',
]
