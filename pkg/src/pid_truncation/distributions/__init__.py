"""Finite discrete joint distributions, sampling and empirical tables."""

from .variables import Alphabet, LogBase, VariableId, VariableRef
from .joint import (
    DiscreteJointDistribution,
    EmpiricalDistribution,
    combine,
    condition,
    make_variables,
    marginalize,
    rename,
    total_variation,
    with_log_base,
)
from .sampling import SampleSet, empirical, sample
from .io import load_distribution, load_samples, save_distribution, save_samples

__all__ = [
    'Alphabet',
    'LogBase',
    'VariableId',
    'VariableRef',
    'DiscreteJointDistribution',
    'EmpiricalDistribution',
    'SampleSet',
    'make_variables',
    'marginalize',
    'condition',
    'combine',
    'rename',
    'with_log_base',
    'total_variation',
    'sample',
    'empirical',
    'load_distribution',
    'save_distribution',
    'load_samples',
    'save_samples',
]
