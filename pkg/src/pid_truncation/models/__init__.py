"""Synthetic XOR exponential-family models."""

from .xor import (
    MaskPolicy,
    SplitModel,
    XorModelSpec,
    build_distribution,
    default_targets,
    generate_spec,
    load_spec,
    model_distribution,
    save_spec,
    spec_from_dict,
    split_target,
)

__all__ = [
    'MaskPolicy',
    'XorModelSpec',
    'SplitModel',
    'default_targets',
    'generate_spec',
    'build_distribution',
    'split_target',
    'model_distribution',
    'spec_from_dict',
    'load_spec',
    'save_spec',
]
