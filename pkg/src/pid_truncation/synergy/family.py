"""Subset families C^(k): every feature subset of exactly k members."""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence, Tuple

from scipy.special import comb

from ..core.exceptions import ArgumentError
from ..distributions import VariableRef
from ..distributions.variables import ref_name
from ..information import SourceSubset

logger = logging.getLogger(__name__)

# Exhaustive enumeration is refused above these sizes
MAX_FEATURES_FOR_LARGE_K = 25
LARGE_K = 3


@dataclass(frozen=True)
class SubsetFamily:
    """C^(k) over a declared feature list, in lexicographic order of positions."""

    k: int
    features: Tuple[str, ...]
    subsets: Tuple[SourceSubset, ...]

    def __len__(self) -> int:
        return len(self.subsets)

    def __iter__(self):
        return iter(self.subsets)


def feature_names(features: Sequence[VariableRef]) -> Tuple[str, ...]:
    """Validated, duplicate-free feature names."""
    names = tuple(ref_name(f) for f in features)
    if not names:
        raise ArgumentError("At least one feature is required")
    if len(set(names)) != len(names):
        raise ArgumentError(f"Duplicate features in {list(names)}")
    return names


def enumerate_family(features: Sequence[VariableRef], k: int) -> SubsetFamily:
    """All C(N, k) subsets of ``features`` with exactly ``k`` members."""
    names = feature_names(features)
    n = len(names)
    if not 1 <= k <= n:
        raise ArgumentError(f"k must lie in [1, {n}], got {k}")
    if n > MAX_FEATURES_FOR_LARGE_K and k > LARGE_K:
        raise ArgumentError(
            f"Refusing to enumerate C({n}, {k}) = {comb(n, k, exact=True)} subsets; "
            f"use k <= {LARGE_K} when there are more than {MAX_FEATURES_FOR_LARGE_K} features"
        )
    subsets = tuple(SourceSubset(combo) for combo in combinations(names, k))
    logger.debug(f"Enumerated {len(subsets)} subsets for N={n}, k={k}")
    return SubsetFamily(k, names, subsets)
