"""Feature selection from the maximizing subsets of I^(k).

A feature is relevant when it belongs to a subset that attains the maximum
specific information for some outcome y with p(y) > 0. An optional greedy
backward pass then drops features whose removal leaves I^(k) unchanged
within a tolerance; that pass is a heuristic.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..core.config import settings
from ..core.exceptions import ArgumentError
from ..distributions import DiscreteJointDistribution, LogBase, VariableRef
from ..distributions.variables import ref_name
from ..information import SourceSubset
from .family import feature_names
from .truncation import family_table, i_k, k_marginals

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SelectionReport:
    """Outcome of I^(k)-based feature selection."""

    k: int
    target: str
    features: Tuple[str, ...]
    relevant: Tuple[str, ...]
    per_outcome_argmax: Dict[str, Tuple[SourceSubset, ...]]
    i_k_full: float
    i_k_selected: float
    pruned: Tuple[str, ...] = ()
    log_base: LogBase = field(default=LogBase.NATS)

    @property
    def irrelevant(self) -> Tuple[str, ...]:
        return tuple(f for f in self.features if f not in self.relevant)

    def to_dict(self) -> Dict:
        return {
            "k": self.k,
            "I_k": [self.i_k_full],
            "I_k_selected": self.i_k_selected,
            "units": self.log_base.value,
            "relevant": list(self.relevant),
            "pruned": list(self.pruned),
            "argmax": {y: [list(s.members) for s in subsets] for y, subsets in self.per_outcome_argmax.items()},
        }


def _greedy_prune(
    dist: DiscreteJointDistribution,
    target: VariableRef,
    relevant: List[str],
    k: int,
    reference: float,
    tolerance: float,
) -> List[str]:
    """Drop, one at a time, the feature whose removal costs least, while I^(k) stays within ``tolerance``."""
    dropped: List[str] = []
    while len(relevant) > k:
        candidates = []
        for feature in relevant:
            remaining = [f for f in relevant if f != feature]
            candidates.append((reference - i_k(dist, target, remaining, k), feature))
        loss, feature = min(candidates, key=lambda c: c[0])
        if loss > tolerance:
            break
        logger.debug(f"Pruning {feature} (I^({k}) loss {loss:.3e})")
        relevant = [f for f in relevant if f != feature]
        dropped.append(feature)
    return dropped


def select_features(
    dist: DiscreteJointDistribution,
    target: VariableRef,
    features: Sequence[VariableRef],
    k: int,
    tie_tolerance: Optional[float] = None,
    prune: bool = False,
    prune_tolerance: float = 1e-10,
) -> SelectionReport:
    """Keep the features that take part in the per-outcome maximum of I^(k)."""
    names = feature_names(features)
    tolerance = settings.tie_tolerance if tie_tolerance is None else tie_tolerance
    if tolerance < 0 or prune_tolerance < 0:
        raise ArgumentError("Tolerances must be non-negative")

    table = family_table(k_marginals(dist, target, names, k), target)
    best = table.values.max(axis=0)
    i_k_full = table.weighted(best)

    alphabet = dist.alphabet(target)
    argmax: Dict[str, Tuple[SourceSubset, ...]] = {}
    used = set()
    for column, outcome in enumerate(table.outcomes):
        rows = np.flatnonzero(table.values[:, column] >= best[column] - tolerance)
        winners = tuple(table.sources[row] for row in rows)
        argmax[alphabet.label(outcome)] = winners
        for subset in winners:
            used.update(subset.members)

    relevant = [f for f in names if f in used]
    pruned: List[str] = []
    if prune:
        pruned = _greedy_prune(dist, target, relevant, k, i_k_full, prune_tolerance)
        relevant = [f for f in relevant if f not in pruned]

    i_k_selected = i_k(dist, target, relevant, k)
    logger.info(f"Selected {len(relevant)}/{len(names)} features at k={k}: {relevant}")
    return SelectionReport(
        k=k,
        target=ref_name(target),
        features=names,
        relevant=tuple(relevant),
        per_outcome_argmax=argmax,
        i_k_full=i_k_full,
        i_k_selected=i_k_selected,
        pruned=tuple(pruned),
        log_base=dist.log_base,
    )
