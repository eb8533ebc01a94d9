"""Truncated multivariate information I^(k) and its profile over k."""

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..core.exceptions import ArgumentError
from ..distributions import DiscreteJointDistribution, LogBase, VariableRef, marginalize
from ..distributions.variables import ref_name
from ..information import SourceSubset, SpecificInfoTable, mutual_information, source_target_table
from .family import enumerate_family, feature_names

logger = logging.getLogger(__name__)

# Totals at or below this count as no information
ZERO_INFORMATION = 1e-12


@dataclass(frozen=True)
class IkProfile:
    """I^(1)..I^(k_max), the gaps I^(N) - I^(k) and the total MI.

    ``gaps`` is filled only when ``k_max`` equals the number of features;
    ``gaps[k-1]`` belongs to order k and the last entry is 0.
    """

    features: Tuple[str, ...]
    target: str
    values: Tuple[float, ...]
    gaps: Tuple[float, ...]
    total_mi: float
    log_base: LogBase = LogBase.NATS

    @property
    def k_max(self) -> int:
        return len(self.values)

    @property
    def is_complete(self) -> bool:
        return self.k_max == len(self.features)

    def value(self, k: int) -> float:
        """I^(k), 1-based."""
        if not 1 <= k <= self.k_max:
            raise ArgumentError(f"Profile holds k in [1, {self.k_max}], got {k}")
        return self.values[k - 1]

    @property
    def ratios(self) -> Tuple[float, ...]:
        """I^(k) / I^(N) (I^(N) taken as the total MI when k_max < N); NaN when that is zero within ZERO_INFORMATION."""
        total = self.values[-1] if self.is_complete else self.total_mi
        if not total > ZERO_INFORMATION:
            return tuple(math.nan for _ in self.values)
        return tuple(v / total for v in self.values)

    def to_dict(self) -> Dict:
        return {
            "k": self.k_max,
            "I_k": list(self.values),
            "delta": list(self.gaps),
            "units": self.log_base.value,
            "total_mi": self.total_mi,
            "features": list(self.features),
            "target": self.target,
        }


def k_marginals(
    dist: DiscreteJointDistribution,
    target: VariableRef,
    features: Sequence[VariableRef],
    k: int,
) -> Dict[SourceSubset, DiscreteJointDistribution]:
    """The (k+1)-argument marginals p(y, x_i1..x_ik) for every subset in C^(k)."""
    target_name = ref_name(target)
    family = enumerate_family(features, k)
    if target_name in family.features:
        raise ArgumentError(f"Target {target_name!r} is listed among the features")
    return {subset: marginalize(dist, subset.members + (target_name,)) for subset in family}


def family_table(marginals: Mapping[SourceSubset, DiscreteJointDistribution], target: VariableRef) -> SpecificInfoTable:
    """Specific-information table of a subset family, read from its marginals only."""
    if not marginals:
        raise ArgumentError("No marginals given")
    bases = {m.log_base for m in marginals.values()}
    if len(bases) != 1:
        raise ArgumentError(f"Marginals mix units {sorted(b.value for b in bases)}")
    sources = list(marginals)
    tables = [source_target_table(marginals[s], s, target) for s in sources]
    return SpecificInfoTable.from_joint_tables(sources, tables, bases.pop())


def i_k_from_marginals(marginals: Mapping[SourceSubset, DiscreteJointDistribution], target: VariableRef) -> float:
    """I^(k) = sum_y p(y) max over the family of I(Y=y : C)."""
    table = family_table(marginals, target)
    return table.weighted(table.values.max(axis=0))


def i_k(dist: DiscreteJointDistribution, target: VariableRef, features: Sequence[VariableRef], k: int) -> float:
    """I^(k): union information of the family C^(k) about ``target``."""
    return i_k_from_marginals(k_marginals(dist, target, features, k), target)


def i_k_profile(
    dist: DiscreteJointDistribution,
    target: VariableRef,
    features: Sequence[VariableRef],
    k_max: Optional[int] = None,
) -> IkProfile:
    """I^(k) for k = 1..k_max together with the total MI and, at k_max = N, the gaps."""
    names = feature_names(features)
    n = len(names)
    k_max = n if k_max is None else k_max
    if not 1 <= k_max <= n:
        raise ArgumentError(f"k_max must lie in [1, {n}], got {k_max}")

    values: List[float] = [i_k(dist, target, names, k) for k in range(1, k_max + 1)]
    total = mutual_information(dist, names, target)
    gaps: Tuple[float, ...] = ()
    if k_max == n:
        gaps = tuple(values[-1] - v for v in values)
        if abs(values[-1] - total) > 1e-10:
            logger.warning(f"I^({n}) = {values[-1]!r} differs from MI = {total!r}")
    if np.any(np.diff(values) < -1e-12):
        logger.warning(f"Profile is not non-decreasing: {values}")

    return IkProfile(names, ref_name(target), tuple(values), gaps, total, dist.log_base)
