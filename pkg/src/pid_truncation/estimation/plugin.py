"""Plug-in estimates of specific information and I^(k) with bias correction.

The correction for one outcome y and one source C with values c_v is

    p(y) * delta(y, C) =   sum_v (1 - p(y, c_v)) / (2 N)
                         + sum_v p(y, c_v) (1 - p(y)) / (2 N p(y))
                         + sum_v p(y, c_v) (1 - p(c_v)) / (2 N p(c_v))

with empirical probabilities, N the sample count, and the sums running over
the full declared alphabet of C. Terms with p(c_v) = 0 are 0. The value is
computed in nats and reported in the table's unit.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple, Union

import numpy as np

from ..core.exceptions import ArgumentError, DomainError
from ..distributions import EmpiricalDistribution, LogBase, SampleSet, VariableRef, empirical
from ..distributions.variables import ref_name
from ..information import SpecificInfoTable, source_target_table, specific_information
from ..information.specific import SourceLike
from ..synergy import IkProfile, k_marginals
from ..synergy.family import feature_names

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BiasCorrectedEstimate:
    """Plug-in value, its bias term and the corrected value."""

    raw: float
    delta: float
    corrected: float
    sample_count: float


def bias_delta_nats(joint: np.ndarray, sample_count: float) -> np.ndarray:
    """delta(y, C) in nats for every outcome of a (|C|, |Y|) empirical table.

    NaN where p(y) = 0; zeros when ``sample_count`` is infinite.
    """
    p_y = joint.sum(axis=0)
    p_c = joint.sum(axis=1)
    observed = p_y > 0.0
    delta = np.full(p_y.shape, np.nan)
    if math.isinf(sample_count):
        delta[observed] = 0.0
        return delta

    two_n = 2.0 * sample_count
    p_yc = joint[:, observed]
    p_obs = p_y[observed]

    first = ((1.0 - p_yc) / two_n).sum(axis=0)
    second = (p_yc * (1.0 - p_obs) / (two_n * p_obs)).sum(axis=0)
    ratio = np.divide(1.0 - p_c, two_n * p_c, out=np.zeros_like(p_c), where=p_c > 0.0)
    third = (p_yc * ratio[:, None]).sum(axis=0)

    delta[observed] = (first + second + third) / p_obs
    return delta


def _outcome(emp: EmpiricalDistribution, target: VariableRef, y_value: Union[int, str]) -> int:
    return emp.distribution.alphabet(target).index_of(y_value)


def plugin_specific_information(
    emp: EmpiricalDistribution,
    target: VariableRef,
    y_value: Union[int, str],
    source: SourceLike,
) -> float:
    """Specific information evaluated on the empirical table."""
    return specific_information(emp.distribution, target, y_value, source)


def bias_delta(
    emp: EmpiricalDistribution,
    target: VariableRef,
    y_value: Union[int, str],
    source: SourceLike,
) -> float:
    """Leading-order bias delta(y, C) of the plug-in specific information."""
    y = _outcome(emp, target, y_value)
    delta = bias_delta_nats(source_target_table(emp.distribution, source, target), emp.sample_count)
    if np.isnan(delta[y]):
        raise DomainError(f"Empirical p({ref_name(target)}={y_value!r}) is zero; bias undefined", value=y_value)
    return float(emp.distribution.log_base.from_nats(delta[y]))


def corrected_specific_information(
    emp: EmpiricalDistribution,
    target: VariableRef,
    y_value: Union[int, str],
    source: SourceLike,
) -> BiasCorrectedEstimate:
    """Plug-in specific information together with its bias-corrected value."""
    raw = plugin_specific_information(emp, target, y_value, source)
    delta = bias_delta(emp, target, y_value, source)
    return BiasCorrectedEstimate(raw=raw, delta=delta, corrected=raw - delta, sample_count=emp.sample_count)


def _order_estimates(
    emp: EmpiricalDistribution,
    target: VariableRef,
    features: Sequence[VariableRef],
    k: int,
) -> Tuple[float, float]:
    """(raw, corrected) estimates of I^(k) from one empirical table."""
    marginals = k_marginals(emp.distribution, target, features, k)
    sources = list(marginals)
    tables = [source_target_table(marginals[s], s, target) for s in sources]
    log_base = emp.distribution.log_base
    table = SpecificInfoTable.from_joint_tables(sources, tables, log_base)

    observed = list(table.outcomes)
    deltas = np.vstack([bias_delta_nats(t, emp.sample_count)[observed] for t in tables])
    corrected = table.values - log_base.from_nats(deltas)
    raw_value = table.weighted(table.values.max(axis=0))
    corrected_value = table.weighted(corrected.max(axis=0))
    return raw_value, corrected_value


def i_k_estimate_empirical(
    emp: EmpiricalDistribution,
    target: VariableRef,
    features: Sequence[VariableRef],
    k: int,
    correct_bias: bool = True,
) -> float:
    """Estimated I^(k) from an empirical table."""
    raw, corrected = _order_estimates(emp, target, features, k)
    return corrected if correct_bias else raw


def i_k_estimate(
    samples: SampleSet,
    target: VariableRef,
    features: Sequence[VariableRef],
    k: int,
    correct_bias: bool = True,
    log_base: LogBase = LogBase.NATS,
) -> float:
    """Estimated I^(k) = sum_y p(y) max_C [I(Y=y:C) - delta(y, C)] from samples."""
    return i_k_estimate_empirical(empirical(samples, log_base), target, features, k, correct_bias)


def estimate_profiles(
    emp: EmpiricalDistribution,
    target: VariableRef,
    features: Sequence[VariableRef],
    k_max: Optional[int] = None,
) -> Dict[str, IkProfile]:
    """Raw and corrected estimated profiles Î^(1..k_max), keyed ``"raw"`` / ``"corrected"``.

    ``total_mi`` of an estimated profile is its own estimate at k = N.
    """
    names = feature_names(features)
    n = len(names)
    k_max = n if k_max is None else k_max
    if not 1 <= k_max <= n:
        raise ArgumentError(f"k_max must lie in [1, {n}], got {k_max}")
    logger.debug(f"Estimating I^(1..{k_max}) from N_s={emp.sample_count}")
    pairs = [_order_estimates(emp, target, names, k) for k in range(1, k_max + 1)]
    totals = pairs[-1] if k_max == n else _order_estimates(emp, target, names, n)

    profiles = {}
    for position, kind in enumerate(("raw", "corrected")):
        values = tuple(pair[position] for pair in pairs)
        gaps = tuple(values[-1] - v for v in values) if k_max == n else ()
        profiles[kind] = IkProfile(names, ref_name(target), values, gaps, totals[position], emp.distribution.log_base)
    return profiles


def i_k_estimate_profile(
    samples: SampleSet,
    target: VariableRef,
    features: Sequence[VariableRef],
    k_max: Optional[int] = None,
    correct_bias: bool = True,
    log_base: LogBase = LogBase.NATS,
) -> IkProfile:
    """Estimated profile Î^(1..k_max) from samples."""
    profiles = estimate_profiles(empirical(samples, log_base), target, features, k_max)
    return profiles["corrected" if correct_bias else "raw"]
