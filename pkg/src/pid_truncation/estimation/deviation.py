"""Normalized estimator deviation i_hat^(k) = Î^(k) / I^(k) - 1 over resamples."""

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from ..core.exceptions import ArgumentError, DomainError
from ..synergy import IkProfile

# Exact values at or below this are treated as zero
EXACT_ZERO_TOLERANCE = 1e-12


@dataclass(frozen=True)
class DeviationStats:
    """Per-k mean and (n-1)-denominator standard deviation of i_hat^(k)."""

    k_values: Tuple[int, ...]
    mean: Tuple[float, ...]
    stdev: Tuple[float, ...]
    count: int


@dataclass(frozen=True)
class NormalizedDeviation:
    """i_hat^(k) of one estimate, one entry per k."""

    k_values: Tuple[int, ...]
    values: Tuple[float, ...]


def _check_exact(model_exact: IkProfile) -> np.ndarray:
    exact = np.asarray(model_exact.values)
    for k, value in enumerate(exact, start=1):
        if value <= EXACT_ZERO_TOLERANCE:
            raise DomainError(f"Exact I^({k}) is {value!r}; normalized deviation undefined", value=k)
    return exact


def _deviation_row(model_exact: IkProfile, exact: np.ndarray, estimate: IkProfile) -> np.ndarray:
    if estimate.log_base is not model_exact.log_base:
        raise ArgumentError(
            f"Estimate in {estimate.log_base.value} compared with exact values in {model_exact.log_base.value}"
        )
    if estimate.k_max < model_exact.k_max:
        raise ArgumentError(f"Estimate covers k <= {estimate.k_max}, exact profile needs {model_exact.k_max}")
    return np.asarray(estimate.values[: model_exact.k_max]) / exact - 1.0


def normalized_deviation(model_exact: IkProfile, estimate: IkProfile) -> NormalizedDeviation:
    """i_hat^(k) of a single estimate against the exact profile."""
    row = _deviation_row(model_exact, _check_exact(model_exact), estimate)
    return NormalizedDeviation(tuple(range(1, model_exact.k_max + 1)), tuple(float(v) for v in row))


def normalized_deviations(model_exact: IkProfile, estimates: Sequence[IkProfile]) -> np.ndarray:
    """Matrix of i_hat^(k); one row per estimate, one column per k of the exact profile."""
    if not estimates:
        raise ArgumentError("No estimates given")
    exact = _check_exact(model_exact)
    return np.vstack([_deviation_row(model_exact, exact, estimate) for estimate in estimates])



def normalized_deviation_stats(model_exact: IkProfile, estimates: Sequence[IkProfile]) -> DeviationStats:
    """Mean and standard deviation of i_hat^(k) across resampled estimates."""
    if len(estimates) < 2:
        raise ArgumentError(f"At least two estimates are needed, got {len(estimates)}")
    deviations = normalized_deviations(model_exact, estimates)
    return DeviationStats(
        k_values=tuple(range(1, model_exact.k_max + 1)),
        mean=tuple(float(m) for m in deviations.mean(axis=0)),
        stdev=tuple(float(s) for s in deviations.std(axis=0, ddof=1)),
        count=len(estimates),
    )
