"""Categorical sampling from dense tables and empirical tables from samples."""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..core.exceptions import ArgumentError
from ..core.utils import as_seed
from .joint import DiscreteJointDistribution, EmpiricalDistribution, Variable
from .variables import LogBase


@dataclass(frozen=True, eq=False)
class SampleSet:
    """N_s rows of alphabet indices, one column per variable."""

    variables: Tuple[Variable, ...]
    rows: np.ndarray

    def __post_init__(self):
        rows = np.array(self.rows, dtype=np.int64, copy=True)
        if rows.ndim == 1:
            rows = rows.reshape(-1, 1)
        if rows.ndim != 2 or rows.shape[1] != len(self.variables):
            raise ArgumentError(f"Rows must have {len(self.variables)} columns, got shape {rows.shape}")
        if rows.shape[0] < 1:
            raise ArgumentError("A sample set needs at least one row")
        cardinalities = np.array([alphabet.cardinality for _, alphabet in self.variables])
        if np.any(rows < 0) or np.any(rows >= cardinalities):
            bad = np.argwhere((rows < 0) | (rows >= cardinalities))[0]
            raise ArgumentError(
                f"Row {bad[0]} has value {rows[tuple(bad)]} outside the alphabet of "
                f"{self.variables[bad[1]][0].name}"
            )
        rows.setflags(write=False)
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "rows", rows)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(vid.name for vid, _ in self.variables)

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(alphabet.cardinality for _, alphabet in self.variables)

    def __len__(self) -> int:
        return int(self.rows.shape[0])


def sample(dist: DiscreteJointDistribution, n: int, seed: int) -> SampleSet:
    """Draw ``n`` i.i.d. rows from ``dist``; identical (dist, n, seed) give identical rows."""
    if n < 1:
        raise ArgumentError(f"Sample size must be >= 1, got {n}")
    rng = np.random.default_rng(as_seed(seed))
    cumulative = np.cumsum(dist.probs)
    cells = np.searchsorted(cumulative, rng.random(n) * cumulative[-1], side="right")
    # Guard against the last cumulative entry rounding below the draw
    cells = np.minimum(cells, dist.probs.size - 1)
    rows = np.stack(np.unravel_index(cells, dist.shape), axis=1)
    return SampleSet(dist.variables, rows)


def empirical(samples: SampleSet, log_base: LogBase = LogBase.NATS) -> EmpiricalDistribution:
    """Relative frequencies count/N_s over the full declared alphabet."""
    n = len(samples)
    flat = np.ravel_multi_index(tuple(samples.rows.T), samples.shape)
    counts = np.bincount(flat, minlength=int(np.prod(samples.shape)))
    dist = DiscreteJointDistribution(samples.variables, counts / n, log_base)
    return EmpiricalDistribution(dist, n)
