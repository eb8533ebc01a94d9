"""Finite-sample behaviour of the I^(k) estimator on one pinned model."""

import logging
from typing import ClassVar, List, NamedTuple, Optional, Tuple

import numpy as np

from ..core.exceptions import DomainError
from ..core.utils import derive_seed
from ..distributions import DiscreteJointDistribution, VariableId, empirical, sample
from ..estimation import EstimateRecord, estimate_profiles, normalized_deviation_stats
from ..estimation.deviation import EXACT_ZERO_TOLERANCE
from ..models import generate_spec, model_distribution
from ..synergy import IkProfile, i_k_profile
from .base import BaseExperiment
from .results import ResultTable

logger = logging.getLogger(__name__)


class ResampleTask(NamedTuple):
    n_samples: int
    replicate: int
    seed: int


class ResampleEstimate(NamedTuple):
    task: ResampleTask
    raw: IkProfile
    corrected: IkProfile


class SamplingExperiment(BaseExperiment):
    """Mean and spread of i_hat^(k) = Î^(k)/I^(k) - 1 across resamples at every N_s.

    The first configured seed pins the model coefficients; resample r at
    size N_s draws from ``derive_seed(seed, N_s, r)``.
    """

    name: ClassVar[str] = "sampling"

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.records: List[EstimateRecord] = []
        self._model: Optional[Tuple[DiscreteJointDistribution, Tuple[VariableId, ...], VariableId]] = None

    @property
    def seed(self) -> int:
        return self.config.seeds[0]

    def tasks(self) -> List[ResampleTask]:
        return [
            ResampleTask(n, r, derive_seed(self.seed, n, r))
            for n in self.config.sample_sizes
            for r in range(self.config.resample_count)
        ]

    def exact_profile(self) -> IkProfile:
        config = self.config
        spec = generate_spec(config.n_bits, *config.eps, seed=self.seed, mask=config.mask)
        model = model_distribution(spec, config.units)
        self._model = (model.distribution, model.features, model.target)
        exact = i_k_profile(model.distribution, model.target, model.features, config.k_max)
        for k, value in enumerate(exact.values, start=1):
            if value <= EXACT_ZERO_TOLERANCE:
                raise DomainError(
                    f"Exact I^({k}) of the model pinned by seed {self.seed} is {value!r}; "
                    "re-seed the sampling experiment",
                    value=k,
                )
        return exact

    def estimate(self, task: ResampleTask) -> ResampleEstimate:
        dist, features, target = self._model
        samples = sample(dist, task.n_samples, task.seed)
        profiles = estimate_profiles(empirical(samples, dist.log_base), target, features, self.config.k_max)
        return ResampleEstimate(task, profiles["raw"], profiles["corrected"])

    def execute(self) -> ResultTable:
        exact = self.exact_profile()
        estimates: List[ResampleEstimate] = self.map(self.estimate, self.tasks())
        exact_values = np.asarray(exact.values)

        table = ResultTable(self.name)
        self.records = []
        for n in self.config.sample_sizes:
            batch = [e for e in estimates if e.task.n_samples == n]
            chosen = [e.corrected if self.config.correct_bias else e.raw for e in batch]
            stats = normalized_deviation_stats(exact, chosen)
            raw = np.array([e.raw.values for e in batch])
            corrected = np.array([e.corrected.values for e in batch])
            error_raw = np.abs(raw - exact_values).mean(axis=0)
            error_corrected = np.abs(corrected - exact_values).mean(axis=0)

            for position, k in enumerate(stats.k_values):
                table.add(self.seed, k, "mean_i_hat", stats.mean[position], n_samples=n)
                table.add(self.seed, k, "stdev_i_hat", stats.stdev[position], n_samples=n)
                table.add(self.seed, k, "mean_abs_error_raw", error_raw[position], n_samples=n)
                table.add(self.seed, k, "mean_abs_error_corrected", error_corrected[position], n_samples=n)
            logger.debug(f"N_s={n}: mean i_hat {stats.mean}")

            for estimate in batch:
                for k in stats.k_values:
                    self.records.append(
                        EstimateRecord(
                            n,
                            k,
                            estimate.raw.value(k),
                            estimate.corrected.value(k),
                            exact.value(k),
                            self.config.correct_bias,
                        )
                    )
        return table
