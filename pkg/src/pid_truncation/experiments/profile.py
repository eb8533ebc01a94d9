"""Truncation profiles over a batch of model coefficient seeds."""

import logging
import math
from typing import ClassVar, List

from ..models import generate_spec, model_distribution
from ..synergy import IkProfile, i_k_profile
from .base import BaseExperiment
from .results import ResultTable

logger = logging.getLogger(__name__)


class ProfileExperiment(BaseExperiment):
    """Exact I^(k), I^(k)/I^(N) and I^(N) - I^(k) for every seed.

    Rows per (seed, k): kinds ``I_k``, ``ratio`` and ``delta``.
    """

    name: ClassVar[str] = "profile"

    def profile_for_seed(self, seed: int) -> IkProfile:
        config = self.config
        spec = generate_spec(config.n_bits, *config.eps, seed=seed, mask=config.mask)
        model = model_distribution(spec, config.units)
        return i_k_profile(model.distribution, model.target, model.features, config.k_max)

    def execute(self) -> ResultTable:
        profiles: List[IkProfile] = self.map(self.profile_for_seed, self.config.seeds)

        table = ResultTable(self.name)
        for seed, profile in zip(self.config.seeds, profiles):
            ratios = profile.ratios
            if any(math.isnan(r) for r in ratios):
                logger.warning(f"Seed {seed}: total information is zero, ratios are undefined")
            gaps = profile.gaps or tuple(profile.total_mi - v for v in profile.values)
            for k in range(1, profile.k_max + 1):
                table.add(seed, k, "I_k", profile.values[k - 1])
                table.add(seed, k, "ratio", ratios[k - 1])
                table.add(seed, k, "delta", gaps[k - 1])
        return table


class WeakCouplingExperiment(ProfileExperiment):
    name: ClassVar[str] = "profile_weak"


class StrongCouplingExperiment(ProfileExperiment):
    name: ClassVar[str] = "profile_strong"
