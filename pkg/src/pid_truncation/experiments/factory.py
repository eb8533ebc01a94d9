"""Experiment factory."""

from typing import Dict, Optional, Type

from ..core.exceptions import ExperimentError
from ..core.observability import ObservabilityBackend, get_observability
from .base import BaseExperiment
from .config import ExperimentConfig, ExperimentKind
from .profile import StrongCouplingExperiment, WeakCouplingExperiment
from .results import ResultTable
from .sampling import SamplingExperiment


class ExperimentFactory:
    """Factory for creating experiments from their ids."""

    _experiments: Dict[str, Type[BaseExperiment]] = {
        ExperimentKind.PROFILE_WEAK.value: WeakCouplingExperiment,
        ExperimentKind.PROFILE_STRONG.value: StrongCouplingExperiment,
        ExperimentKind.SAMPLING.value: SamplingExperiment,
    }

    @classmethod
    def create(cls, config: ExperimentConfig, observability: Optional[ObservabilityBackend] = None) -> BaseExperiment:
        """
        Create the experiment named by ``config.experiment``.

        Raises:
            ExperimentError: If the experiment id is not registered
        """
        obs = observability or get_observability()
        experiment_id = getattr(config.experiment, "value", config.experiment)

        with obs.trace("factory_create_experiment", experiment=experiment_id):
            if experiment_id not in cls._experiments:
                raise ExperimentError(f"Unknown experiment: {experiment_id}")
            return cls._experiments[experiment_id](config, obs)

    @classmethod
    def register(cls, experiment_id: str, experiment_cls: Type[BaseExperiment]) -> None:
        """Register a new experiment type."""
        cls._experiments[experiment_id] = experiment_cls

    @classmethod
    def available(cls) -> list:
        return sorted(cls._experiments)


def _run(config: ExperimentConfig, kind: ExperimentKind) -> ResultTable:
    if config.experiment is not kind:
        raise ExperimentError(f"Configuration is for {config.experiment.value}, not {kind.value}")
    return ExperimentFactory.create(config).run()


def run_profile_weak(config: ExperimentConfig) -> ResultTable:
    """Weak-coupling truncation profiles, one block of rows per seed."""
    return _run(config, ExperimentKind.PROFILE_WEAK)


def run_profile_strong(config: ExperimentConfig) -> ResultTable:
    """Strong-coupling truncation profiles, one block of rows per seed."""
    return _run(config, ExperimentKind.PROFILE_STRONG)


def run_sampling(config: ExperimentConfig) -> ResultTable:
    """Estimator deviation statistics over the sample-size grid."""
    return _run(config, ExperimentKind.SAMPLING)
