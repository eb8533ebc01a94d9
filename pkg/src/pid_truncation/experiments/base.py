"""Base experiment class."""

from abc import ABC, abstractmethod
from typing import Callable, ClassVar, Iterable, List, Optional, TypeVar

from ..core.observability import ObservabilityBackend, get_observability
from .config import ExperimentConfig
from .parallel import resolve_workers, run_tasks
from .results import ResultTable

T = TypeVar("T")
R = TypeVar("R")


class BaseExperiment(ABC):
    """Abstract base class for experiments."""

    name: ClassVar[str] = "experiment"

    def __init__(self, config: ExperimentConfig, observability: Optional[ObservabilityBackend] = None):
        self.config = config
        self.obs = observability or get_observability()

    @abstractmethod
    def execute(self) -> ResultTable:
        """Compute the result table."""
        pass

    def map(self, func: Callable[[T], R], tasks: Iterable[T]) -> List[R]:
        """Run independent tasks with the configured worker count, in task order."""
        workers = resolve_workers(self.config.threads)
        results = run_tasks(func, tasks, workers)
        self.obs.record_metric("experiment_tasks_completed", len(results), {"experiment": self.name})
        return results

    def run(self) -> ResultTable:
        """Run the experiment with observability."""
        with self.obs.trace(f"experiment_run_{self.name}", experiment=self.name):
            self.obs.log("INFO", f"Starting experiment {self.name}", seeds=len(self.config.seeds))

            try:
                table = self.execute()
                table.validate()

                self.obs.record_metric("experiment_run_success", 1, {"experiment": self.name})
                self.obs.log("INFO", f"Experiment {self.name} finished", rows=len(table))
                return table

            except Exception as e:
                self.obs.record_metric("experiment_run_error", 1, {"experiment": self.name})
                self.obs.log("ERROR", f"Experiment {self.name} failed: {str(e)}")
                raise
