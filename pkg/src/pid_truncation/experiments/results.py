"""Long-format result tables: one value per row."""

from collections import Counter
from pathlib import Path
from typing import Dict, Iterable, List, NamedTuple, Optional, TextIO, Union

from ..core.exceptions import ExperimentError
from ..core.utils import csv_header_line, ensure_directory, format_value

RESULT_COLUMNS = ("experiment", "seed", "k", "N_s", "kind", "value")


class ResultRow(NamedTuple):
    experiment: str
    seed: int
    k: int
    n_samples: Optional[int]
    kind: str
    value: float


class ResultTable:
    """Rows of (experiment, seed, k, N_s, kind, value) in insertion order."""

    def __init__(self, experiment: str, rows: Optional[Iterable[ResultRow]] = None):
        self.experiment = experiment
        self.rows: List[ResultRow] = list(rows or [])

    def add(self, seed: int, k: int, kind: str, value: float, n_samples: Optional[int] = None) -> None:
        self.rows.append(ResultRow(self.experiment, int(seed), int(k), n_samples, kind, float(value)))

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def kinds(self) -> List[str]:
        return sorted({row.kind for row in self.rows})

    def validate(self) -> None:
        """Every (seed, k, N_s) key appears exactly once per kind, and the same keys for every kind."""
        counts = Counter((row.kind, row.seed, row.k, row.n_samples) for row in self.rows)
        duplicates = [key for key, count in counts.items() if count > 1]
        if duplicates:
            raise ExperimentError(f"Duplicate result rows: {duplicates[:3]}")
        keys_by_kind: Dict[str, set] = {}
        for kind, seed, k, n in counts:
            keys_by_kind.setdefault(kind, set()).add((seed, k, n))
        if len({frozenset(keys) for keys in keys_by_kind.values()}) > 1:
            raise ExperimentError("Result kinds cover different (seed, k, N_s) combinations")

    def select(self, kind: str, seed: Optional[int] = None, n_samples: Optional[int] = None) -> Dict[int, float]:
        """Values of one kind keyed by k, optionally restricted to a seed and a sample size."""
        return {
            row.k: row.value
            for row in self.rows
            if row.kind == kind
            and (seed is None or row.seed == seed)
            and (n_samples is None or row.n_samples == n_samples)
        }

    def seeds(self) -> List[int]:
        return sorted({row.seed for row in self.rows})

    def sample_sizes(self) -> List[int]:
        return sorted({row.n_samples for row in self.rows if row.n_samples is not None})

    def write_csv(self, stream: TextIO) -> None:
        stream.write(csv_header_line())
        stream.write(",".join(RESULT_COLUMNS) + "\n")
        for row in self.rows:
            stream.write(",".join(format_value(v) for v in row) + "\n")

    def save(self, path: Union[str, Path]) -> None:
        path = Path(path)
        if path.parent != Path("."):
            ensure_directory(path.parent)
        with open(path, "w", encoding="utf-8", newline="") as f:
            self.write_csv(f)
