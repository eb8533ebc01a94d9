"""Experiment configuration."""

from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError, field_validator

from ..core.config import settings
from ..core.exceptions import ArgumentError
from ..distributions import LogBase
from ..models import MaskPolicy


class ExperimentKind(str, Enum):
    """Registered experiment ids."""

    PROFILE_WEAK = "profile_weak"
    PROFILE_STRONG = "profile_strong"
    SAMPLING = "sampling"


WEAK_EPS = (1.0, 0.5, 0.1)
STRONG_EPS = (0.1, 0.01, 2.0)

PRESETS: Dict[ExperimentKind, Dict[str, Any]] = {
    ExperimentKind.PROFILE_WEAK: {"eps": WEAK_EPS, "mask": MaskPolicy.NONE, "seeds": list(range(10))},
    ExperimentKind.PROFILE_STRONG: {"eps": STRONG_EPS, "mask": MaskPolicy.EXACTLY_ONE_TARGET, "seeds": list(range(10))},
    ExperimentKind.SAMPLING: {"eps": WEAK_EPS, "mask": MaskPolicy.NONE, "seeds": [0]},
}


class ExperimentConfig(BaseModel):
    """Parameters of one experiment run."""

    experiment: ExperimentKind
    n_bits: int = Field(8, ge=2, description="Bits M of the model")
    eps: Tuple[float, float, float] = Field(WEAK_EPS, description="Coupling strengths eps0, eps1, eps2")
    mask: MaskPolicy = MaskPolicy.NONE
    seeds: List[int] = Field(..., min_length=1, description="Coefficient seeds (sampling uses the first)")
    sample_sizes: List[int] = Field(default_factory=lambda: list(settings.sample_sizes))
    resample_count: int = Field(default_factory=lambda: settings.resample_count, ge=2)
    k_max: Optional[int] = Field(None, ge=1, description="Largest truncation order (default: all features)")
    output: Optional[Path] = None
    units: LogBase = Field(default_factory=lambda: LogBase(settings.units))
    threads: int = Field(default_factory=lambda: settings.threads, ge=0)
    correct_bias: bool = True

    @field_validator("sample_sizes")
    @classmethod
    def _increasing_sizes(cls, sizes: List[int]) -> List[int]:
        if not sizes:
            raise ValueError("sample_sizes must not be empty")
        if any(n < 1 for n in sizes):
            raise ValueError(f"sample sizes must be >= 1, got {sizes}")
        if any(b <= a for a, b in zip(sizes, sizes[1:])):
            raise ValueError(f"sample sizes must be strictly increasing, got {sizes}")
        return sizes

    @classmethod
    def for_experiment(cls, kind: ExperimentKind, **overrides: Any) -> "ExperimentConfig":
        """Preset values for ``kind`` updated with every override that is not None."""
        kind = ExperimentKind(kind)
        values: Dict[str, Any] = {"experiment": kind, **PRESETS[kind]}
        values.update({key: value for key, value in overrides.items() if value is not None})
        try:
            return cls(**values)
        except ValidationError as e:
            raise ArgumentError(f"Invalid experiment configuration: {e}") from e
