"""Variable identities, alphabets and information units."""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple, Union

from ..core.exceptions import ArgumentError


class LogBase(str, Enum):
    """Unit in which information quantities are reported."""

    NATS = "nats"
    BITS = "bits"

    @property
    def nats_per_unit(self) -> float:
        """Divide a value in nats by this to express it in this unit."""
        return math.log(2.0) if self is LogBase.BITS else 1.0

    def from_nats(self, value):
        """Convert a value (or array) measured in nats into this unit."""
        if self is LogBase.NATS:
            return value
        return value / self.nats_per_unit


@dataclass(frozen=True)
class VariableId:
    """Position and name of a variable inside one distribution."""

    index: int
    name: str

    def __post_init__(self):
        if self.index < 0:
            raise ArgumentError(f"Variable index must be non-negative, got {self.index}")
        if not self.name:
            raise ArgumentError("Variable name must be a non-empty string")

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Alphabet:
    """Finite value set of a variable; values are addressed by index."""

    cardinality: int
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if self.cardinality < 1:
            raise ArgumentError(f"Alphabet cardinality must be >= 1, got {self.cardinality}")
        if self.labels is not None:
            labels = tuple(str(label) for label in self.labels)
            if len(labels) != self.cardinality:
                raise ArgumentError(
                    f"Alphabet has {self.cardinality} values but {len(labels)} labels"
                )
            if len(set(labels)) != len(labels):
                raise ArgumentError(f"Alphabet labels must be distinct: {labels}")
            object.__setattr__(self, "labels", labels)

    def index_of(self, value: Union[int, str]) -> int:
        """Resolve a value given as index or label to its index."""
        if isinstance(value, str) and self.labels is not None and value in self.labels:
            return self.labels.index(value)
        try:
            index = int(value)
        except (TypeError, ValueError):
            raise ArgumentError(f"Unknown alphabet value {value!r}") from None
        if not 0 <= index < self.cardinality:
            raise ArgumentError(f"Value {value!r} outside alphabet of size {self.cardinality}")
        return index

    def label(self, index: int) -> str:
        """Label of a value index (the index itself when unlabeled)."""
        if self.labels is None:
            return str(index)
        return self.labels[index]


VariableRef = Union[VariableId, str]


def ref_name(ref: VariableRef) -> str:
    """Name referred to by a VariableId or a plain name."""
    return ref.name if isinstance(ref, VariableId) else str(ref)
