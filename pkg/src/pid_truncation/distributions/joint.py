"""Dense joint distributions over named finite-alphabet variables.

Probabilities live in one flat vector in row-major mixed-radix order (the last
variable varies fastest), so ``probs.reshape(cardinalities)`` is the table.
Instances are immutable; every operation returns a new distribution.
"""

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from ..core.exceptions import ArgumentError, DomainError
from .variables import Alphabet, LogBase, VariableId, VariableRef, ref_name

NORMALIZATION_TOLERANCE = 1e-12

Variable = Tuple[VariableId, Alphabet]


def make_variables(
    names: Sequence[str],
    cardinalities: Sequence[int],
    labels: Optional[Sequence[Optional[Sequence[str]]]] = None,
) -> Tuple[Variable, ...]:
    """Build contiguous (VariableId, Alphabet) pairs from names and sizes."""
    if len(names) != len(cardinalities):
        raise ArgumentError(f"{len(names)} names given for {len(cardinalities)} cardinalities")
    labels = labels or [None] * len(names)
    return tuple(
        (VariableId(i, str(name)), Alphabet(int(card), tuple(lab) if lab is not None else None))
        for i, (name, card, lab) in enumerate(zip(names, cardinalities, labels))
    )


def _reindex(variables: Iterable[Variable]) -> Tuple[Variable, ...]:
    return tuple((VariableId(i, vid.name), alphabet) for i, (vid, alphabet) in enumerate(variables))


def _readonly(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=np.float64, copy=True).ravel()
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class DiscreteJointDistribution:
    """Probability table p(v_1, .., v_m) over finite alphabets."""

    variables: Tuple[Variable, ...]
    probs: np.ndarray
    log_base: LogBase = LogBase.NATS

    def __post_init__(self):
        variables = tuple((vid, alphabet) for vid, alphabet in self.variables)
        if not variables:
            raise ArgumentError("A distribution needs at least one variable")
        names = [vid.name for vid, _ in variables]
        if len(set(names)) != len(names):
            raise ArgumentError(f"Variable names must be unique: {names}")
        if [vid.index for vid, _ in variables] != list(range(len(variables))):
            raise ArgumentError("Variable indices must be contiguous from 0 in table order")

        probs = _readonly(self.probs)
        expected = math.prod(alphabet.cardinality for _, alphabet in variables)
        if probs.size != expected:
            raise ArgumentError(f"Table has {probs.size} entries, expected {expected}")
        if not np.all(np.isfinite(probs)) or np.any(probs < 0.0):
            raise ArgumentError("Probabilities must be finite and non-negative")
        total = float(probs.sum())
        if abs(total - 1.0) > NORMALIZATION_TOLERANCE:
            raise ArgumentError(f"Probabilities sum to {total!r}, not 1")

        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "probs", probs)
        object.__setattr__(self, "log_base", LogBase(self.log_base))

    # construction

    @classmethod
    def from_table(
        cls,
        names: Sequence[str],
        table,
        log_base: LogBase = LogBase.NATS,
        labels: Optional[Sequence[Optional[Sequence[str]]]] = None,
    ) -> "DiscreteJointDistribution":
        """Wrap an already normalized array whose axes follow ``names``."""
        table = np.asarray(table, dtype=np.float64)
        if table.ndim != len(names):
            raise ArgumentError(f"Table has {table.ndim} axes for {len(names)} names")
        return cls(make_variables(names, table.shape, labels), table, log_base)

    @classmethod
    def from_weights(
        cls,
        variables: Sequence[Variable],
        weights,
        log_base: LogBase = LogBase.NATS,
    ) -> "DiscreteJointDistribution":
        """Normalize non-negative weights into a distribution."""
        weights = np.asarray(weights, dtype=np.float64).ravel()
        total = weights.sum()
        if not np.isfinite(total) or total <= 0.0:
            raise ArgumentError("Weights must have a positive finite sum")
        return cls(tuple(variables), weights / total, log_base)

    # introspection

    @property
    def ids(self) -> Tuple[VariableId, ...]:
        return tuple(vid for vid, _ in self.variables)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(vid.name for vid, _ in self.variables)

    @property
    def alphabets(self) -> Tuple[Alphabet, ...]:
        return tuple(alphabet for _, alphabet in self.variables)

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(alphabet.cardinality for _, alphabet in self.variables)

    @property
    def table(self) -> np.ndarray:
        """Read-only view of the probabilities with one axis per variable."""
        return self.probs.reshape(self.shape)

    def axis(self, ref: VariableRef) -> int:
        """Table axis of a variable referred to by id or name."""
        name = ref_name(ref)
        for vid, _ in self.variables:
            if vid.name == name:
                return vid.index
        raise ArgumentError(f"Unknown variable {name!r}; have {list(self.names)}")

    def variable(self, ref: VariableRef) -> VariableId:
        return self.variables[self.axis(ref)][0]

    def alphabet(self, ref: VariableRef) -> Alphabet:
        return self.variables[self.axis(ref)][1]

    def __repr__(self) -> str:
        spec = ", ".join(f"{vid.name}:{alphabet.cardinality}" for vid, alphabet in self.variables)
        return f"DiscreteJointDistribution({spec}; {self.log_base.value})"


def marginalize(dist: DiscreteJointDistribution, keep: Iterable[VariableRef]) -> DiscreteJointDistribution:
    """Sum out every variable not in ``keep``; kept variables retain table order."""
    keep_names = {ref_name(ref) for ref in keep}
    if not keep_names:
        raise ArgumentError("marginalize needs at least one variable to keep")
    kept_axes = sorted(dist.axis(name) for name in keep_names)
    if len(kept_axes) == len(dist.variables):
        return dist
    dropped = tuple(axis for axis in range(len(dist.variables)) if axis not in kept_axes)
    table = dist.table.sum(axis=dropped)
    variables = _reindex(dist.variables[axis] for axis in kept_axes)
    return DiscreteJointDistribution(variables, table, dist.log_base)


def condition(dist: DiscreteJointDistribution, given: VariableRef, value: Union[int, str]) -> DiscreteJointDistribution:
    """Distribution of the remaining variables given ``given = value``."""
    axis = dist.axis(given)
    if len(dist.variables) == 1:
        raise ArgumentError("Cannot condition a single-variable distribution on itself")
    index = dist.variables[axis][1].index_of(value)
    sliced = np.take(dist.table, index, axis=axis)
    mass = float(sliced.sum())
    if mass <= 0.0:
        raise DomainError(f"p({ref_name(given)}={value!r}) is zero; conditional undefined", value=value)
    variables = _reindex(v for i, v in enumerate(dist.variables) if i != axis)
    return DiscreteJointDistribution(variables, sliced / mass, dist.log_base)


def combine(dist: DiscreteJointDistribution, members: Sequence[VariableRef], name: str) -> DiscreteJointDistribution:
    """Merge ``members`` into one composite variable placed last.

    The composite value index is the mixed-radix index of the member values
    with the first member most significant.
    """
    if not members:
        raise ArgumentError("combine needs at least one member")
    member_axes = [dist.axis(ref) for ref in members]
    if len(set(member_axes)) != len(member_axes):
        raise ArgumentError("combine members must be distinct")
    other_axes = [axis for axis in range(len(dist.variables)) if axis not in member_axes]
    if name in {dist.names[axis] for axis in other_axes}:
        raise ArgumentError(f"Composite name {name!r} clashes with a remaining variable")

    member_alphabets = [dist.variables[axis][1] for axis in member_axes]
    joiner = "" if all(a.cardinality <= 10 and a.labels is None for a in member_alphabets) else ","
    labels = [
        joiner.join(alphabet.label(i) for alphabet, i in zip(member_alphabets, combo))
        for combo in np.ndindex(*(a.cardinality for a in member_alphabets))
    ]
    composite = Alphabet(len(labels), tuple(labels))

    table = dist.table.transpose(other_axes + member_axes)
    table = table.reshape([dist.shape[axis] for axis in other_axes] + [composite.cardinality])
    variables = _reindex([dist.variables[axis] for axis in other_axes] + [(VariableId(0, name), composite)])
    return DiscreteJointDistribution(variables, table, dist.log_base)


def rename(dist: DiscreteJointDistribution, mapping: Mapping[str, str]) -> DiscreteJointDistribution:
    """Relabel variable names; unmapped variables keep theirs."""
    unknown = set(mapping) - set(dist.names)
    if unknown:
        raise ArgumentError(f"Cannot rename unknown variables {sorted(unknown)}")
    variables = tuple((VariableId(vid.index, mapping.get(vid.name, vid.name)), alphabet) for vid, alphabet in dist.variables)
    return DiscreteJointDistribution(variables, dist.probs, dist.log_base)


def with_log_base(dist: DiscreteJointDistribution, log_base: Union[LogBase, str]) -> DiscreteJointDistribution:
    """Same table reported in another unit."""
    log_base = LogBase(log_base)
    if log_base is dist.log_base:
        return dist
    return DiscreteJointDistribution(dist.variables, dist.probs, log_base)


def total_variation(p: DiscreteJointDistribution, q: DiscreteJointDistribution) -> float:
    """Half the L1 distance between two tables over the same variables."""
    if p.shape != q.shape:
        raise ArgumentError(f"Shapes differ: {p.shape} vs {q.shape}")
    return 0.5 * float(np.abs(p.probs - q.probs).sum())


@dataclass(frozen=True, eq=False)
class EmpiricalDistribution:
    """Relative frequencies of a sample set together with its size N_s.

    ``sample_count`` may be ``math.inf``: the table is then taken as exact and
    bias terms vanish.
    """

    distribution: DiscreteJointDistribution
    sample_count: float = field(default=math.inf)

    def __post_init__(self):
        n = self.sample_count
        if not (n == math.inf or (float(n).is_integer() and n >= 1)):
            raise ArgumentError(f"Sample count must be a positive integer or inf, got {n!r}")
        if math.isfinite(n):
            scaled = self.distribution.probs * n
            if np.max(np.abs(scaled - np.round(scaled))) / n > NORMALIZATION_TOLERANCE:
                raise ArgumentError(f"Probabilities are not multiples of 1/{int(n)}")

    @classmethod
    def from_distribution(cls, dist: DiscreteJointDistribution) -> "EmpiricalDistribution":
        """Treat an exact table as an infinitely large sample."""
        return cls(dist, math.inf)

    @property
    def is_exact(self) -> bool:
        return math.isinf(self.sample_count)
