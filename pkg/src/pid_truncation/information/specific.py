"""Specific information I(Y=y:A) and plain mutual information.

All quantities are evaluated in nats from source/target tables p(a, y) and
converted to the distribution's unit on return.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple, Union

import numpy as np
from scipy.special import rel_entr

from ..core.exceptions import ArgumentError, DomainError
from ..distributions import DiscreteJointDistribution, LogBase, VariableRef, marginalize
from ..distributions.variables import ref_name


@dataclass(frozen=True)
class SourceSubset:
    """Non-empty set of feature variables acting jointly as one source.

    Members are kept by name in the order given; numeric results never depend
    on that order.
    """

    members: Tuple[str, ...]

    def __post_init__(self):
        members = tuple(ref_name(m) for m in self.members)
        if not members:
            raise ArgumentError("A source needs at least one member")
        if len(set(members)) != len(members):
            raise ArgumentError(f"Duplicate members in source {members}")
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, *refs: VariableRef) -> "SourceSubset":
        return cls(tuple(refs))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __str__(self) -> str:
        return "{" + ",".join(self.members) + "}"


SourceLike = Union[SourceSubset, VariableRef, Sequence[VariableRef]]


def as_source(source: SourceLike) -> SourceSubset:
    """Accept a SourceSubset, a single variable, or a sequence of variables."""
    if isinstance(source, SourceSubset):
        return source
    if isinstance(source, str) or not isinstance(source, Iterable):
        return SourceSubset.of(source)
    return SourceSubset(tuple(source))


def source_target_table(dist: DiscreteJointDistribution, source: SourceLike, target: VariableRef) -> np.ndarray:
    """Joint p(a, y) as a (|A|, |Y|) array; the source's cells follow table order."""
    source = as_source(source)
    target_name = ref_name(target)
    if target_name in source.members:
        raise ArgumentError(f"Target {target_name!r} cannot be a member of source {source}")
    target_axis = dist.axis(target_name)
    marginal = marginalize(dist, source.members + (target_name,))
    position = marginal.axis(target_name)
    table = np.moveaxis(marginal.table, position, -1)
    return table.reshape(-1, dist.shape[target_axis])


def specific_information_nats(joint: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Per-outcome specific information of a (|A|, |Y|) table.

    Returns ``(p_y, values)`` where ``values[y]`` is KL(p(a|y) || p(a)) in
    nats, or NaN for outcomes with p(y) = 0.
    """
    p_y = joint.sum(axis=0)
    p_a = joint.sum(axis=1)
    values = np.full(p_y.shape, np.nan)
    observed = p_y > 0.0
    conditional = joint[:, observed] / p_y[observed]
    values[observed] = rel_entr(conditional, p_a[:, None]).sum(axis=0)
    return p_y, values


@dataclass(frozen=True, eq=False)
class SpecificInfoTable:
    """Specific information of several sources for every outcome with p(y) > 0.

    ``values[i, j]`` is I(Y=outcomes[j] : sources[i]) in ``log_base`` units.
    """

    sources: Tuple[SourceSubset, ...]
    outcomes: Tuple[int, ...]
    p_y: np.ndarray
    values: np.ndarray
    log_base: LogBase = LogBase.NATS

    @classmethod
    def from_joint_tables(
        cls,
        sources: Sequence[SourceSubset],
        tables: Sequence[np.ndarray],
        log_base: LogBase = LogBase.NATS,
    ) -> "SpecificInfoTable":
        """Build from per-source p(a, y) tables; p(y) is read off the first one."""
        if not sources:
            raise ArgumentError("At least one source is required")
        p_y, _ = specific_information_nats(tables[0])
        observed = np.flatnonzero(p_y > 0.0)
        rows = [specific_information_nats(table)[1][observed] for table in tables]
        values = log_base.from_nats(np.vstack(rows))
        return cls(tuple(sources), tuple(int(y) for y in observed), p_y[observed], values, log_base)

    def weighted(self, per_outcome: np.ndarray) -> float:
        """Sum over outcomes of p(y) times a per-outcome value."""
        return float(np.dot(self.p_y, per_outcome))


def specific_information_table(
    dist: DiscreteJointDistribution,
    target: VariableRef,
    sources: Sequence[SourceLike],
) -> SpecificInfoTable:
    """Specific information of every source for every outcome of ``target``."""
    sources = tuple(as_source(s) for s in sources)
    if not sources:
        raise ArgumentError("At least one source is required")
    tables = [source_target_table(dist, source, target) for source in sources]
    return SpecificInfoTable.from_joint_tables(sources, tables, dist.log_base)


def specific_information(
    dist: DiscreteJointDistribution,
    target: VariableRef,
    y_value: Union[int, str],
    source: SourceLike,
) -> float:
    """I(Y=y : A) = sum_a p(a|y) log(p(a|y) / p(a)), which is >= 0."""
    y = dist.alphabet(target).index_of(y_value)
    p_y, values = specific_information_nats(source_target_table(dist, source, target))
    if p_y[y] <= 0.0:
        raise DomainError(f"p({ref_name(target)}={y_value!r}) is zero; specific information undefined", value=y_value)
    return float(dist.log_base.from_nats(values[y]))


def mutual_information(dist: DiscreteJointDistribution, features: SourceLike, target: VariableRef) -> float:
    """MI(features : target) = sum p(a,y) log(p(a,y) / (p(a) p(y)))."""
    joint = source_target_table(dist, features, target)
    product = np.outer(joint.sum(axis=1), joint.sum(axis=0))
    return float(dist.log_base.from_nats(rel_entr(joint, product).sum()))
