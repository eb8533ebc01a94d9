"""Exponential-family model over M bits with linear, pairwise-XOR and triple-XOR terms.

    p(s) = exp(A(s)) / Z
    A(s) = eps0 sum_i a_i s_i + eps1 sum_{i<j} b_ij (s_i ^ s_j) + eps2 sum_{i<j<k} c_ijk (s_i ^ s_j ^ s_k)

Bits are 0-based; bit i is variable ``s{i}`` and s0 is the most significant
position of the table index. ``b`` and ``c`` follow ``itertools.combinations``
order over the bit indices.
"""

import json
import logging
from enum import Enum
from itertools import combinations
from pathlib import Path
from typing import Dict, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator
from scipy.special import comb, logsumexp

from ..core.config import settings
from ..core.exceptions import ArgumentError, InputFormatError
from ..core.utils import as_seed, load_json, save_json
from ..distributions import (
    DiscreteJointDistribution,
    LogBase,
    VariableId,
    combine,
    make_variables,
    rename,
)

logger = logging.getLogger(__name__)


class MaskPolicy(str, Enum):
    """Which pair/triple interactions survive relative to the target bits."""

    NONE = "none"
    EXACTLY_ONE_TARGET = "exactly_one_target"
    AT_LEAST_ONE_TARGET = "at_least_one_target"

    def keeps(self, target_count: int) -> bool:
        if self is MaskPolicy.EXACTLY_ONE_TARGET:
            return target_count == 1
        if self is MaskPolicy.AT_LEAST_ONE_TARGET:
            return target_count >= 1
        return True


def default_targets(n_bits: int) -> Tuple[int, ...]:
    """The last three bits, or the last bit when fewer than four bits exist."""
    if n_bits >= 4:
        return tuple(range(n_bits - 3, n_bits))
    return (n_bits - 1,)


def pair_indices(n_bits: int) -> Tuple[Tuple[int, int], ...]:
    return tuple(combinations(range(n_bits), 2))


def triple_indices(n_bits: int) -> Tuple[Tuple[int, int, int], ...]:
    return tuple(combinations(range(n_bits), 3))


class XorModelSpec(BaseModel):
    """Coefficients and target split of one model instance."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    n_bits: int = Field(..., alias="M", ge=2)
    eps: Tuple[float, float, float]
    seed: int = 0
    mask: MaskPolicy = MaskPolicy.NONE
    a: Tuple[float, ...]
    b: Tuple[float, ...]
    c: Tuple[float, ...]
    targets: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_shapes(self) -> "XorModelSpec":
        m = self.n_bits
        expected = {"a": m, "b": int(comb(m, 2, exact=True)), "c": int(comb(m, 3, exact=True))}
        for name, count in expected.items():
            if len(getattr(self, name)) != count:
                raise ValueError(f"{name} needs {count} coefficients for M={m}, got {len(getattr(self, name))}")
        targets = self.targets
        if not targets or len(set(targets)) != len(targets):
            raise ValueError(f"targets must be non-empty and distinct, got {targets}")
        if any(not 0 <= t < m for t in targets):
            raise ValueError(f"targets must lie in [0, {m - 1}], got {targets}")
        if len(targets) >= m:
            raise ValueError("at least one bit must remain a feature")
        target_set = set(targets)
        for name, index_sets in (("b", pair_indices(m)), ("c", triple_indices(m))):
            for indices, value in zip(index_sets, getattr(self, name)):
                if value != 0.0 and not self.mask.keeps(len(target_set.intersection(indices))):
                    raise ValueError(f"{name}{indices} = {value} is not allowed under mask {self.mask.value}")
        return self

    @property
    def eps0(self) -> float:
        return self.eps[0]

    @property
    def eps1(self) -> float:
        return self.eps[1]

    @property
    def eps2(self) -> float:
        return self.eps[2]

    @property
    def features(self) -> Tuple[int, ...]:
        return tuple(i for i in range(self.n_bits) if i not in self.targets)

    def to_dict(self) -> Dict:
        return self.model_dump(mode="json", by_alias=True)


def _masked(values: np.ndarray, index_sets: Sequence[Tuple[int, ...]], targets: Sequence[int], mask: MaskPolicy) -> np.ndarray:
    target_set = set(targets)
    keep = np.array([mask.keeps(len(target_set.intersection(s))) for s in index_sets], dtype=bool)
    return np.where(keep, values, 0.0) if len(index_sets) else values


def generate_spec(
    n_bits: int,
    eps0: float,
    eps1: float,
    eps2: float,
    seed: int,
    mask: Union[MaskPolicy, str] = MaskPolicy.NONE,
    targets: Optional[Sequence[int]] = None,
) -> XorModelSpec:
    """Draw every coefficient i.i.d. from Uniform(-1, 1) and apply the mask."""
    if n_bits < 2:
        raise ArgumentError(f"The model needs at least 2 bits, got {n_bits}")
    mask = MaskPolicy(mask)
    targets = tuple(default_targets(n_bits) if targets is None else targets)

    rng = np.random.default_rng(as_seed(seed))
    pairs, triples = pair_indices(n_bits), triple_indices(n_bits)
    a = rng.uniform(-1.0, 1.0, n_bits)
    b = _masked(rng.uniform(-1.0, 1.0, len(pairs)), pairs, targets, mask)
    c = _masked(rng.uniform(-1.0, 1.0, len(triples)), triples, targets, mask)

    try:
        return XorModelSpec(
            n_bits=n_bits,
            eps=(eps0, eps1, eps2),
            seed=seed,
            mask=mask,
            a=tuple(a.tolist()),
            b=tuple(b.tolist()),
            c=tuple(c.tolist()),
            targets=targets,
        )
    except ValidationError as e:
        raise ArgumentError(f"Invalid model parameters: {e}") from e


def state_bits(n_bits: int) -> np.ndarray:
    """All 2^M states as rows of bits, s0 most significant."""
    index = np.arange(1 << n_bits, dtype=np.int64)
    return ((index[:, None] >> (n_bits - 1 - np.arange(n_bits))) & 1).astype(np.int64)


def log_weights(spec: XorModelSpec) -> np.ndarray:
    """A(s) for every state, in table order."""
    bits = state_bits(spec.n_bits)
    energy = spec.eps0 * (bits @ np.asarray(spec.a))
    for eps, index_sets, coefficients in (
        (spec.eps1, pair_indices(spec.n_bits), spec.b),
        (spec.eps2, triple_indices(spec.n_bits), spec.c),
    ):
        if not index_sets:
            continue
        columns = np.asarray(index_sets)
        parity = np.bitwise_xor.reduce(bits[:, columns], axis=2)
        energy = energy + eps * (parity @ np.asarray(coefficients))
    return energy


def build_distribution(spec: XorModelSpec, log_base: LogBase = LogBase.NATS) -> DiscreteJointDistribution:
    """Exact table p(s) = exp(A(s)) / Z over all 2^M states."""
    if spec.n_bits > settings.enumeration_cap:
        raise ArgumentError(
            f"Exact enumeration of 2^{spec.n_bits} states exceeds the cap of 2^{settings.enumeration_cap}"
        )
    energy = log_weights(spec)
    probs = np.exp(energy - logsumexp(energy))
    names = [f"s{i}" for i in range(spec.n_bits)]
    return DiscreteJointDistribution(make_variables(names, [2] * spec.n_bits), probs, log_base)


class SplitModel(NamedTuple):
    """A model table reshaped into binary features X1.. and one composite target Y."""

    distribution: DiscreteJointDistribution
    features: Tuple[VariableId, ...]
    target: VariableId


def split_target(dist: DiscreteJointDistribution, spec: XorModelSpec, target_name: str = "Y") -> SplitModel:
    """Merge the target bits into one variable and rename the remaining bits X1..X{M-t}."""
    expected = tuple(f"s{i}" for i in range(spec.n_bits))
    if dist.names != expected:
        raise ArgumentError(f"Distribution variables {dist.names} do not match a {spec.n_bits}-bit model")
    merged = combine(dist, [f"s{i}" for i in spec.targets], target_name)
    mapping = {f"s{bit}": f"X{position}" for position, bit in enumerate(spec.features, start=1)}
    reshaped = rename(merged, mapping)
    features = reshaped.ids[:-1]
    return SplitModel(reshaped, features, reshaped.variable(target_name))


def model_distribution(spec: XorModelSpec, log_base: LogBase = LogBase.NATS) -> SplitModel:
    """Build the table of ``spec`` and split it into features and target."""
    return split_target(build_distribution(spec, log_base), spec)


def spec_from_dict(data: Dict, source: str = "<data>") -> XorModelSpec:
    """Parse a spec, regenerating missing coefficients from its seed."""
    if not isinstance(data, dict):
        raise InputFormatError(f"{source}: model spec must be a JSON object")
    data = dict(data)
    try:
        n_bits = int(data.get("M", data.get("n_bits")))
        eps = [float(e) for e in data["eps"]]
        if len(eps) != 3:
            raise ValueError("eps needs exactly three values")
        seed = int(data.get("seed", 0))
        mask = MaskPolicy(data.get("mask", MaskPolicy.NONE.value))
        targets = data.get("targets")
    except (KeyError, TypeError, ValueError) as e:
        raise InputFormatError(f"{source}: invalid model spec: {e}") from e

    missing = [name for name in ("a", "b", "c") if name not in data]
    if missing:
        generated = generate_spec(n_bits, *eps, seed=seed, mask=mask, targets=targets)
        for name in missing:
            data[name] = getattr(generated, name)
        logger.debug(f"{source}: regenerated coefficients {missing} from seed {seed}")
    data.setdefault("targets", targets if targets is not None else default_targets(n_bits))
    data["M"] = n_bits
    data.pop("n_bits", None)
    try:
        return XorModelSpec.model_validate(data)
    except ValidationError as e:
        raise InputFormatError(f"{source}: invalid model spec: {e}") from e


def load_spec(path: Union[str, Path]) -> XorModelSpec:
    """Read a model spec file."""
    try:
        data = load_json(path)
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as e:
        raise InputFormatError(f"{path}: cannot read model spec: {e}") from e
    return spec_from_dict(data, str(path))


def save_spec(spec: XorModelSpec, path: Union[str, Path]) -> None:
    """Write a model spec with every coefficient present."""
    save_json(spec.to_dict(), path)
