"""Distribution (JSON) and sample (CSV) file formats."""

import csv
import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Union

import numpy as np
from pydantic import BaseModel, Field, ValidationError

from ..core.exceptions import ArgumentError, InputFormatError
from ..core.utils import load_json, save_json
from .joint import DiscreteJointDistribution, make_variables
from .sampling import SampleSet
from .variables import LogBase

logger = logging.getLogger(__name__)


class VariableSchema(BaseModel):
    """One entry of the ``variables`` list."""
    name: str = Field(..., min_length=1)
    cardinality: int = Field(..., ge=1)
    labels: Optional[List[str]] = None


class DistributionSchema(BaseModel):
    """Input schema for distribution files."""
    variables: List[VariableSchema] = Field(..., min_length=1)
    probs: List[float]
    log_base: LogBase = LogBase.NATS


def distribution_to_dict(dist: DiscreteJointDistribution) -> Dict:
    """Plain-JSON form of a distribution."""
    variables = []
    for vid, alphabet in dist.variables:
        entry = {"name": vid.name, "cardinality": alphabet.cardinality}
        if alphabet.labels is not None:
            entry["labels"] = list(alphabet.labels)
        variables.append(entry)
    return {"variables": variables, "probs": [float(p) for p in dist.probs], "log_base": dist.log_base.value}


def distribution_from_dict(data: Dict, source: str = "<data>") -> DiscreteJointDistribution:
    """Validate and build a distribution from its JSON form."""
    try:
        schema = DistributionSchema.model_validate(data)
        variables = make_variables(
            [v.name for v in schema.variables],
            [v.cardinality for v in schema.variables],
            [v.labels for v in schema.variables],
        )
        return DiscreteJointDistribution(variables, np.asarray(schema.probs), schema.log_base)
    except ValidationError as e:
        raise InputFormatError(f"{source}: invalid distribution file: {e}") from e
    except ArgumentError as e:
        raise InputFormatError(f"{source}: {e}") from e


def load_distribution(path: Union[str, Path]) -> DiscreteJointDistribution:
    """Read a distribution file."""
    try:
        data = load_json(path)
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as e:
        raise InputFormatError(f"{path}: cannot read distribution file: {e}") from e
    dist = distribution_from_dict(data, str(path))
    logger.debug(f"Loaded {dist!r} from {path}")
    return dist


def save_distribution(dist: DiscreteJointDistribution, path: Union[str, Path]) -> None:
    """Write a distribution file."""
    save_json(distribution_to_dict(dist), path)


def load_samples(path: Union[str, Path], cardinalities: Optional[Dict[str, int]] = None) -> SampleSet:
    """Read a sample CSV: a header of names, then one row of integer indices per sample.

    Cardinalities missing from ``cardinalities`` are inferred as max index + 1.
    """
    try:
        with open(path, newline="", encoding="utf-8") as f:
            reader = csv.reader(f)
            header = next(reader, None)
            if not header:
                raise InputFormatError(f"{path}: missing header row")
            names = [name.strip() for name in header]
            rows = []
            for line_number, record in enumerate(reader, start=2):
                if not record or all(not cell.strip() for cell in record):
                    continue
                if len(record) != len(names):
                    raise InputFormatError(f"{path}:{line_number}: expected {len(names)} fields, got {len(record)}")
                try:
                    rows.append([int(cell) for cell in record])
                except ValueError:
                    raise InputFormatError(f"{path}:{line_number}: non-integer value in {record}") from None
    except (OSError, UnicodeDecodeError) as e:
        raise InputFormatError(f"{path}: cannot read sample file: {e}") from e

    if not rows:
        raise InputFormatError(f"{path}: no sample rows")
    data = np.asarray(rows, dtype=np.int64)
    if np.any(data < 0):
        raise InputFormatError(f"{path}: negative alphabet index")
    cardinalities = cardinalities or {}
    sizes = [int(cardinalities.get(name, data[:, i].max() + 1)) for i, name in enumerate(names)]
    try:
        return SampleSet(make_variables(names, sizes), data)
    except ArgumentError as e:
        raise InputFormatError(f"{path}: {e}") from e


def save_samples(samples: SampleSet, path: Union[str, Path]) -> None:
    """Write a sample CSV."""
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(samples.names)
        writer.writerows(samples.rows.tolist())
