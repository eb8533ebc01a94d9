"""Common utility functions."""

import json
from typing import Any, Union
from pathlib import Path

import numpy as np


def ensure_directory(path: Union[str, Path]) -> None:
    """Ensure a directory exists."""
    Path(path).mkdir(parents=True, exist_ok=True)


def load_json(path: Union[str, Path]) -> Any:
    """Load JSON from a file."""
    with open(path, 'r', encoding='utf-8') as f:
        return json.load(f)


def save_json(data: Any, path: Union[str, Path], indent: int = 2) -> None:
    """Save data to a JSON file, creating parent directories."""
    path = Path(path)
    if path.parent != Path("."):
        ensure_directory(path.parent)
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(data, f, indent=indent, default=str)
        f.write("\n")


SEED_MASK = (1 << 64) - 1


def as_seed(seed: int) -> int:
    """Reduce any integer to an unsigned 64-bit seed."""
    return int(seed) & SEED_MASK


def derive_seed(root: int, *indices: int) -> int:
    """Derive a 64-bit task seed from a root seed and task indices.

    The first 64-bit word of ``SeedSequence(root, spawn_key=indices)``; the
    same (root, indices) always gives the same seed regardless of scheduling.
    """
    sequence = np.random.SeedSequence(entropy=as_seed(root), spawn_key=tuple(int(i) for i in indices))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def csv_header_line() -> str:
    """Version line that opens every CSV this package writes."""
    from .. import __version__
    return f"# pid-truncation {__version__}\n"


def format_value(value: Any) -> str:
    """Deterministic CSV text for a cell: shortest round-trip repr for floats, empty for None."""
    if value is None:
        return ""
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)
