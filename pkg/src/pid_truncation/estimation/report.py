"""Estimate reports: one CSV row per (N_s, k) estimate."""

from dataclasses import dataclass
from typing import Iterable, Optional, TextIO

from ..core.utils import csv_header_line, format_value

ESTIMATE_COLUMNS = ("N_s", "k", "raw", "corrected", "exact", "i_hat")


@dataclass(frozen=True)
class EstimateRecord:
    """Raw and corrected Î^(k) from one sample set, with the exact value when known."""

    n_samples: int
    k: int
    raw: float
    corrected: float
    exact: Optional[float] = None
    bias_corrected: bool = True

    @property
    def value(self) -> float:
        """The reported estimate: corrected, or raw when bias correction is off."""
        return self.corrected if self.bias_corrected else self.raw

    @property
    def i_hat(self) -> Optional[float]:
        if self.exact is None or self.exact <= 0.0:
            return None
        return self.value / self.exact - 1.0

    def as_row(self):
        return (self.n_samples, self.k, self.raw, self.corrected, self.exact, self.i_hat)


def write_estimate_csv(records: Iterable[EstimateRecord], stream: TextIO) -> None:
    """Write the version line, the header and one row per record."""
    stream.write(csv_header_line())
    stream.write(",".join(ESTIMATE_COLUMNS) + "\n")
    for record in records:
        stream.write(",".join(format_value(v) for v in record.as_row()) + "\n")
