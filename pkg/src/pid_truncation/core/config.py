"""Configuration management using Pydantic."""

from typing import List
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings."""

    # Observability
    observability_backend: str = Field("system", description="Observability backend (system, prometheus)")
    prometheus_port: int = Field(8000, description="Port for Prometheus metrics")
    log_level: str = Field("INFO", description="Logging level")

    # Execution
    threads: int = Field(0, ge=0, description="Worker threads for experiments (0 = auto)")

    # Numerics
    units: str = Field("nats", description="Default information units (nats, bits)")
    tie_tolerance: float = Field(1e-10, ge=0.0, description="Tolerance for argmax ties in feature selection")
    enumeration_cap: int = Field(20, ge=1, description="Largest bit count enumerated exactly")

    # Sampling experiment defaults
    resample_count: int = Field(100, ge=2, description="Resamples per sample size")
    sample_sizes: List[int] = Field(
        default_factory=lambda: [64, 128, 256, 512, 1024, 2048, 4096, 8192, 16384],
        description="Sample-size grid",
    )

    model_config = SettingsConfigDict(
        env_prefix="PIDTRUNC_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore"
    )


# Global settings instance
settings = Settings()
