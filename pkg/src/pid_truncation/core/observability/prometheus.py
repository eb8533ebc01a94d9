"""Prometheus backend adapter."""

import logging
import time
from typing import Dict, Optional
from contextlib import contextmanager

from .base import ObservabilityBackend
from .system_logger import SystemLoggerBackend

logger = logging.getLogger(__name__)


class PrometheusBackend(ObservabilityBackend):
    """Prometheus observability backend for long experiment runs."""

    def __init__(self, port: int = 8000, registry=None, **kwargs):
        """
        Initialize Prometheus backend.

        Args:
            port: Port for metrics endpoint
            registry: Collector registry (default: the global one)
        """
        self.port = port
        self._fallback = SystemLoggerBackend(**kwargs)

        try:
            from prometheus_client import REGISTRY, Counter, Histogram, Gauge, start_http_server

            if registry is None:
                registry = REGISTRY
            start_http_server(port, registry=registry)

            self.operations_counter = Counter(
                'pidtrunc_operations_total',
                'Total experiment operations',
                ['operation', 'experiment', 'status'],
                registry=registry
            )

            self.duration_histogram = Histogram(
                'pidtrunc_operation_duration_seconds',
                'Experiment operation duration',
                ['operation', 'experiment'],
                registry=registry
            )

            self.active_operations = Gauge(
                'pidtrunc_active_operations',
                'Active experiment operations',
                ['experiment'],
                registry=registry
            )

            self.tasks_counter = Counter(
                'pidtrunc_tasks_completed_total',
                'Completed seed/resample tasks',
                ['experiment'],
                registry=registry
            )

            self._prometheus_available = True
            logger.info(f"PrometheusBackend initialized on port {port}")

        except ImportError:
            logger.warning("prometheus_client not installed, falling back to SystemLogger")
            self._prometheus_available = False
        except OSError as e:
            logger.warning(f"Failed to start Prometheus server: {e}, falling back to SystemLogger")
            self._prometheus_available = False

    def log(self, level: str, message: str, **kwargs) -> None:
        """Log via fallback."""
        self._fallback.log(level, message, **kwargs)

    def record_metric(self, name: str, value: float, tags: Optional[Dict[str, str]] = None) -> None:
        """Record metric to Prometheus."""
        if not self._prometheus_available:
            self._fallback.record_metric(name, value, tags)
            return

        try:
            tags = tags or {}
            experiment = tags.get('experiment', 'unknown')

            if 'tasks' in name.lower():
                self.tasks_counter.labels(experiment=experiment).inc(value)
            elif 'duration' in name.lower():
                self.duration_histogram.labels(operation=name, experiment=experiment).observe(value)
            elif 'active' in name.lower():
                self.active_operations.labels(experiment=experiment).set(value)
            else:
                status = 'error' if 'error' in name.lower() else 'success'
                self.operations_counter.labels(operation=name, experiment=experiment, status=status).inc(value)

        except Exception as e:
            logger.error(f"Failed to record Prometheus metric: {e}")
            self._fallback.record_metric(name, value, tags)

    @contextmanager
    def trace(self, name: str, **attributes):
        """Create trace span with duration tracking."""
        if not self._prometheus_available:
            with self._fallback.trace(name, **attributes):
                yield
            return

        experiment = attributes.get('experiment', 'unknown')
        self.active_operations.labels(experiment=experiment).inc()

        start = time.perf_counter()

        try:
            with self._fallback.trace(name, **attributes):
                yield

            self.operations_counter.labels(operation=name, experiment=experiment, status='success').inc()

        except Exception:
            self.operations_counter.labels(operation=name, experiment=experiment, status='error').inc()
            raise

        finally:
            self.duration_histogram.labels(operation=name, experiment=experiment).observe(time.perf_counter() - start)
            self.active_operations.labels(experiment=experiment).dec()

    def flush(self) -> None:
        """Flush fallback."""
        self._fallback.flush()

    def close(self) -> None:
        """Close backend."""
        self._fallback.close()
        logger.info("PrometheusBackend closed")
