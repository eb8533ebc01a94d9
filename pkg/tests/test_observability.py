"""Unit tests for the observability backends."""

import pytest
from prometheus_client import CollectorRegistry

from pid_truncation.core.observability import (
    ObservabilityFactory,
    SystemLoggerBackend,
    get_observability,
)
from pid_truncation.core.observability.prometheus import PrometheusBackend
from pid_truncation.experiments import ExperimentConfig, ExperimentKind, WeakCouplingExperiment


def test_factory_returns_singleton():
    first = get_observability()
    assert isinstance(first, SystemLoggerBackend)
    assert get_observability("prometheus") is first
    assert ObservabilityFactory.create("prometheus") is first


def test_unknown_backend_falls_back(caplog):
    backend = ObservabilityFactory.create("statsd")
    assert isinstance(backend, SystemLoggerBackend)
    assert "Unknown observability backend" in caplog.text


def test_prometheus_failure_falls_back(mocker):
    mocker.patch("prometheus_client.start_http_server", side_effect=OSError("port in use"))
    backend = ObservabilityFactory.create("prometheus", port=1)
    assert isinstance(backend, PrometheusBackend)
    # Without a server the backend records through the system logger
    backend.record_metric("experiment_run_success", 1, {"experiment": "profile_weak"})
    assert backend._fallback.get_metrics("experiment_run_success")["experiment_run_success"][0]["value"] == 1


def test_prometheus_counts_tasks_and_traces(mocker):
    mocker.patch("prometheus_client.start_http_server")
    registry = CollectorRegistry()
    backend = PrometheusBackend(port=0, registry=registry)

    with backend.trace("experiment_run_profile_weak", experiment="profile_weak"):
        backend.record_metric("experiment_tasks_completed", 3, {"experiment": "profile_weak"})

    labels = {"experiment": "profile_weak"}
    assert registry.get_sample_value("pidtrunc_tasks_completed_total", labels) == 3
    assert registry.get_sample_value(
        "pidtrunc_operations_total",
        {"operation": "experiment_run_profile_weak", "experiment": "profile_weak", "status": "success"},
    ) == 1
    assert registry.get_sample_value("pidtrunc_active_operations", labels) == 0


def test_prometheus_trace_counts_errors(mocker):
    mocker.patch("prometheus_client.start_http_server")
    registry = CollectorRegistry()
    backend = PrometheusBackend(port=0, registry=registry)

    with pytest.raises(RuntimeError):
        with backend.trace("experiment_run_sampling", experiment="sampling"):
            raise RuntimeError("boom")

    assert registry.get_sample_value(
        "pidtrunc_operations_total",
        {"operation": "experiment_run_sampling", "experiment": "sampling", "status": "error"},
    ) == 1


def test_system_logger_keeps_metrics():
    backend = SystemLoggerBackend(log_level="DEBUG")
    backend.record_metric("experiment_run_success", 1, {"experiment": "sampling"})
    with backend.trace("span", experiment="sampling") as trace_id:
        assert trace_id.startswith("span_")
    assert backend.get_metrics()["experiment_run_success"] == [{"value": 1, "tags": {"experiment": "sampling"}}]


def test_experiment_run_records_metrics():
    backend = SystemLoggerBackend()
    config = ExperimentConfig.for_experiment(ExperimentKind.PROFILE_WEAK, n_bits=5, seeds=[0, 1], threads=1)
    table = WeakCouplingExperiment(config, backend).run()

    assert len(table) == 2 * 2 * 3
    metrics = backend.get_metrics()
    assert metrics["experiment_tasks_completed"][0]["value"] == 2
    assert metrics["experiment_run_success"][0]["tags"] == {"experiment": "profile_weak"}


def test_experiment_failure_is_recorded(mocker):
    backend = SystemLoggerBackend()
    config = ExperimentConfig.for_experiment(ExperimentKind.PROFILE_WEAK, seeds=[0], threads=1)
    experiment = WeakCouplingExperiment(config, backend)
    mocker.patch.object(experiment, "execute", side_effect=RuntimeError("boom"))

    with pytest.raises(RuntimeError):
        experiment.run()
    assert backend.get_metrics("experiment_run_error")["experiment_run_error"][0]["value"] == 1
