"""Main entry point for the pidtrunc CLI."""

import json
import logging
from contextlib import contextmanager
from enum import Enum
from io import StringIO
from pathlib import Path
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

import typer
from rich.console import Console
from rich.logging import RichHandler

from . import __version__
from .core.config import settings
from .core.exceptions import ArgumentError, ConfigurationError, DomainError, PidTruncationError
from .core.observability import ObservabilityFactory
from .core.utils import csv_header_line, format_value
from .distributions import (
    DiscreteJointDistribution,
    LogBase,
    empirical,
    load_distribution,
    load_samples,
    sample,
    with_log_base,
)
from .estimation import EstimateRecord, estimate_profiles, write_estimate_csv
from .experiments import (
    ExperimentConfig,
    ExperimentKind,
    SamplingExperiment,
    run_profile_strong,
    run_profile_weak,
)
from .experiments.config import STRONG_EPS, WEAK_EPS
from .models import MaskPolicy, generate_spec, load_spec, model_distribution, save_spec
from .synergy import i_k, i_k_profile, select_features

# Configure rich logging on stderr; stdout carries result data
logging.basicConfig(
    level=settings.log_level,
    format="%(message)s",
    datefmt="[%X]",
    handlers=[RichHandler(console=Console(stderr=True), rich_tracebacks=True)],
)

logger = logging.getLogger(__name__)

app = typer.Typer(
    name="pidtrunc",
    help="Truncated multivariate mutual information I^(k) for discrete variables",
    add_completion=False,
)
console = Console(stderr=True)

EXIT_ARGUMENT_ERROR = 2
EXIT_DOMAIN_ERROR = 3


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class Preset(str, Enum):
    WEAK = "weak"
    STRONG = "strong"


PRESET_PARAMETERS = {
    Preset.WEAK: (WEAK_EPS, MaskPolicy.NONE),
    Preset.STRONG: (STRONG_EPS, MaskPolicy.EXACTLY_ONE_TARGET),
}


class ModelInput(NamedTuple):
    distribution: DiscreteJointDistribution
    target: str
    features: Tuple[str, ...]


def setup_observability():
    """Initialize observability system."""
    ObservabilityFactory.create(
        backend=settings.observability_backend,
        port=settings.prometheus_port,
        log_level=settings.log_level,
    )


@contextmanager
def cli_errors() -> Iterator[None]:
    """Report package errors on stderr and exit with 2 (arguments, input) or 3 (domain)."""
    try:
        yield
    except DomainError as e:
        console.print(f"[bold red]Domain error:[/bold red] {e}", highlight=False)
        raise typer.Exit(EXIT_DOMAIN_ERROR)
    except ArgumentError as e:
        console.print(f"[bold red]Error:[/bold red] {e}", highlight=False)
        raise typer.Exit(EXIT_ARGUMENT_ERROR)
    except PidTruncationError as e:
        console.print(f"[bold red]Error:[/bold red] {e}", highlight=False)
        raise typer.Exit(1)


def emit(text: str, out: Optional[Path]) -> None:
    """Write result text to ``out`` or stdout."""
    if out is None:
        typer.echo(text, nl=False)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    console.print(f"[green]Wrote {out}[/green]")


def emit_json(data: Dict, out: Optional[Path]) -> None:
    emit(json.dumps(data, indent=2) + "\n", out)


def csv_text(columns: Tuple[str, ...], rows: List[tuple]) -> str:
    lines = [csv_header_line(), ",".join(columns) + "\n"]
    lines.extend(",".join(format_value(v) for v in row) + "\n" for row in rows)
    return "".join(lines)


def resolve_units(units: Optional[LogBase]) -> LogBase:
    if units is not None:
        return units
    try:
        return LogBase(settings.units)
    except ValueError:
        raise ConfigurationError(f"PIDTRUNC_UNITS must be nats or bits, got {settings.units!r}") from None


def parse_names(value: Optional[str]) -> Optional[List[str]]:
    if value is None:
        return None
    names = [name.strip() for name in value.split(",") if name.strip()]
    if not names:
        raise ArgumentError("--features needs at least one name")
    return names


def parse_sizes(value: Optional[str]) -> Optional[List[int]]:
    if value is None:
        return None
    try:
        return [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise ArgumentError(f"--sizes must be comma-separated integers, got {value!r}") from None


def load_input(
    dist_path: Optional[Path],
    model_path: Optional[Path],
    target: Optional[str],
    features: Optional[str],
    units: LogBase,
) -> ModelInput:
    """Resolve ``--dist`` or ``--model`` into a table with its target and features."""
    if (dist_path is None) == (model_path is None):
        raise ArgumentError("Give exactly one of --dist or --model")

    if model_path is not None:
        model = model_distribution(load_spec(model_path), units)
        dist = model.distribution
        default_target = model.target.name
    else:
        dist = with_log_base(load_distribution(dist_path), units)
        default_target = None

    target = target or default_target
    if target is None:
        raise ArgumentError("--target is required with --dist")
    dist.axis(target)
    names = parse_names(features) or [name for name in dist.names if name != target]
    return ModelInput(dist, target, tuple(names))


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable verbose logging"),
):
    """
    Truncated multivariate information CLI.
    """
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    setup_observability()


@app.command()
def exact(
    dist: Optional[Path] = typer.Option(None, "--dist", help="Distribution JSON file"),
    model: Optional[Path] = typer.Option(None, "--model", help="XOR model spec JSON file"),
    target: Optional[str] = typer.Option(None, "--target", help="Target variable (default Y for --model)"),
    features: Optional[str] = typer.Option(None, "--features", help="Comma-separated feature names (default: all others)"),
    k: Optional[int] = typer.Option(None, "--k", help="Single truncation order"),
    kmax: Optional[int] = typer.Option(None, "--kmax", help="Largest truncation order of the profile"),
    units: Optional[LogBase] = typer.Option(None, "--units", help="nats or bits"),
    fmt: OutputFormat = typer.Option(OutputFormat.CSV, "--format", help="csv or json"),
    out: Optional[Path] = typer.Option(None, "--out", help="Output file (default: stdout)"),
):
    """
    Exact I^(k) profile of a distribution or model.
    """
    with cli_errors():
        data = load_input(dist, model, target, features, resolve_units(units))
        if k is not None:
            value = i_k(data.distribution, data.target, data.features, k)
            if fmt is OutputFormat.JSON:
                emit_json({"k": k, "I_k": [value], "units": data.distribution.log_base.value}, out)
            else:
                emit(csv_text(("k", "I_k"), [(k, value)]), out)
            return

        profile = i_k_profile(data.distribution, data.target, data.features, kmax)
        if fmt is OutputFormat.JSON:
            emit_json(profile.to_dict(), out)
            return
        gaps = profile.gaps or (None,) * profile.k_max
        rows = [
            (k_value, profile.values[k_value - 1], gaps[k_value - 1], profile.ratios[k_value - 1])
            for k_value in range(1, profile.k_max + 1)
        ]
        emit(csv_text(("k", "I_k", "delta", "ratio"), rows), out)


@app.command()
def estimate(
    samples: Optional[Path] = typer.Option(None, "--samples", help="Sample CSV file"),
    dist: Optional[Path] = typer.Option(None, "--dist", help="Distribution JSON file to draw samples from"),
    model: Optional[Path] = typer.Option(None, "--model", help="XOR model spec (sample source, or exact reference for --samples)"),
    n_samples: Optional[int] = typer.Option(None, "--n-samples", help="Samples to draw from --dist/--model"),
    seed: int = typer.Option(0, "--seed", help="Sampling seed"),
    target: Optional[str] = typer.Option(None, "--target", help="Target variable"),
    features: Optional[str] = typer.Option(None, "--features", help="Comma-separated feature names"),
    k: Optional[int] = typer.Option(None, "--k", help="Single truncation order"),
    kmax: Optional[int] = typer.Option(None, "--kmax", help="Largest truncation order"),
    units: Optional[LogBase] = typer.Option(None, "--units", help="nats or bits"),
    no_bias_correction: bool = typer.Option(False, "--no-bias-correction", help="Report plug-in values in I_k and i_hat"),
    fmt: OutputFormat = typer.Option(OutputFormat.CSV, "--format", help="csv or json"),
    out: Optional[Path] = typer.Option(None, "--out", help="Output file (default: stdout)"),
):
    """
    Bias-corrected estimate of I^(k) from samples.
    """
    with cli_errors():
        log_base = resolve_units(units)
        reference: Optional[ModelInput] = None
        if dist is not None or model is not None:
            reference = load_input(dist, model, target, features, log_base)

        if samples is not None:
            cardinalities = None
            if reference is not None:
                cardinalities = dict(zip(reference.distribution.names, reference.distribution.shape))
            sample_set = load_samples(samples, cardinalities)
        elif reference is not None:
            if n_samples is None or n_samples < 1:
                raise ArgumentError("--n-samples >= 1 is required when sampling from --dist/--model")
            sample_set = sample(reference.distribution, n_samples, seed)
        else:
            raise ArgumentError("Give --samples, or --dist/--model with --n-samples")

        target_name = target or (reference.target if reference else None)
        if target_name is None:
            raise ArgumentError("--target is required with --samples")
        names = parse_names(features) or (
            list(reference.features) if reference else [n for n in sample_set.names if n != target_name]
        )

        emp = empirical(sample_set, log_base)
        n_features = len(names)
        orders = [k] if k is not None else list(range(1, (kmax or n_features) + 1))
        if any(not 1 <= order <= n_features for order in orders):
            raise ArgumentError(f"k must lie in [1, {n_features}]")
        profiles = estimate_profiles(emp, target_name, names, max(orders))
        exact_values = None
        if reference is not None:
            exact_values = i_k_profile(reference.distribution, target_name, names, max(orders)).values

        records = [
            EstimateRecord(
                len(sample_set),
                order,
                profiles["raw"].value(order),
                profiles["corrected"].value(order),
                exact_values[order - 1] if exact_values else None,
                not no_bias_correction,
            )
            for order in orders
        ]
        if fmt is OutputFormat.JSON:
            emit_json(
                {
                    "k": orders[-1],
                    "orders": orders,
                    "I_k": [r.value for r in records],
                    "raw": [r.raw for r in records],
                    "corrected": [r.corrected for r in records],
                    "bias_corrected": not no_bias_correction,
                    "N_s": len(sample_set),
                    "units": log_base.value,
                },
                out,
            )
            return
        buffer = StringIO()
        write_estimate_csv(records, buffer)
        emit(buffer.getvalue(), out)


@app.command()
def select(
    dist: Optional[Path] = typer.Option(None, "--dist", help="Distribution JSON file"),
    model: Optional[Path] = typer.Option(None, "--model", help="XOR model spec JSON file"),
    target: Optional[str] = typer.Option(None, "--target", help="Target variable"),
    features: Optional[str] = typer.Option(None, "--features", help="Comma-separated candidate features"),
    k: int = typer.Option(..., "--k", help="Truncation order"),
    prune: bool = typer.Option(False, "--prune", help="Greedy backward pruning of the relevant set"),
    units: Optional[LogBase] = typer.Option(None, "--units", help="nats or bits"),
    fmt: OutputFormat = typer.Option(OutputFormat.JSON, "--format", help="csv or json"),
    out: Optional[Path] = typer.Option(None, "--out", help="Output file (default: stdout)"),
):
    """
    Select features that attain the per-outcome maximum of I^(k).
    """
    with cli_errors():
        data = load_input(dist, model, target, features, resolve_units(units))
        report = select_features(data.distribution, data.target, data.features, k, prune=prune)
        if fmt is OutputFormat.JSON:
            emit_json(report.to_dict(), out)
            return
        rows = [(name, name in report.relevant, name in report.pruned) for name in report.features]
        emit(csv_text(("feature", "relevant", "pruned"), rows), out)


@app.command("model-gen")
def model_gen(
    bits: int = typer.Option(8, "--bits", help="Number of bits M"),
    preset: Preset = typer.Option(Preset.WEAK, "--preset", help="weak or strong coupling"),
    eps0: Optional[float] = typer.Option(None, "--eps0", help="Linear coupling"),
    eps1: Optional[float] = typer.Option(None, "--eps1", help="Pairwise XOR coupling"),
    eps2: Optional[float] = typer.Option(None, "--eps2", help="Triple XOR coupling"),
    mask: Optional[MaskPolicy] = typer.Option(None, "--mask", help="Interaction mask"),
    seed: int = typer.Option(0, "--seed", help="Coefficient seed"),
    out: Optional[Path] = typer.Option(None, "--out", help="Output file (default: stdout)"),
):
    """
    Generate an XOR model spec with random coefficients.
    """
    with cli_errors():
        eps, preset_mask = PRESET_PARAMETERS[preset]
        overrides = (eps0, eps1, eps2)
        eps = tuple(value if value is not None else default for value, default in zip(overrides, eps))
        spec = generate_spec(bits, *eps, seed=seed, mask=mask or preset_mask)
        if out is None:
            emit_json(spec.to_dict(), None)
        else:
            save_spec(spec, out)
            console.print(f"[green]Wrote {out}[/green]")


def run_experiment(kind: ExperimentKind, out: Optional[Path], details: Optional[Path] = None, **overrides) -> None:
    config = ExperimentConfig.for_experiment(kind, output=out, **overrides)
    console.print(f"[bold blue]Running {kind.value} over seeds {config.seeds}...[/bold blue]")
    if kind is ExperimentKind.SAMPLING:
        experiment = SamplingExperiment(config)
        table = experiment.run()
        if details is not None:
            buffer = StringIO()
            write_estimate_csv(experiment.records, buffer)
            emit(buffer.getvalue(), details)
    elif kind is ExperimentKind.PROFILE_WEAK:
        table = run_profile_weak(config)
    else:
        table = run_profile_strong(config)

    buffer = StringIO()
    table.write_csv(buffer)
    emit(buffer.getvalue(), out)


@app.command("exp-weak")
def exp_weak(
    seed: Optional[List[int]] = typer.Option(None, "--seed", help="Coefficient seed (repeatable; default 0..9)"),
    bits: Optional[int] = typer.Option(None, "--bits", help="Number of bits M"),
    kmax: Optional[int] = typer.Option(None, "--kmax", help="Largest truncation order"),
    threads: Optional[int] = typer.Option(None, "--threads", help="Worker threads (0 = one per CPU)"),
    units: Optional[LogBase] = typer.Option(None, "--units", help="nats or bits"),
    out: Optional[Path] = typer.Option(None, "--out", help="Output CSV (default: stdout)"),
):
    """
    Weak-coupling truncation profiles over several seeds.
    """
    with cli_errors():
        run_experiment(
            ExperimentKind.PROFILE_WEAK, out, seeds=seed or None, n_bits=bits, k_max=kmax, threads=threads, units=units
        )


@app.command("exp-strong")
def exp_strong(
    seed: Optional[List[int]] = typer.Option(None, "--seed", help="Coefficient seed (repeatable; default 0..9)"),
    bits: Optional[int] = typer.Option(None, "--bits", help="Number of bits M"),
    kmax: Optional[int] = typer.Option(None, "--kmax", help="Largest truncation order"),
    threads: Optional[int] = typer.Option(None, "--threads", help="Worker threads (0 = one per CPU)"),
    units: Optional[LogBase] = typer.Option(None, "--units", help="nats or bits"),
    out: Optional[Path] = typer.Option(None, "--out", help="Output CSV (default: stdout)"),
):
    """
    Strong-coupling truncation profiles over several seeds.
    """
    with cli_errors():
        run_experiment(
            ExperimentKind.PROFILE_STRONG, out, seeds=seed or None, n_bits=bits, k_max=kmax, threads=threads, units=units
        )


@app.command("exp-sampling")
def exp_sampling(
    seed: Optional[List[int]] = typer.Option(None, "--seed", help="Seed pinning the model coefficients (default 0)"),
    bits: Optional[int] = typer.Option(None, "--bits", help="Number of bits M"),
    kmax: Optional[int] = typer.Option(None, "--kmax", help="Largest truncation order"),
    sizes: Optional[str] = typer.Option(None, "--sizes", help="Comma-separated sample sizes"),
    resamples: Optional[int] = typer.Option(None, "--resamples", help="Resamples per sample size"),
    no_bias_correction: bool = typer.Option(False, "--no-bias-correction", help="Use plug-in estimates for i_hat"),
    details: Optional[Path] = typer.Option(None, "--details", help="Per-resample estimate CSV"),
    threads: Optional[int] = typer.Option(None, "--threads", help="Worker threads (0 = one per CPU)"),
    units: Optional[LogBase] = typer.Option(None, "--units", help="nats or bits"),
    out: Optional[Path] = typer.Option(None, "--out", help="Output CSV (default: stdout)"),
):
    """
    Estimator bias and spread against sample size on one pinned model.
    """
    with cli_errors():
        run_experiment(
            ExperimentKind.SAMPLING,
            out,
            details=details,
            seeds=seed or None,
            n_bits=bits,
            k_max=kmax,
            sample_sizes=parse_sizes(sizes),
            resample_count=resamples,
            correct_bias=not no_bias_correction,
            threads=threads,
            units=units,
        )


@app.command()
def version():
    """Print the package version."""
    typer.echo(f"pid-truncation {__version__}")


def run():
    """Entry point for the package."""
    app()


if __name__ == "__main__":
    app()
