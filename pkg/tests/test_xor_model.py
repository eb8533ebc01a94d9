"""Unit tests for the XOR exponential-family model."""

import itertools
import math

import numpy as np
import pytest

from pid_truncation.core.config import settings
from pid_truncation.core.exceptions import ArgumentError, InputFormatError
from pid_truncation.distributions import marginalize
from pid_truncation.experiments.config import STRONG_EPS, WEAK_EPS
from pid_truncation.models import (
    MaskPolicy,
    XorModelSpec,
    build_distribution,
    default_targets,
    generate_spec,
    load_spec,
    model_distribution,
    save_spec,
    spec_from_dict,
    split_target,
)
from pid_truncation.models.xor import log_weights, state_bits


def brute_force_probabilities(spec):
    """p(s) from explicit loops over states and interaction terms."""
    m = spec.n_bits
    weights = []
    for state in itertools.product((0, 1), repeat=m):
        energy = sum(spec.eps0 * spec.a[i] * state[i] for i in range(m))
        pair = 0
        for i in range(m):
            for j in range(i + 1, m):
                energy += spec.eps1 * spec.b[pair] * (state[i] ^ state[j])
                pair += 1
        triple = 0
        for i in range(m):
            for j in range(i + 1, m):
                for k in range(j + 1, m):
                    energy += spec.eps2 * spec.c[triple] * (state[i] ^ state[j] ^ state[k])
                    triple += 1
        weights.append(math.exp(energy))
    z = math.fsum(weights)
    return [w / z for w in weights]


@pytest.mark.parametrize("preset, mask", [(WEAK_EPS, MaskPolicy.NONE), (STRONG_EPS, MaskPolicy.EXACTLY_ONE_TARGET)])
def test_table_matches_brute_force(preset, mask):
    spec = generate_spec(8, *preset, seed=4, mask=mask)
    dist = build_distribution(spec)
    assert np.max(np.abs(dist.probs - brute_force_probabilities(spec))) <= 1e-12


def test_state_order_has_first_bit_most_significant():
    bits = state_bits(3)
    assert bits[1].tolist() == [0, 0, 1]
    assert bits[4].tolist() == [1, 0, 0]


def test_log_weights_of_linear_model():
    spec = generate_spec(3, 1.0, 0.0, 0.0, seed=2)
    energy = log_weights(spec)
    assert energy[0] == 0.0
    assert energy[0b100] == pytest.approx(spec.a[0])
    assert energy[0b011] == pytest.approx(spec.a[1] + spec.a[2])


def test_generate_spec_is_deterministic():
    assert generate_spec(6, *WEAK_EPS, seed=9) == generate_spec(6, *WEAK_EPS, seed=9)
    assert generate_spec(6, *WEAK_EPS, seed=9).a != generate_spec(6, *WEAK_EPS, seed=10).a


def test_coefficient_counts_and_range():
    spec = generate_spec(8, *WEAK_EPS, seed=1)
    assert (len(spec.a), len(spec.b), len(spec.c)) == (8, 28, 56)
    assert all(-1.0 <= v <= 1.0 for v in spec.a + spec.b + spec.c)
    assert spec.targets == (5, 6, 7)
    assert spec.features == (0, 1, 2, 3, 4)


def test_default_targets():
    assert default_targets(8) == (5, 6, 7)
    assert default_targets(4) == (1, 2, 3)
    assert default_targets(3) == (2,)


def test_exactly_one_target_mask_zeros_other_interactions():
    spec = generate_spec(8, *STRONG_EPS, seed=0, mask=MaskPolicy.EXACTLY_ONE_TARGET)
    targets = set(spec.targets)
    for triple, value in zip(itertools.combinations(range(8), 3), spec.c):
        if len(targets.intersection(triple)) != 1:
            assert value == 0.0
        else:
            assert value != 0.0
    for pair, value in zip(itertools.combinations(range(8), 2), spec.b):
        assert (value != 0.0) == (len(targets.intersection(pair)) == 1)


def test_at_least_one_target_mask_keeps_target_pairs():
    spec = generate_spec(5, *STRONG_EPS, seed=0, mask="at_least_one_target", targets=(3, 4))
    index = list(itertools.combinations(range(5), 2)).index((3, 4))
    assert spec.b[index] != 0.0
    assert spec.b[0] == 0.0


def test_mask_keeps_linear_terms():
    masked = generate_spec(8, *STRONG_EPS, seed=3, mask=MaskPolicy.EXACTLY_ONE_TARGET)
    unmasked = generate_spec(8, *STRONG_EPS, seed=3)
    assert masked.a == unmasked.a


def test_spec_validation():
    with pytest.raises(ArgumentError):
        generate_spec(1, *WEAK_EPS, seed=0)
    with pytest.raises(ArgumentError):
        generate_spec(4, *WEAK_EPS, seed=0, targets=(0, 1, 2, 3))
    with pytest.raises(ArgumentError):
        generate_spec(4, *WEAK_EPS, seed=0, targets=(4,))


def test_enumeration_cap(monkeypatch):
    monkeypatch.setattr(settings, "enumeration_cap", 4)
    spec = generate_spec(5, *WEAK_EPS, seed=0)
    with pytest.raises(ArgumentError, match="cap"):
        build_distribution(spec)


def test_split_target_names_and_labels(weak_spec):
    model = model_distribution(weak_spec)
    dist = model.distribution
    assert dist.names == ("X1", "X2", "X3", "X4", "X5", "Y")
    assert [f.name for f in model.features] == ["X1", "X2", "X3", "X4", "X5"]
    assert model.target.name == "Y"
    assert dist.alphabet("Y").labels == ("000", "001", "010", "011", "100", "101", "110", "111")


def test_split_target_preserves_probabilities(weak_spec):
    bits = build_distribution(weak_spec)
    model = split_target(bits, weak_spec)
    assert np.allclose(model.distribution.probs, bits.probs)
    feature = marginalize(model.distribution, ["X2"])
    assert np.allclose(feature.probs, marginalize(bits, ["s1"]).probs)


def test_split_target_with_custom_targets():
    spec = generate_spec(4, *WEAK_EPS, seed=0, targets=(0,))
    model = model_distribution(spec)
    assert model.distribution.names == ("X1", "X2", "X3", "Y")
    assert np.allclose(
        marginalize(model.distribution, ["Y"]).probs, marginalize(build_distribution(spec), ["s0"]).probs
    )


def test_split_target_rejects_foreign_tables(xor_dist, weak_spec):
    with pytest.raises(ArgumentError):
        split_target(xor_dist, weak_spec)


def test_spec_file_round_trip(tmp_path, strong_spec):
    path = tmp_path / "strong.json"
    save_spec(strong_spec, path)
    assert load_spec(path) == strong_spec
    assert '"M": 8' in path.read_text()


def test_spec_without_coefficients_is_regenerated():
    spec = spec_from_dict({"M": 6, "eps": [1.0, 0.5, 0.1], "seed": 3})
    assert spec == generate_spec(6, 1.0, 0.5, 0.1, seed=3)


def test_spec_keeps_given_coefficients():
    base = generate_spec(3, *WEAK_EPS, seed=0, targets=(2,))
    data = base.to_dict()
    data["a"] = [0.0, 0.0, 0.0]
    spec = spec_from_dict(data)
    assert spec.a == (0.0, 0.0, 0.0)
    assert spec.b == base.b


@pytest.mark.parametrize(
    "data",
    [
        {"eps": [1.0, 0.5, 0.1]},
        {"M": 4, "eps": [1.0, 0.5]},
        {"M": 4, "eps": [1.0, 0.5, 0.1], "mask": "sometimes"},
        {"M": 3, "eps": [1.0, 0.5, 0.1], "a": [0.1], "b": [0, 0, 0], "c": [0]},
        [1, 2, 3],
    ],
)
def test_malformed_spec_is_input_format_error(data):
    with pytest.raises(InputFormatError):
        spec_from_dict(data, "model.json")


def test_unreadable_spec_file(tmp_path):
    path = tmp_path / "model.json"
    path.write_text("[")
    with pytest.raises(InputFormatError, match="model.json"):
        load_spec(path)


def test_spec_model_is_frozen(weak_spec):
    with pytest.raises(Exception):
        weak_spec.seed = 3
    assert isinstance(weak_spec, XorModelSpec)


def test_masked_spec_rejects_forbidden_coefficients():
    data = generate_spec(8, *STRONG_EPS, seed=0, mask=MaskPolicy.EXACTLY_ONE_TARGET).to_dict()
    data["b"] = [0.5] * 28
    with pytest.raises(InputFormatError, match="exactly_one_target"):
        spec_from_dict(data, "model.json")


def test_masked_spec_accepts_its_own_coefficients(strong_spec):
    assert spec_from_dict(strong_spec.to_dict()) == strong_spec


def test_zero_coupling_is_uniform():
    dist = build_distribution(generate_spec(6, 0.0, 0.0, 0.0, seed=4))
    assert np.allclose(dist.probs, 1.0 / 64)


def test_linear_term_sets_odds_of_one_bit():
    t = 0.7
    spec = XorModelSpec(M=3, eps=(1.0, 0.0, 0.0), a=(t, 0.0, 0.0), b=(0.0,) * 3, c=(0.0,), targets=(2,))
    first = marginalize(build_distribution(spec), ["s0"]).probs
    assert first[1] / first[0] == pytest.approx(math.exp(t))


def test_pair_interactions_are_invariant_under_global_bit_flip():
    # Linear and triple terms change under a global flip; pairwise XOR does not.
    dist = build_distribution(generate_spec(6, 0.0, 1.0, 0.0, seed=8))
    flat = np.ravel(dist.probs)
    assert np.allclose(flat, flat[::-1])
