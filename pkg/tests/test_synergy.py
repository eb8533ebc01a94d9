"""Unit tests for subset families, I^(k) profiles and feature selection."""

import math

import numpy as np
import pytest

from pid_truncation.core.exceptions import ArgumentError
from pid_truncation.distributions import DiscreteJointDistribution, rename, with_log_base
from pid_truncation.experiments.config import WEAK_EPS
from pid_truncation.information import SourceSubset, mutual_information
from pid_truncation.models import generate_spec, model_distribution
from pid_truncation.synergy import (
    enumerate_family,
    i_k,
    i_k_from_marginals,
    i_k_profile,
    k_marginals,
    select_features,
)
from pid_truncation.synergy.family import LARGE_K, MAX_FEATURES_FOR_LARGE_K
from pid_truncation.synergy.truncation import family_table

LN2 = math.log(2.0)


def test_family_is_lexicographic():
    family = enumerate_family(["A", "B", "C"], 2)
    assert [s.members for s in family] == [("A", "B"), ("A", "C"), ("B", "C")]
    assert len(enumerate_family(["A", "B", "C", "D", "E"], 3)) == 10


def test_family_rejects_out_of_range_k():
    with pytest.raises(ArgumentError):
        enumerate_family(["A", "B"], 0)
    with pytest.raises(ArgumentError):
        enumerate_family(["A", "B"], 3)


def test_family_rejects_duplicates():
    with pytest.raises(ArgumentError, match="Duplicate"):
        enumerate_family(["A", "A"], 1)


def test_family_refuses_combinatorial_blowup():
    names = [f"X{i}" for i in range(MAX_FEATURES_FOR_LARGE_K + 1)]
    with pytest.raises(ArgumentError, match="Refusing"):
        enumerate_family(names, LARGE_K + 1)
    assert len(enumerate_family(names, LARGE_K)) == math.comb(len(names), LARGE_K)


def test_xor_profile(xor_dist):
    assert i_k(xor_dist, "Y", ["X1", "X2"], 1) == pytest.approx(0.0, abs=1e-12)
    assert i_k(xor_dist, "Y", ["X1", "X2"], 2) == pytest.approx(LN2, abs=1e-12)

    profile = i_k_profile(xor_dist, "Y", ["X1", "X2"])
    assert profile.gaps == pytest.approx((LN2, 0.0), abs=1e-12)
    assert profile.ratios == pytest.approx((0.0, 1.0), abs=1e-12)


def test_xor_profile_in_bits(xor_dist):
    profile = i_k_profile(with_log_base(xor_dist, "bits"), "Y", ["X1", "X2"])
    assert profile.values == pytest.approx((0.0, 1.0), abs=1e-12)
    assert profile.to_dict()["units"] == "bits"


def test_copy_profile_is_flat(copy_dist):
    profile = i_k_profile(copy_dist, "Y", ["X1", "X2"])
    assert profile.values == pytest.approx((LN2, LN2), abs=1e-12)
    assert profile.gaps == pytest.approx((0.0, 0.0), abs=1e-12)


def test_first_order_is_max_single_feature_information(weak_model):
    dist = weak_model.distribution
    features = [f.name for f in weak_model.features]
    best_single = max(mutual_information(dist, f, "Y") for f in features)
    # Per-outcome maxima can only beat the best single-feature MI
    assert i_k(dist, "Y", features, 1) >= best_single - 1e-12


def test_full_order_equals_mutual_information(weak_model):
    dist = weak_model.distribution
    features = [f.name for f in weak_model.features]
    assert i_k(dist, "Y", features, len(features)) == pytest.approx(
        mutual_information(dist, features, "Y"), abs=1e-12
    )


def test_profile_is_non_decreasing_and_normalized(weak_model):
    profile = i_k_profile(weak_model.distribution, weak_model.target, weak_model.features)
    assert profile.is_complete
    assert np.all(np.diff(profile.values) >= -1e-12)
    assert profile.ratios[-1] == pytest.approx(1.0, abs=1e-12)
    assert profile.gaps[-1] == 0.0
    assert profile.values[-1] == pytest.approx(profile.total_mi, abs=1e-10)


def test_partial_profile_has_no_gaps(weak_model):
    profile = i_k_profile(weak_model.distribution, weak_model.target, weak_model.features, k_max=2)
    assert profile.k_max == 2
    assert not profile.is_complete
    assert profile.gaps == ()
    assert profile.ratios[1] == pytest.approx(profile.values[1] / profile.total_mi)
    with pytest.raises(ArgumentError):
        profile.value(3)


def test_profile_rejects_bad_k_max(xor_dist):
    with pytest.raises(ArgumentError):
        i_k_profile(xor_dist, "Y", ["X1", "X2"], k_max=3)


def test_zero_information_ratios_are_nan():
    dist = DiscreteJointDistribution.from_table(["X1", "Y"], np.full((2, 2), 0.25))
    profile = i_k_profile(dist, "Y", ["X1"])
    assert profile.values == (0.0,)
    assert math.isnan(profile.ratios[0])


def test_target_among_features_is_rejected(xor_dist):
    with pytest.raises(ArgumentError, match="among the features"):
        i_k(xor_dist, "Y", ["X1", "Y"], 1)


def test_i_k_depends_only_on_k_marginals(xor_dist):
    # Uniform on three bits has the same pairwise marginals as the XOR table
    uniform = DiscreteJointDistribution.from_table(["X1", "X2", "Y"], np.full((2, 2, 2), 0.125))
    xor_marginals = k_marginals(xor_dist, "Y", ["X1", "X2"], 1)
    uniform_marginals = k_marginals(uniform, "Y", ["X1", "X2"], 1)
    for subset in xor_marginals:
        assert np.allclose(xor_marginals[subset].probs, uniform_marginals[subset].probs)
    assert i_k_from_marginals(xor_marginals, "Y") == i_k_from_marginals(uniform_marginals, "Y")
    assert i_k(xor_dist, "Y", ["X1", "X2"], 2) != pytest.approx(i_k(uniform, "Y", ["X1", "X2"], 2))


def test_marginals_keep_k_plus_one_arguments(weak_model):
    marginals = k_marginals(weak_model.distribution, "Y", weak_model.features, 2)
    assert len(marginals) == 10
    for subset, marginal in marginals.items():
        assert set(marginal.names) == set(subset.members) | {"Y"}


def test_family_table_refuses_mixed_units(xor_dist):
    marginals = k_marginals(xor_dist, "Y", ["X1", "X2"], 1)
    first, second = list(marginals)
    mixed = {first: marginals[first], second: with_log_base(marginals[second], "bits")}
    with pytest.raises(ArgumentError, match="mix units"):
        family_table(mixed, "Y")


def test_select_xor_pair(xor_with_noise_dist):
    report = select_features(xor_with_noise_dist, "Y", ["X1", "X2", "X3"], 2)
    assert report.relevant == ("X1", "X2")
    assert report.irrelevant == ("X3",)
    assert report.i_k_full == pytest.approx(LN2, abs=1e-12)
    assert report.i_k_selected == pytest.approx(LN2, abs=1e-12)
    assert report.per_outcome_argmax["0"] == (SourceSubset(("X1", "X2")),)


def test_select_keeps_ties(copy_dist):
    # Only X1 informs Y at k=1
    report = select_features(copy_dist, "Y", ["X1", "X2"], 1)
    assert report.relevant == ("X1",)
    # At k=2 the only subset is {X1, X2}
    report = select_features(copy_dist, "Y", ["X1", "X2"], 2)
    assert report.relevant == ("X1", "X2")


def test_select_with_pruning_drops_redundant_member(copy_dist):
    report = select_features(copy_dist, "Y", ["X1", "X2"], 1, prune=True)
    assert report.pruned == ()
    duplicate = np.zeros((2, 2, 2))
    duplicate[0, 0, 0] = duplicate[1, 1, 1] = 0.5
    dist = DiscreteJointDistribution.from_table(["X1", "X2", "Y"], duplicate)
    # Both copies tie at k=1; pruning removes one of them
    report = select_features(dist, "Y", ["X1", "X2"], 1, prune=True)
    assert len(report.relevant) == 1
    assert len(report.pruned) == 1
    assert report.i_k_selected == pytest.approx(LN2, abs=1e-12)


def test_selection_report_serializes(xor_with_noise_dist):
    data = select_features(xor_with_noise_dist, "Y", ["X1", "X2", "X3"], 2).to_dict()
    assert data["relevant"] == ["X1", "X2"]
    assert data["units"] == "nats"
    assert data["argmax"]["1"] == [["X1", "X2"]]


def test_negative_tolerance_is_rejected(xor_dist):
    with pytest.raises(ArgumentError):
        select_features(xor_dist, "Y", ["X1", "X2"], 1, tie_tolerance=-1.0)


def test_profile_serializes(xor_dist):
    data = i_k_profile(xor_dist, "Y", ["X1", "X2"]).to_dict()
    assert data["k"] == 2
    assert data["I_k"] == pytest.approx([0.0, LN2])
    assert data["delta"] == pytest.approx([LN2, 0.0])


def test_selection_follows_feature_relabeling(weak_model):
    mapping = {"X1": "F3", "X2": "F5", "X3": "F1", "X4": "F2", "X5": "F4"}
    renamed = rename(weak_model.distribution, mapping)
    for k in (1, 2, 3):
        report = select_features(weak_model.distribution, "Y", ["X1", "X2", "X3", "X4", "X5"], k)
        relabeled = select_features(renamed, "Y", ["F4", "F2", "F1", "F5", "F3"], k)
        assert set(relabeled.relevant) == {mapping[f] for f in report.relevant}
        assert relabeled.i_k_full == pytest.approx(report.i_k_full, abs=1e-14)


@pytest.mark.parametrize("seed", range(10))
def test_weak_coupling_relevant_features_are_needed(seed):
    model = model_distribution(generate_spec(8, *WEAK_EPS, seed=seed))
    names = [f.name for f in model.features]
    report = select_features(model.distribution, "Y", names, 2)
    assert report.relevant
    for feature in report.relevant:
        remaining = [f for f in names if f != feature]
        assert i_k(model.distribution, "Y", remaining, 2) < report.i_k_full - 1e-12
