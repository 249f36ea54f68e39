import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import make_population
from drmcmo.core import ConfigurationError, ContractViolation
from drmcmo.drm import (
    DetectionRegions,
    DrmState,
    alpha_value,
    compute_centers,
    in_detection_region,
    max_radius,
    region_mask,
    relax_population,
    update_alpha,
    update_radius,
)


def active_state(k, k_s=1, K=1000, schedule="sigmoid", r_max=1.0):
    return DrmState(K=K, schedule=schedule, k=k, k_s=k_s, r_max=r_max)


def test_sigmoid_endpoints_and_midpoint():
    assert update_alpha(active_state(k=1)) == pytest.approx(0.0024726, abs=1e-6)
    assert update_alpha(active_state(k=1000)) == pytest.approx(0.9820138, abs=1e-6)
    assert alpha_value(60, 0, 100) == pytest.approx(0.5, abs=1e-15)
    assert alpha_value(0, 0, 100) == pytest.approx(1 / (1 + math.exp(6)))


def test_linear_endpoints():
    assert update_alpha(active_state(k=1, schedule="linear")) == 0.0
    assert update_alpha(active_state(k=1000, schedule="linear")) == 1.0


def test_alpha_errors():
    with pytest.raises(ConfigurationError):
        update_alpha(active_state(k=5, k_s=5, K=5))
    with pytest.raises(ContractViolation):
        update_alpha(DrmState(K=10))
    with pytest.raises(ConfigurationError):
        DrmState(K=10, schedule="cosine")


@pytest.mark.parametrize("schedule", ["sigmoid", "linear"])
def test_schedule_monotone_and_bounded(schedule):
    prev_a, prev_r = -1.0, math.inf
    for k in range(7, 501):
        s = active_state(k=k, k_s=7, K=500, schedule=schedule, r_max=2.5)
        a = update_alpha(s)
        r = update_radius(s)
        assert a >= prev_a and r <= prev_r
        if schedule == "sigmoid":
            assert 0.0 < a < 1.0
        prev_a, prev_r = a, r


@pytest.mark.parametrize("alpha, r_max, r", [(0.0, 2.0, 2.0), (0.5, 2.0, 1.0), (0.9820138, 1.0, 0.0179862)])
def test_update_radius_examples(alpha, r_max, r):
    s = DrmState(K=10, k=1, k_s=1, alpha=alpha, r_max=r_max)
    assert update_radius(s) == pytest.approx(r, abs=1e-12)
    assert s.r == pytest.approx(r, abs=1e-12)


def test_negative_r_max_rejected():
    with pytest.raises(ContractViolation):
        update_radius(DrmState(K=10, k=1, k_s=1, r_max=-1.0))


def test_max_radius_floor():
    assert max_radius(np.array([[3.0, 4.0], [5.0, 6.0]])) == 5.0
    assert max_radius(np.zeros((3, 2))) == 1e-12


def test_compute_centers_examples():
    arch = make_population([[0.3, 0.4], [0.1, 0.9]])
    s = DrmState(K=10, k=1, k_s=1, alpha=0.25, r=0.8)
    regions = compute_centers(arch, s)
    assert np.allclose(regions.centers, [[0.5, 0.6], [0.3, 1.1]]) and regions.radius == 0.8
    s.alpha = 0.0
    assert np.array_equal(compute_centers(arch, s).centers, arch.F)
    s.alpha = 0.25
    assert np.array_equal(compute_centers(arch, s, shift=False).centers, arch.F)


def test_compute_centers_errors():
    s = DrmState(K=10, k=1, k_s=1, alpha=0.1, r=0.5)
    with pytest.raises(ContractViolation):
        compute_centers(make_population(np.zeros((0, 2))), s)
    with pytest.raises(ContractViolation):
        compute_centers(make_population([[0, 1]], [1]), s)


@settings(max_examples=200, deadline=None)
@given(st.floats(0, 1), st.floats(0, 5), st.lists(st.floats(0, 10), min_size=2, max_size=2))
def test_centers_shift_backward(alpha, r, f):
    arch = make_population([f])
    c = compute_centers(arch, DrmState(K=10, k=1, k_s=1, alpha=alpha, r=r)).centers[0]
    assert np.all(c >= arch.F[0])


def test_membership_examples():
    regions = DetectionRegions(np.array([[0.5, 0.5]]), 0.2)
    assert in_detection_region(np.array([0.6, 0.6]), regions)
    assert not in_detection_region(np.array([0.8, 0.8]), regions)
    assert not in_detection_region(np.array([0.5, 0.75]), DetectionRegions(np.array([[0.5, 0.5]]), 0.25))
    assert not in_detection_region(np.array([0.5, 0.5]), DetectionRegions(np.zeros((0, 2)), 1.0))
    with pytest.raises(ContractViolation):
        region_mask(np.array([[0.5, 0.5, 0.5]]), regions)


def test_relax_population_examples():
    pop = make_population([[0.55, 0.5], [3.0, 3.0], [4.0, 4.0]], [2, 0, 1])
    before = (pop.X.copy(), pop.F.copy(), pop.bits.copy())
    out = relax_population(pop, DetectionRegions(np.array([[0.5, 0.5]]), 0.2))
    assert out is pop
    assert pop.effective_cv.tolist() == [0, 0, 1]
    assert pop.cv.tolist() == [2, 0, 1]
    for a, b in zip(before, (pop.X, pop.F, pop.bits)):
        assert np.array_equal(a, b)


@settings(max_examples=200, deadline=None)
@given(
    st.lists(st.tuples(st.floats(0, 2), st.floats(0, 2)), min_size=1, max_size=6),
    st.tuples(st.floats(0, 2), st.floats(0, 2)),
    st.floats(0, 2),
    st.floats(0, 2),
)
def test_relaxation_monotone_in_radius(centers, f, r, extra):
    C = np.array(centers)
    small = in_detection_region(np.array(f), DetectionRegions(C, r))
    large = in_detection_region(np.array(f), DetectionRegions(C, r + extra))
    assert large or not small
