import cmath
import math

import numpy as np
import pytest

from clock_visibility.errors import StructuralError, ValidationError
from clock_visibility.interferometer import (
    ArmConfig,
    ClockSpec,
    VisibilityResult,
    detection_probability,
    extended_initial_state,
    noiseless_overlap,
    noiseless_visibility,
    overlap_visibility,
    proper_time_difference,
    scan_probabilities,
    visibility_from_scan,
)


def test_clock_spec_defaults():
    clock = ClockSpec()
    assert clock.delta_e == 1.0
    assert clock.c0 == pytest.approx(1 / math.sqrt(2))
    assert clock.is_balanced()


def test_clock_spec_balanced_constructor():
    clock = ClockSpec.balanced(2.5, e0=-1.0)
    assert clock.e0 == -1.0
    assert clock.e1 == 1.5
    assert clock.delta_e == pytest.approx(2.5)


def test_clock_spec_rejects_unnormalized():
    with pytest.raises(ValidationError):
        ClockSpec(c0=0.9, c1=0.9)


def test_clock_spec_rejects_inverted_levels():
    with pytest.raises(ValidationError):
        ClockSpec(e0=1.0, e1=0.0)


def test_arm_config_rejects_negative_time():
    with pytest.raises(ValidationError):
        ArmConfig(tau=-0.1)


def test_visibility_result_consistency_checked():
    with pytest.raises(StructuralError):
        VisibilityResult(kappa=0.5 + 0.0j, v=0.9, upsilon=0.0)


def test_visibility_result_from_kappa():
    res = VisibilityResult.from_kappa(0.3 + 0.4j)
    assert res.v == pytest.approx(0.5)
    assert res.upsilon == pytest.approx(math.atan2(0.4, 0.3))


def test_visibility_result_rejects_v_above_one():
    with pytest.raises(StructuralError):
        VisibilityResult.from_kappa(1.5 + 0.0j)


def test_extended_initial_state_layout():
    clock = ClockSpec()
    state = extended_initial_state(clock, env_dim=3)
    assert state.shape == (6,)
    assert state[0] == pytest.approx(clock.c0)
    assert state[3] == pytest.approx(clock.c1)
    assert np.count_nonzero(state) == 2


def test_overlap_visibility_identical_states():
    state = np.array([1.0, 0.0, 0.0], dtype=complex)
    res = overlap_visibility(state, state)
    assert res.v == pytest.approx(1.0)
    assert res.upsilon == pytest.approx(0.0)


def test_overlap_visibility_rejects_unnormalized():
    with pytest.raises(StructuralError):
        overlap_visibility(np.array([2.0, 0.0]), np.array([1.0, 0.0]))


def test_detection_probability_formula():
    res = VisibilityResult.from_kappa(0.8525 * cmath.exp(0.3j))
    p_plus = detection_probability(res, delta_phi=0.2, chi=0.1)
    expected = 0.5 * (1 + 0.8525 * math.sin(0.2 + 0.1 + 0.3))
    assert p_plus == pytest.approx(expected, abs=1e-15)


def test_detection_probability_known_value():
    # v = 0.8525 at peak: P+ = (1 + 0.8525) / 2
    res = VisibilityResult.from_kappa(0.8525 + 0.0j)
    p = detection_probability(res, delta_phi=0.0, chi=math.pi / 2)
    assert p == pytest.approx(0.92625, abs=1e-12)


def test_detection_ports_sum_to_one():
    res = VisibilityResult.from_kappa(0.6 * cmath.exp(1.1j))
    for chi in np.linspace(0.0, 2 * math.pi, 17):
        p_plus = detection_probability(res, 0.3, chi, sign=+1)
        p_minus = detection_probability(res, 0.3, chi, sign=-1)
        assert p_plus + p_minus == pytest.approx(1.0, abs=1e-15)


def fringe_pairs(grid):
    return [(float(chi), 0.5 * (1 + math.sin(chi))) for chi in grid]


def test_scan_recovers_visibility():
    for v, phase in [(0.8525, 0.0), (0.31, 1.2), (1.0, -0.7), (0.8775825618903725, 0.4)]:
        res = VisibilityResult.from_kappa(v * cmath.exp(1j * phase))
        pairs = scan_probabilities(res)
        assert len(pairs) == 3601
        assert visibility_from_scan(pairs) == pytest.approx(v, abs=1e-6)


def test_scan_of_dead_fringe_is_zero():
    res = VisibilityResult.from_kappa(0.0j)
    pairs = scan_probabilities(res)
    assert np.allclose([p for _, p in pairs], 0.5)
    assert visibility_from_scan(pairs) == 0.0


def test_scan_validation_rejects_empty():
    with pytest.raises(ValidationError):
        visibility_from_scan([])


def test_scan_validation_rejects_single_point():
    with pytest.raises(ValidationError):
        visibility_from_scan([(0.0, 0.5)])


def test_scan_validation_rejects_bare_probabilities():
    # the scan must carry its chi grid, not just probability values
    with pytest.raises(ValidationError):
        visibility_from_scan(np.full(3601, 0.5))


def test_scan_validation_rejects_coarse_grid():
    # 100 points over 2 pi is far coarser than the 0.1 degree ceiling
    with pytest.raises(ValidationError):
        visibility_from_scan(fringe_pairs(np.linspace(0.0, 2 * math.pi, 100)))


def test_scan_validation_rejects_short_span():
    # fine step but covers only half a period
    with pytest.raises(ValidationError):
        visibility_from_scan(fringe_pairs(np.linspace(0.0, math.pi, 1801)))


def test_scan_validation_rejects_non_uniform_grid():
    grid = np.linspace(0.0, 2 * math.pi, 3601)
    grid[1800] += 2e-4
    with pytest.raises(ValidationError):
        visibility_from_scan(fringe_pairs(grid))


def test_scan_validation_rejects_out_of_range_probability():
    pairs = fringe_pairs(np.linspace(0.0, 2 * math.pi, 3601))
    pairs[7] = (pairs[7][0], 1.2)
    with pytest.raises(ValidationError):
        visibility_from_scan(pairs)


def test_proper_time_difference_example():
    dt = proper_time_difference(9.81, 1.0, 20.0, 2.998e8)
    assert dt == pytest.approx(2.182909575919192e-15, rel=1e-12)


def test_proper_time_difference_scales_linearly():
    base = proper_time_difference(9.81, 1.0, 20.0, 2.998e8)
    assert proper_time_difference(9.81, 2.0, 20.0, 2.998e8) == pytest.approx(2 * base)
    assert proper_time_difference(9.81, 1.0, 40.0, 2.998e8) == pytest.approx(2 * base)


def test_proper_time_difference_rejects_bad_c():
    with pytest.raises(ValidationError):
        proper_time_difference(9.81, 1.0, 20.0, 0.0)


def test_noiseless_visibility_examples():
    clock = ClockSpec()
    assert noiseless_visibility(clock, 0.0) == pytest.approx(1.0)
    assert noiseless_visibility(clock, 1.0) == pytest.approx(0.8775825618903725, abs=1e-12)
    assert noiseless_visibility(ClockSpec.balanced(math.pi), 1.0) == pytest.approx(0.0, abs=1e-12)


def test_noiseless_visibility_is_cosine():
    clock = ClockSpec.balanced(1.7)
    for dtau in np.linspace(0.0, 10.0, 23):
        assert noiseless_visibility(clock, dtau) == pytest.approx(
            abs(math.cos(1.7 * dtau / 2)), abs=1e-12
        )


def test_noiseless_periodicity():
    clock = ClockSpec()
    period = 2 * math.pi / clock.delta_e
    for dtau in (0.3, 1.0, 2.5):
        assert noiseless_visibility(clock, dtau) == pytest.approx(
            noiseless_visibility(clock, dtau + period), abs=1e-12
        )


def test_noiseless_even_in_delta_tau():
    clock = ClockSpec()
    for dtau in (0.4, 1.3, 5.0):
        assert noiseless_visibility(clock, dtau) == pytest.approx(
            noiseless_visibility(clock, -dtau), abs=1e-12
        )


def test_noiseless_overlap_invariant_under_energy_shift():
    # adding a constant to both levels changes only the overall phase
    a = noiseless_overlap(ClockSpec(e0=0.0, e1=1.0), 0.9)
    b = noiseless_overlap(ClockSpec(e0=5.0, e1=6.0), 0.9)
    assert abs(a) == pytest.approx(abs(b), abs=1e-12)
