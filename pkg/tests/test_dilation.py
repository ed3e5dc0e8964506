from __future__ import annotations

import numpy as np
import pytest

from bloch_synth import (
    AlphaVSource,
    GaugeMismatch,
    InvalidFamilyParameter,
    PathKind,
    PathSpec,
    SingularShrinkStart,
    WGauge,
    dilation_general,
    dilation_tilde,
    family_ellipse,
    family_shrink,
    h_ab_numeric,
    kraus_general,
    kraus_tilde,
    preparation_kick,
    reduced_state,
    rho0,
    rho_of_t,
    shrink_h_ab,
    spectral_init,
    v_arbitrary,
    w_from_rotation,
)
from bloch_synth.dilation import (
    SHRINK_GENERATOR,
    embedding_defect,
    shrink_h_ab_for,
    v_identity,
    w_from_samples,
)
from bloch_synth.linalg import IDENTITY2, PAULI_X, expm_skew
from bloch_synth.path import PathDerivatives
from bloch_synth.verify.testing import assert_close, assert_hermitian, assert_unitary


def _zero(_: float) -> float:
    return 0.0


def shrink_path() -> PathSpec:
    return family_shrink(lambda t: 1 - t * t, 0.9, lambda t: -2 * t)


def rotating_w() -> WGauge:
    return w_from_rotation(
        lambda t: np.array([0.3 * np.sin(t), 0.2 * t, -0.1 * t * t]), label="test"
    )


def constant_w(rng) -> WGauge:
    axis = rng.normal(size=3)
    return w_from_rotation(lambda _: axis, label="constant")


def test_shrink_kraus_pair():
    path = shrink_path()
    t = 0.6
    r = 1 - t * t
    pair = kraus_tilde(path, t)
    assert_close(pair.m0, [[0, 1], [np.sqrt((1 - r) / 2), 0]], 1e-15)
    assert_close(pair.m1, np.sqrt((1 + r) / 2) * np.diag([1, 0]), 1e-15)
    assert_close(pair.apply(rho0(path)), np.diag([(1 + r) / 2, (1 - r) / 2]), 1e-15)


def test_kraus_tilde_on_random_paths(open_path_factory):
    for _ in range(10):
        path = open_path_factory()
        start = rho0(path)
        for t in np.linspace(0, path.tau, 100):
            pair = kraus_tilde(path, t)
            assert pair.completeness_defect() < 1e-12
            assert_close(pair.apply(start), rho_of_t(path, t), 1e-12)


def test_dilation_tilde_on_random_paths(open_path_factory):
    for _ in range(10):
        path = open_path_factory()
        start = rho0(path)
        for t in np.linspace(0, path.tau, 100):
            sample = dilation_tilde(path, t)
            assert sample.unitarity_defect() < 1e-12
            assert embedding_defect(kraus_tilde(path, t), sample.u_ab) < 1e-13
            assert_close(reduced_state(sample.u_ab, start), rho_of_t(path, t), 1e-12)


def test_trivial_gauges_reduce_to_references(open_path_factory):
    path = open_path_factory()
    w, v = WGauge.identity(), v_identity()
    reference = kraus_tilde(path, 0.4)
    pair = kraus_general(path, w, v, 0.4)
    assert_close(pair.m0, reference.m0, 1e-15)
    assert_close(pair.m1, reference.m1, 1e-15)
    assert_close(
        dilation_general(path, w, v, 0.4).u_ab, dilation_tilde(path, 0.4).u_ab, 1e-15
    )


def test_constant_w_keeps_the_channel(open_path_factory, rng):
    path = open_path_factory()
    pair = kraus_general(path, constant_w(rng), v_identity(), 0.5)
    assert_close(pair.apply(rho0(path)), rho_of_t(path, 0.5), 1e-12)


def test_random_gauges_keep_every_identity(open_path_factory, gauge_factory):
    path = open_path_factory()
    w = rotating_w()
    v = AlphaVSource(spectral_init(path), gauge_factory())
    start = rho0(path)
    for t in np.linspace(0, path.tau, 6):
        pair = kraus_general(path, w, v, t)
        sample = dilation_general(path, w, v, t)
        assert pair.completeness_defect() < 1e-12
        assert_close(pair.apply(start), rho_of_t(path, t), 1e-12)
        assert sample.unitarity_defect() < 1e-12
        assert embedding_defect(pair, sample.u_ab) < 1e-13
        assert_close(reduced_state(sample.u_ab, start), rho_of_t(path, t), 1e-12)


def test_reduced_states_ignore_random_gauge_pairs(
    open_path_factory, gauge_factory, rng
):
    path = open_path_factory()
    init = spectral_init(path)
    start = rho0(path)
    pairs = [(WGauge.identity(), v_identity())] + [
        (constant_w(rng), AlphaVSource(init, gauge_factory())) for _ in range(2)
    ]
    pairs += [(rotating_w(), AlphaVSource(init, gauge_factory())) for _ in range(3)]
    for t in np.linspace(0, path.tau, 25):
        states = [
            reduced_state(dilation_general(path, w, v, t).u_ab, start)
            for w, v in pairs
        ]
        for state in states[1:]:
            assert_close(state, states[0], 1e-12)



def test_v_must_commute_with_a_mixed_start(open_path_factory):
    path = open_path_factory()
    v = v_arbitrary(lambda t: expm_skew(PAULI_X, t))
    with pytest.raises(GaugeMismatch):
        kraus_general(path, WGauge.identity(), v, 0.5)


def test_arbitrary_v_is_allowed_for_a_maximally_mixed_start():
    path = family_ellipse(1.0)
    centered = PathSpec(
        r=lambda t: 0.5 * np.sin(t) ** 2,
        theta=path.theta,
        phi=path.phi,
        tau=path.tau,
    )
    v = v_arbitrary(lambda t: expm_skew(PAULI_X, t))
    pair = kraus_general(centered, WGauge.identity(), v, 1.0)
    assert pair.completeness_defect() < 1e-12
    assert_close(pair.apply(rho0(centered)), rho_of_t(centered, 1.0), 1e-12)


def test_w_must_be_special_unitary():
    with pytest.raises(GaugeMismatch):
        WGauge(lambda _: 1j * IDENTITY2)
    with pytest.raises(GaugeMismatch):
        WGauge(lambda _: 1.01 * IDENTITY2)


def test_w_from_samples_interpolates_the_rotation():
    times = np.linspace(0.0, 1.0, 11)
    table = np.column_stack([times, 0.3 * times, 0 * times, 0 * times])
    w = w_from_samples(table)
    assert_close(w.matrix(0.0), IDENTITY2, 1e-15)
    assert_close(w.matrix(0.55), expm_skew(0.3 * 0.55 * PAULI_X, 1.0), 1e-12)
    with pytest.raises(InvalidFamilyParameter):
        w_from_samples(table[:2])


def test_preparation_kick_of_the_shrink_path():
    kick = preparation_kick(shrink_path(), WGauge.identity(), v_identity())
    expected = [[0, 0, 1, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 1, 0, 0]]
    assert_close(kick, expected, 1e-15)


def test_preparation_kick_preserves_the_start(open_path_factory, gauge_factory):
    for _ in range(3):
        path = open_path_factory()
        v = AlphaVSource(spectral_init(path), gauge_factory())
        kick = preparation_kick(path, rotating_w(), v)
        assert_unitary(kick, 1e-12)
        assert_close(reduced_state(kick, rho0(path)), rho0(path), 1e-12)


def test_shrink_generator_shape():
    assert_hermitian(SHRINK_GENERATOR, 0)
    assert np.all(np.diag(SHRINK_GENERATOR) == 0)


def test_shrink_h_ab_closed_forms():
    assert_close(shrink_h_ab(lambda _: 0.5, 0.3, lambda _: 0.0), np.zeros((4, 4)), 0)
    for t in (0.2, 0.7, 2.5):
        assert_close(
            shrink_h_ab(np.cos, t, lambda s: -np.sin(s)),
            -0.25 * SHRINK_GENERATOR,
            1e-13,
        )


def test_shrink_h_ab_limit_at_the_pole():
    value = shrink_h_ab(np.cos, 0.0, lambda s: -np.sin(s))
    assert_close(value, -0.25 * SHRINK_GENERATOR, 1e-8)


def test_singular_shrink_start():
    with pytest.raises(SingularShrinkStart):
        shrink_h_ab(lambda t: 1 - t, 0.0, lambda _: -1.0)
    path = family_shrink(lambda t: 1 - t, 0.5, lambda _: -1.0)
    with pytest.raises(SingularShrinkStart):
        h_ab_numeric(path, WGauge.identity(), v_identity(), 0.1)


def test_h_ab_numeric_of_static_path():
    path = PathSpec(
        r=lambda _: 0.6,
        theta=lambda _: 0.9,
        phi=lambda _: 0.2,
        tau=1.0,
        derivatives=PathDerivatives(_zero, _zero, _zero),
        kind=PathKind.OPEN,
    )
    value = h_ab_numeric(path, WGauge.identity(), v_identity(), 0.5)
    assert_close(value, np.zeros((4, 4)), 1e-8)


def test_h_ab_numeric_matches_the_shrink_closed_form():
    path = shrink_path()
    for t in np.linspace(0.05, 0.85, 9):
        numeric = h_ab_numeric(path, WGauge.identity(), v_identity(), t)
        assert_close(numeric, shrink_h_ab_for(path, t), 1e-6)


def test_shrink_closed_form_needs_the_polar_axis():
    with pytest.raises(InvalidFamilyParameter):
        shrink_h_ab_for(family_ellipse(1.0), 0.1)
    tilted = family_shrink(lambda t: 1 - t * t, 0.9, lambda t: -2 * t, theta0=0.4)
    with pytest.raises(InvalidFamilyParameter):
        shrink_h_ab_for(tilted, 0.1)


def test_richardson_generator_matches_the_shrink_closed_form():
    path = shrink_path()
    w, v = WGauge.identity(), v_identity()
    for t in np.linspace(0.05, 0.85, 9):
        refined = h_ab_numeric(path, w, v, t, richardson=True)
        assert_hermitian(refined, 1e-14)
        assert_close(refined, shrink_h_ab_for(path, t), 1e-6)
        assert_close(refined, h_ab_numeric(path, w, v, t), 1e-6)
