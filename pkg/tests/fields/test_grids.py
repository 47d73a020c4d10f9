# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from __future__ import annotations

# System imports
import math

# Third-party imports
import numpy as np
import pytest

# Local imports
from qlab.errors import BandwidthError, ModelMismatchError, ResourceError
from qlab.fields import GridField, GridSpec, SpectralField, analyze, grid_lp_norm, synthesize
from qlab.spectra import Limits, SpectralModel, enumerate_modes


def random_field(model: SpectralModel, frequency: float, rng: np.random.Generator) -> SpectralField:
    labels = enumerate_modes(model, frequency).labels
    coeffs = rng.standard_normal(len(labels)) + 1j * rng.standard_normal(len(labels))
    return SpectralField(model, labels, coeffs)


def test_grid_shapes(t2: SpectralModel, t3: SpectralModel, s2: SpectralModel) -> None:
    assert GridSpec(t2, 3).shape == (4, 4)
    assert GridSpec(t3, 2).shape == (3, 3, 3)
    assert GridSpec(s2, 8).shape == (5, 9)
    assert GridSpec(s2, 8).weights.sum() == pytest.approx(4.0 * math.pi)
    assert GridSpec(t3, 4).weights.sum() == pytest.approx(1.0)


def test_grid_limits() -> None:
    with pytest.raises(ResourceError):
        GridSpec(SpectralModel.torus(4), 2)
    with pytest.raises(ResourceError):
        GridSpec(SpectralModel.torus(2, Limits(grid_point_cap=100)), 10)


def test_synthesize_constants(t2: SpectralModel, s2: SpectralModel) -> None:
    samples = synthesize(SpectralField.mode(t2, (0, 0)), GridSpec(t2, 3)).samples
    assert np.allclose(samples, 1.0)
    samples = synthesize(SpectralField.mode(s2, (0, 0)), GridSpec(s2, 4)).samples
    assert np.allclose(samples, 1.0 / math.sqrt(4.0 * math.pi))


def test_synthesize_exponential(t2: SpectralModel) -> None:
    spec = GridSpec(t2, 3)
    samples = synthesize(SpectralField.mode(t2, (1, 0)), spec).samples
    x1 = spec.nodes(0)
    assert np.allclose(x1, [0, math.pi / 2, math.pi, 3 * math.pi / 2])
    assert np.allclose(samples, np.exp(1j * x1)[:, None] * np.ones((1, 4)))


def test_synthesize_checks(t2: SpectralModel, s2: SpectralModel) -> None:
    f = SpectralField.mode(t2, (6, 0))
    with pytest.raises(BandwidthError):
        synthesize(f, GridSpec(t2, 3))
    with pytest.raises(ModelMismatchError):
        synthesize(f, GridSpec(s2, 8))


def test_analyze_cosine(t2: SpectralModel) -> None:
    spec = GridSpec(t2, 4)
    x1 = spec.nodes(0)
    samples = np.cos(x1)[:, None] * np.ones((1, spec.shape[1]))
    f = analyze(GridField(spec, samples.astype(complex)), 1.0).chop(1e-12)
    assert set(f.as_dict()) == {(1, 0), (-1, 0)}
    assert f.coefficient((1, 0)) == pytest.approx(0.5)
    assert f.coefficient((-1, 0)) == pytest.approx(0.5)


def test_analyze_sphere_constant(s2: SpectralModel) -> None:
    spec = GridSpec(s2, 4)
    f = analyze(GridField(spec, np.ones(spec.shape, dtype=complex)), math.sqrt(2)).chop(1e-12)
    assert list(f.as_dict()) == [(0, 0)]
    assert f.coefficient((0, 0)) == pytest.approx(math.sqrt(4.0 * math.pi))


def test_analyze_needs_a_fine_grid(t2: SpectralModel) -> None:
    spec = GridSpec(t2, 3)
    with pytest.raises(BandwidthError):
        analyze(GridField(spec, np.ones(spec.shape, dtype=complex)), 2.0)


@pytest.mark.parametrize('model,frequency,degree', [
    (SpectralModel.torus(2), 6.0, 12),
    (SpectralModel.torus(3), 3.0, 6),
    (SpectralModel.sphere(), math.sqrt(42), 12),
])
def test_round_trip_and_parseval(
    model: SpectralModel,
    frequency: float,
    degree: int,
    rng: np.random.Generator,
) -> None:
    f = random_field(model, frequency, rng)
    g = synthesize(f, GridSpec(model, degree))
    back = analyze(g, frequency)
    assert np.max(np.abs((back - f).coeffs), initial=0.0) <= 1e-10
    assert grid_lp_norm(g, 2) == pytest.approx(math.sqrt(f.energy()), rel=1e-10)


def sparse_random_field(model: SpectralModel, frequency: float,
                        rng: np.random.Generator) -> SpectralField:
    f = random_field(model, frequency, rng)
    return f.restrict(rng.random(len(f)) < 0.5)


@pytest.mark.parametrize('model,frequencies', [
    (SpectralModel.torus(2), [1.0, 2.5, 4.0, 6.0]),
    (SpectralModel.torus(3), [1.0, 1.5, 2.0, 3.0]),
    (SpectralModel.sphere(), [math.sqrt(ell * (ell + 1)) for ell in range(1, 9)]),
])
def test_round_trip_on_many_fields(model: SpectralModel, frequencies: list,
                                   rng: np.random.Generator) -> None:
    for _ in range(67):
        frequency = frequencies[rng.integers(len(frequencies))]
        f = sparse_random_field(model, frequency, rng)
        if model.is_torus:
            degree = 2 * math.ceil(frequency)
        else:
            degree = 2 * round((math.sqrt(1.0 + 4.0 * frequency ** 2) - 1.0) / 2.0)
        g = synthesize(f, GridSpec(model, degree))
        back = analyze(g, frequency)
        assert np.max(np.abs((back - f).coeffs), initial=0.0) <= 1e-10
        assert grid_lp_norm(g, 2) == pytest.approx(math.sqrt(f.energy()), rel=1e-10, abs=1e-12)


def test_grid_products_need_the_same_grid(t2: SpectralModel) -> None:
    a = synthesize(SpectralField.mode(t2, (1, 0)), GridSpec(t2, 3))
    b = synthesize(SpectralField.mode(t2, (1, 0)), GridSpec(t2, 4))
    with pytest.raises(ModelMismatchError):
        a * b
    assert np.allclose((a * a).samples, synthesize(SpectralField.mode(t2, (2, 0)),
                                                   GridSpec(t2, 3)).samples)
