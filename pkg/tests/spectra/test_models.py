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
from qlab.errors import ModelMismatchError, PreconditionError
from qlab.spectra import Geometry, Limits, MeasureConvention, SpectralModel


@pytest.mark.parametrize('geometry,dimension', [
    (Geometry.TORUS, 1),
    (Geometry.TORUS, 7),
    (Geometry.SPHERE, 3),
])
def test_unsupported_models(geometry: Geometry, dimension: int) -> None:
    with pytest.raises(PreconditionError):
        SpectralModel(geometry, dimension)


def test_measure_conventions(t2: SpectralModel, s2: SpectralModel) -> None:
    assert t2.measure_convention is MeasureConvention.PROBABILITY
    assert t2.total_measure == 1.0
    assert s2.measure_convention is MeasureConvention.SURFACE
    assert s2.total_measure == pytest.approx(4.0 * math.pi)
    assert str(t2) == 'T^2'
    assert str(s2) == 'S^2'


def test_limits_do_not_take_part_in_equality() -> None:
    assert SpectralModel.torus(3, Limits(mode_cap=10)) == SpectralModel.torus(3)
    assert SpectralModel.torus(3) != SpectralModel.torus(4)
    assert SpectralModel.torus(2) != SpectralModel.sphere()


@pytest.mark.parametrize('values', [
    {'mode_cap': 0},
    {'oversampling': -1},
    {'sphere_degree_cap': 1000},
])
def test_invalid_limits(values: dict) -> None:
    with pytest.raises(PreconditionError):
        Limits(**values)


def test_limits_from_mapping() -> None:
    limits = Limits.from_mapping({'mode_cap': '50', 'oversampling': 2})
    assert limits.mode_cap == 50
    assert limits.oversampling == 2
    assert limits.grid_point_cap == Limits().grid_point_cap


def test_eigenvalues_and_degrees(t3: SpectralModel, s2: SpectralModel) -> None:
    labels = np.array([[1, -2, 3], [0, 0, 0]])
    assert t3.eigenvalues(labels).tolist() == [14, 0]
    assert t3.degrees(labels).tolist() == [3, 0]

    harmonics = np.array([[3, -2], [5, 5]])
    assert s2.eigenvalues(harmonics).tolist() == [12, 30]
    assert s2.degrees(harmonics).tolist() == [3, 5]


def test_check_labels(t2: SpectralModel, s2: SpectralModel) -> None:
    assert t2.check_labels(np.array([3, 4])).shape == (1, 2)
    with pytest.raises(ModelMismatchError):
        t2.check_labels(np.array([[1, 2, 3]]))
    with pytest.raises(ModelMismatchError):
        s2.check_labels(np.array([[-1, 0]]))
