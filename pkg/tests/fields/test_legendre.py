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
from scipy.special import roots_legendre

# Local imports
from qlab.errors import PreconditionError
from qlab.fields.legendre import legendre_column


@pytest.mark.parametrize('order', [0, 1, 3, -2, 10])
def test_orthonormality(order: int) -> None:
    x, w = roots_legendre(40)
    column = legendre_column(order, 30, x)
    gram = 2.0 * math.pi * (column * w) @ column.T
    assert np.allclose(gram, np.eye(column.shape[0]), atol=1e-12)


def test_low_degrees() -> None:
    x = np.linspace(-1.0, 1.0, 7)
    sin_theta = np.sqrt(1.0 - x * x)
    zonal = legendre_column(0, 2, x)
    assert np.allclose(zonal[0], 1.0 / math.sqrt(4.0 * math.pi))
    assert np.allclose(zonal[1], math.sqrt(3.0 / (4.0 * math.pi)) * x)
    # Condon-Shortley phase.
    assert np.allclose(legendre_column(1, 1, x)[0], -math.sqrt(3.0 / (8.0 * math.pi)) * sin_theta)
    assert np.allclose(zonal[2],
                       math.sqrt(5.0 / (4.0 * math.pi)) * (3.0 * x * x - 1.0) / 2.0)


def test_negative_orders() -> None:
    x = np.linspace(-0.9, 0.9, 5)
    assert np.allclose(legendre_column(-1, 4, x), -legendre_column(1, 4, x))
    assert np.allclose(legendre_column(-2, 4, x), legendre_column(2, 4, x))


def test_invalid_degrees() -> None:
    with pytest.raises(PreconditionError):
        legendre_column(3, 2, np.zeros(3))
