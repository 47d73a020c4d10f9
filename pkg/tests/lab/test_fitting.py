# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from __future__ import annotations

# System imports
import math

# Third-party imports
import pytest

# Local imports
from qlab.errors import DegenerateFitError
from qlab.lab import LogCorrection, fit_exponent


def test_cube_law() -> None:
    result = fit_exponent([(2, 8), (4, 64), (8, 512)])
    assert result.slope == pytest.approx(3.0)
    assert result.max_abs_residual == pytest.approx(0.0, abs=1e-12)
    assert result.points_used == 3
    assert result.intercept == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize('c', [0.01, 1.0, 250.0])
def test_quarter_law(c: float) -> None:
    points = [(x, c * x ** 0.25) for x in (2.0, 4.0, 8.0)]
    result = fit_exponent(points)
    assert result.slope == pytest.approx(0.25)
    assert math.exp(result.intercept) == pytest.approx(c)


def test_log_corrections() -> None:
    mus = [8.0, 16.0, 32.0, 64.0]
    points = [(mu, mu ** 1.5 * math.log(mu) ** 1.5) for mu in mus]
    result = fit_exponent(points, LogCorrection.THREE_HALF_LOG)
    assert result.slope == pytest.approx(1.5, abs=1e-8)
    points = [(mu, math.sqrt(mu * math.log(mu))) for mu in mus]
    assert fit_exponent(points, 'half_log').slope == pytest.approx(0.5, abs=1e-8)
    assert fit_exponent(points).slope > 0.5


@pytest.mark.parametrize('points', [
    [(1.0, 1.0), (2.0, 2.0)],
    [(1.0, 1.0), (2.0, 0.0), (3.0, 3.0)],
    [(1.0, 1.0), (-2.0, 2.0), (3.0, 3.0)],
    [(1.0, 1.0), (3.0, 2.0), (2.0, 3.0)],
    [(1.0, 1.0), (2.0, math.nan), (3.0, 3.0)],
])
def test_degenerate_fits(points: list) -> None:
    with pytest.raises(DegenerateFitError):
        fit_exponent(points)


def test_log_corrections_need_x_above_one() -> None:
    with pytest.raises(DegenerateFitError):
        fit_exponent([(1.0, 1.0), (2.0, 2.0), (3.0, 3.0)], LogCorrection.HALF_LOG)
