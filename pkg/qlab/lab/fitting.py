# -*- coding: utf-8 -*-
# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from __future__ import annotations

# System imports
import logging
from dataclasses import dataclass
from typing import Iterable, Tuple, Union

# Third-party imports
import numpy as np

# Local imports
from qlab.errors import DegenerateFitError
from qlab.lab.config import LogCorrection


_logger = logging.getLogger(__name__)

_LOG_POWERS = {
    LogCorrection.NONE: 0.0,
    LogCorrection.HALF_LOG: 0.5,
    LogCorrection.THREE_HALF_LOG: 1.5,
}


@dataclass(frozen=True)
class FitResult:
    '''Least-squares line through (ln x, ln y); the residual is measured in log space.'''

    slope: float
    intercept: float
    max_abs_residual: float
    points_used: int


def fit_exponent(
    points: Iterable[Tuple[float, float]],
    log_correction: Union[LogCorrection, str] = LogCorrection.NONE,
) -> FitResult:
    '''
    Fits y ~ C x^slope. With a log correction, y is first divided by log(x)^(1/2) or
    log(x)^(3/2), which then needs every x > 1.
    '''
    correction = LogCorrection(log_correction)
    data = np.asarray(list(points), dtype=float)
    if data.ndim != 2 or data.shape[0] < 3 or data.shape[1] != 2:
        raise DegenerateFitError(f'a fit needs at least 3 (x, y) points, got {len(data)}')
    x, y = data[:, 0], data[:, 1]
    if not np.all(np.isfinite(data)):
        raise DegenerateFitError('fit points must be finite')
    if np.any(x <= 0) or np.any(y <= 0):
        raise DegenerateFitError('fit points must be positive')
    if np.any(np.diff(x) <= 0):
        raise DegenerateFitError('fit abscissae must be strictly increasing')

    power = _LOG_POWERS[correction]
    if power:
        if np.any(x <= 1):
            raise DegenerateFitError(f'{correction.value} correction needs every x > 1')
        y = y / np.log(x) ** power

    log_x, log_y = np.log(x), np.log(y)
    design = np.column_stack([log_x, np.ones_like(log_x)])
    (slope, intercept), _, _, _ = np.linalg.lstsq(design, log_y, rcond=None)
    residuals = log_y - (slope * log_x + intercept)
    result = FitResult(
        slope=float(slope),
        intercept=float(intercept),
        max_abs_residual=float(np.max(np.abs(residuals))),
        points_used=int(x.size),
    )
    _logger.debug('Fitted slope %.6g over %d points (%s)', result.slope, result.points_used,
                  correction.value)
    return result
