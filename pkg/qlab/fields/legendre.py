# -*- coding: utf-8 -*-
# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

'''
Orthonormal associated Legendre functions.

P_l^m here carries the Condon-Shortley phase and the normalization that makes
Y_l^m(theta, phi) = P_l^m(cos theta) exp(i m phi) orthonormal for the surface measure of
S^2. They are produced one order m at a time by the standard three-term recurrence in l,
which stays stable for the degrees used here (l <= 256).
'''

from __future__ import annotations

# System imports
import logging
import math

# Third-party imports
import numpy as np

# Local imports
from qlab.errors import PreconditionError


_logger = logging.getLogger(__name__)


def sectoral_values(order: int, x: np.ndarray) -> np.ndarray:
    '''P_m^m(x) for order m >= 0.'''
    sin_theta = np.sqrt(np.clip(1.0 - x * x, 0.0, None))
    values = np.full_like(x, 1.0 / math.sqrt(4.0 * math.pi), dtype=float)
    for m in range(1, order + 1):
        values = -math.sqrt((2 * m + 1) / (2.0 * m)) * sin_theta * values
    return values


def legendre_column(order: int, max_degree: int, x: np.ndarray) -> np.ndarray:
    '''
    P_l^order(x) for l = |order| .. max_degree, as an array of shape
    (max_degree - |order| + 1, len(x)). Negative orders use P_l^{-m} = (-1)^m P_l^m.
    '''
    m = abs(order)
    if max_degree < m:
        raise PreconditionError(f'max_degree {max_degree} below order {order}')
    x = np.asarray(x, dtype=float)
    column = np.empty((max_degree - m + 1, x.shape[0]), dtype=float)
    column[0] = sectoral_values(m, x)
    if max_degree > m:
        column[1] = math.sqrt(2 * m + 3) * x * column[0]

    previous_a = math.sqrt(2 * m + 3)
    for ell in range(m + 2, max_degree + 1):
        a = math.sqrt((4.0 * ell * ell - 1.0) / (ell * ell - m * m))
        i = ell - m
        column[i] = a * (x * column[i - 1] - column[i - 2] / previous_a)
        previous_a = a

    if order < 0 and m % 2 == 1:
        column = -column
    return column
