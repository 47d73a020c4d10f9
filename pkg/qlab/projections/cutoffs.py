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

# Third-party imports
import numpy as np

# Local imports
from qlab.errors import PreconditionError


_logger = logging.getLogger(__name__)


def _bump_tail(t: np.ndarray) -> np.ndarray:
    '''exp(-1/t) for t > 0, 0 otherwise (smooth at 0).'''
    positive = t > 0
    safe = np.where(positive, t, 1.0)
    return np.where(positive, np.exp(-1.0 / safe), 0.0)


def smooth_step(s: np.ndarray) -> np.ndarray:
    '''C-infinity step: 1 for s <= 0, 0 for s >= 1, monotone in between.'''
    s = np.asarray(s, dtype=float)
    falling = _bump_tail(1.0 - s)
    return falling / (falling + _bump_tail(s))


@dataclass(frozen=True)
class CutoffProfile:
    '''
    Spectral cutoffs applied to r = frequency / scale.

    psi is 1 for r <= low and 0 for r >= high; rho = 1 - psi. beta is the dyadic
    Littlewood-Paley bump built from the unit step phi (1 below 1, 0 above 2) as
    beta(r) = phi(r) - phi(2r), supported in (1/2, 2), so that the sum over j of
    beta(r / 2^j) is 1 for every r > 0.
    '''

    low: float = 2.0
    high: float = 4.0

    def __post_init__(self) -> None:
        if not 0 < self.low < self.high:
            raise PreconditionError(f'cutoff needs 0 < low < high, got {self.low}, {self.high}')

    def psi(self, r: np.ndarray) -> np.ndarray:
        return smooth_step((np.asarray(r, dtype=float) - self.low) / (self.high - self.low))

    def rho(self, r: np.ndarray) -> np.ndarray:
        return 1.0 - self.psi(r)

    @staticmethod
    def phi(r: np.ndarray) -> np.ndarray:
        return smooth_step(np.asarray(r, dtype=float) - 1.0)

    @classmethod
    def beta(cls, r: np.ndarray) -> np.ndarray:
        r = np.asarray(r, dtype=float)
        return cls.phi(r) - cls.phi(2.0 * r)


DEFAULT_PROFILE = CutoffProfile()
