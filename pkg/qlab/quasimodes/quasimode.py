# -*- coding: utf-8 -*-
# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from __future__ import annotations

# System imports
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

# Third-party imports
import numpy as np

# Local imports
from qlab.errors import PreconditionError
from qlab.fields import SpectralField, l2_norm
from qlab.spectra import SpectralModel


_logger = logging.getLogger(__name__)


class Family(Enum):
    EIGENFUNCTION = 'eigenfunction'
    CLUSTER = 'cluster'
    SECTORAL = 'sectoral'
    ZONAL = 'zonal'
    LATTICE_CAP = 'cap'
    CUSTOM = 'custom'


def defect(f: SpectralField, frequency: float) -> float:
    '''|(Delta + lambda^2) f|_2, from sum_k (lambda_k^2 - lambda^2)^2 |c_k|^2.'''
    if len(f) == 0:
        return 0.0
    offsets = f.eigenvalues.astype(float) - frequency * frequency
    return math.sqrt(float(np.sum(offsets * offsets * np.abs(f.coeffs) ** 2)))


def quality(f: SpectralField, frequency: float) -> Tuple[float, float]:
    '''(defect, q) with q = defect / lambda + |f|_2.'''
    if frequency < 1:
        raise PreconditionError(f'quasimode frequency must be >= 1, got {frequency}')
    value = defect(f, frequency)
    return value, value / frequency + l2_norm(f)


@dataclass(frozen=True)
class Quasimode:
    '''A field with its nominal frequency, its defect and its quality q.'''

    field: SpectralField
    frequency: float
    defect: float
    quality: float
    family: Family
    seed: Optional[int] = None

    @classmethod
    def build(
        cls,
        field: SpectralField,
        frequency: float,
        family: Family = Family.CUSTOM,
        seed: Optional[int] = None,
    ) -> Quasimode:
        if len(field) == 0:
            raise PreconditionError('a quasimode needs a nonzero field')
        value, q = quality(field, frequency)
        return cls(field=field, frequency=frequency, defect=value, quality=q, family=family,
                   seed=seed)

    @property
    def model(self) -> SpectralModel:
        return self.field.model

    def scaled(self, factor: complex) -> Quasimode:
        return Quasimode.build(self.field.scaled(factor), self.frequency, self.family,
                               self.seed)

    def with_field(self, field: SpectralField) -> Quasimode:
        return Quasimode.build(field, self.frequency, self.family, self.seed)
