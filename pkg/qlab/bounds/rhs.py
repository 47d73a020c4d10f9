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
from typing import Tuple, Union

# Third-party imports

# Local imports
from qlab.bounds.exponents import ExponentLaw
from qlab.errors import ModelMismatchError, PreconditionError
from qlab.fields import SpectralField, lp_norm, multiply, sobolev_norm
from qlab.projections import tail_block
from qlab.quasimodes import Quasimode


_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LowDim:
    '''Lambda(d, mu) q(u) q(v).'''


@dataclass(frozen=True)
class HighDimTail:
    '''
    Lambda(d, mu) q(u) (q(v) + mu^(-N + d/2 - sigma(q)) |(I - Delta)^(N/2) R v|_2), where v
    is the lower-frequency factor and R keeps its frequencies >= 2 mu.
    '''

    N: float
    q: float

    def __post_init__(self) -> None:
        if not self.q >= 2:
            raise PreconditionError(f'tail exponent q must be >= 2, got {self.q}')


Variant = Union[LowDim, HighDimTail]


def _ordered(u: Quasimode, v: Quasimode) -> Tuple[Quasimode, Quasimode]:
    '''(higher, lower) frequency factor; v counts as the lower one on ties.'''
    if u.model != v.model:
        raise ModelMismatchError(f'quasimodes on {u.model} and {v.model}')
    if u.frequency < v.frequency:
        return v, u
    return u, v


def tail_term(v: SpectralField, mu: float, N: float, q: float) -> float:
    '''mu^(-N + d/2 - sigma(q)) * |(I - Delta)^(N/2) R_mu v|_2.'''
    law = ExponentLaw(v.model.dimension)
    tail = tail_block(v, mu)
    if len(tail) == 0:
        return 0.0
    return mu ** (-N + law.d / 2.0 - law.sigma(q)) * sobolev_norm(tail, N)


def rhs_bilinear(u: Quasimode, v: Quasimode, variant: Variant = LowDim()) -> float:
    high, low = _ordered(u, v)
    mu = low.frequency
    if mu < 1:
        raise PreconditionError(f'min frequency must be >= 1, got {mu}')
    d = u.model.dimension
    growth = ExponentLaw(d).lambda_(mu)
    if isinstance(variant, HighDimTail):
        if not variant.N > d / 2.0:
            raise PreconditionError(f'the tail needs N > d/2 = {d / 2.0}, got {variant.N}')
        return growth * high.quality * (low.quality + tail_term(low.field, mu, variant.N,
                                                                 variant.q))
    return growth * high.quality * low.quality


def bilinear_ratio(u: Quasimode, v: Quasimode, variant: Variant = LowDim()) -> float:
    '''|u v|_2 / rhs_bilinear(u, v, variant).'''
    bound = rhs_bilinear(u, v, variant)
    return float(lp_norm(multiply(u.field, v.field), 2)) / bound
