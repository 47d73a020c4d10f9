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
from enum import Enum

# Third-party imports
import numpy as np

# Local imports
from qlab.errors import ModelMismatchError, PreconditionError, ResourceError
from qlab.fields.field import SpectralField
from qlab.fields.grids import MAX_GRID_DIMENSION, GridSpec, grid_lp_norm, synthesize
from qlab.fields.products import power


_logger = logging.getLogger(__name__)


class EstimateKind(Enum):
    EXACT = 'exact'
    QUADRATURE = 'quadrature'
    LOWER_BOUND = 'lower-bound'


class Estimate(float):
    '''A float that remembers how it was obtained.'''

    kind: EstimateKind

    def __new__(cls, value: float, kind: EstimateKind) -> Estimate:
        instance = super().__new__(cls, value)
        instance.kind = kind
        return instance

    def __repr__(self) -> str:
        return f'Estimate({float(self)!r}, {self.kind.value})'


def l2_norm(f: SpectralField) -> float:
    return math.sqrt(f.energy())


def _is_even_integer(p: float) -> bool:
    return float(p).is_integer() and int(p) % 2 == 0


def lp_norm(f: SpectralField, p: float) -> Estimate:
    '''
    (integral |f|^p)^(1/p) for the model's measure.

    - p = 2: Parseval, exact.
    - Even integer p: |f|^p is a polynomial of degree p * band, integrated exactly on a grid
      of that degree; on tori with d > 3 the identity |f|_{2m}^{2m} = |f^m|_2^2 is used
      instead, with f^m computed by sparse convolution.
    - Other finite p: quadrature on a grid oversampled by the configured factor.
    - p = inf: maximum over an oversampled grid, a lower bound of the true supremum.
    '''
    if not p >= 1:
        raise PreconditionError(f'p must be >= 1, got {p}')
    if len(f) == 0:
        return Estimate(0.0, EstimateKind.EXACT)
    if p == 2:
        return Estimate(l2_norm(f), EstimateKind.EXACT)

    model = f.model
    if model.is_torus and len(f) == 1:
        # |c e_k| is the constant |c|.
        return Estimate(abs(complex(f.coeffs[0])), EstimateKind.EXACT)

    band = f.bandwidth
    oversampling = model.limits.oversampling
    if _is_even_integer(p):
        if model.is_torus and model.dimension > MAX_GRID_DIMENSION:
            half = power(f, int(p) // 2)
            return Estimate(half.energy() ** (1.0 / p), EstimateKind.EXACT)
        spec = GridSpec(model, int(p) * band)
        kind = EstimateKind.EXACT
    elif model.is_torus and model.dimension > MAX_GRID_DIMENSION:
        raise ResourceError(f'L^{p} norms on {model} need a grid, available for d <= 3 only')
    elif math.isinf(p):
        spec = GridSpec(model, oversampling * 2 * max(band, 1))
        kind = EstimateKind.LOWER_BOUND
    else:
        spec = GridSpec(model, oversampling * math.ceil(p) * band)
        kind = EstimateKind.QUADRATURE

    value = grid_lp_norm(synthesize(f, spec), p)
    if kind is EstimateKind.LOWER_BOUND:
        _logger.warning('L^inf norm of %r is a grid maximum (lower bound)', f)
    else:
        _logger.debug('L^%g norm on a %s grid: %s', p, spec.shape, kind.value)
    return Estimate(value, kind)


def sobolev_norm(f: SpectralField, sigma: float) -> float:
    '''(sum_k (1 + lambda_k^2)^sigma |c_k|^2)^(1/2).'''
    if len(f) == 0:
        return 0.0
    weights = (1.0 + f.eigenvalues.astype(float)) ** sigma
    return math.sqrt(float(np.sum(weights * np.abs(f.coeffs) ** 2)))


def inner(f: SpectralField, g: SpectralField) -> complex:
    '''sum_k c_k(f) conj(c_k(g)).'''
    if f.model != g.model:
        raise ModelMismatchError(f'inner product of fields on {f.model} and {g.model}')
    if len(f) == 0 or len(g) == 0:
        return 0j
    combined = np.concatenate([f.labels, g.labels])
    unique, inverse = np.unique(combined, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)
    left = np.zeros(unique.shape[0], dtype=np.complex128)
    right = np.zeros(unique.shape[0], dtype=np.complex128)
    left[inverse[:len(f)]] = f.coeffs
    right[inverse[len(f):]] = g.coeffs
    return complex(np.vdot(right, left))
