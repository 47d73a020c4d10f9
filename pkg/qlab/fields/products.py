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
from qlab.fields.grids import GridSpec, analysis_frequency, analyze, synthesize
from qlab.spectra import SpectralModel, eigen_ceiling


_logger = logging.getLogger(__name__)

# Pairs handled at once by the sparse convolution.
_CHUNK_PAIRS = 1 << 22

# Grid products keep only coefficients above this fraction of the largest one.
GRID_CHOP = 1e-14


class ProductMethod(Enum):
    AUTO = 'auto'
    CONVOLUTION = 'convolution'
    GRID = 'grid'


def _linear_keys(labels: np.ndarray, base: int) -> np.ndarray:
    keys = np.zeros(labels.shape[0], dtype=np.int64)
    for column in range(labels.shape[1]):
        keys = keys * base + labels[:, column]
    return keys


def _decode_keys(keys: np.ndarray, base: int, radius: int, width: int) -> np.ndarray:
    # Keys were built from labels shifted by radius so every digit is in [0, base).
    labels = np.empty((keys.shape[0], width), dtype=np.int64)
    rest = keys.copy()
    for column in reversed(range(width)):
        labels[:, column] = rest % base - radius
        rest //= base
    return labels


def _convolve(u: SpectralField, v: SpectralField) -> SpectralField:
    model = u.model
    pairs = len(u) * len(v)
    if pairs > model.limits.convolution_cap:
        raise ResourceError(
            f'product of {len(u)} x {len(v)} modes exceeds the convolution cap of '
            f'{model.limits.convolution_cap}')

    width = model.dimension
    radius = u.bandwidth + v.bandwidth
    base = 2 * radius + 1
    if width * math.log2(base) >= 62:
        raise ResourceError(f'labels of band {radius} in {width} dimensions overflow int64 keys')

    # Sum of linear keys is the key of the sum; the shift by radius makes digits nonnegative.
    offset = int(_linear_keys(np.full((1, width), radius, dtype=np.int64), base)[0])
    keys_u = _linear_keys(u.labels, base) + offset
    keys_v = _linear_keys(v.labels, base)

    rows = max(1, _CHUNK_PAIRS // max(len(v), 1))
    partial_keys = []
    partial_coeffs = []
    for start in range(0, len(u), rows):
        stop = min(start + rows, len(u))
        keys = (keys_u[start:stop, None] + keys_v[None, :]).reshape(-1)
        coeffs = (u.coeffs[start:stop, None] * v.coeffs[None, :]).reshape(-1)
        unique, inverse = np.unique(keys, return_inverse=True)
        partial_keys.append(unique)
        partial_coeffs.append(_accumulate(inverse.reshape(-1), coeffs, unique.shape[0]))

    keys = np.concatenate(partial_keys)
    coeffs = np.concatenate(partial_coeffs)
    if len(partial_keys) > 1:
        unique, inverse = np.unique(keys, return_inverse=True)
        coeffs = _accumulate(inverse.reshape(-1), coeffs, unique.shape[0])
        keys = unique

    labels = _decode_keys(keys, base, radius, width)
    _logger.debug('Convolved %d x %d modes into %d', len(u), len(v), labels.shape[0])
    return SpectralField.from_unique(model, labels, coeffs)


def _accumulate(inverse: np.ndarray, coeffs: np.ndarray, size: int) -> np.ndarray:
    return (np.bincount(inverse, weights=coeffs.real, minlength=size)
            + 1j * np.bincount(inverse, weights=coeffs.imag, minlength=size))


def product_grid(model: SpectralModel, band: int) -> GridSpec:
    '''Grid on which the product of two fields of total band `band` is analyzed exactly.'''
    return GridSpec(model, 2 * band)


def _grid_product(u: SpectralField, v: SpectralField) -> SpectralField:
    model = u.model
    if model.is_torus:
        # The product lives in the ball of radius |k_u|max + |k_v|max.
        limit = u.max_frequency + v.max_frequency
        spec = product_grid(model, math.isqrt(eigen_ceiling(limit)))
    else:
        spec = product_grid(model, u.bandwidth + v.bandwidth)
        limit = analysis_frequency(model, spec.degree)
    samples = synthesize(u, spec) * synthesize(v, spec)
    product = analyze(samples, limit)
    _logger.debug('Grid product on %s: %d coefficients', spec.shape, len(product))
    return product.chop(GRID_CHOP, relative=True)


def multiply(u: SpectralField, v: SpectralField, method: str = 'auto') -> SpectralField:
    '''
    Coefficients of the pointwise product u * v.

    Torus products are exact sparse convolutions of the lattice coefficients (any d).
    Sphere products are formed on a Gauss-Legendre grid of twice the product degree and
    analyzed back, which is exact to roundoff since the product has degree l_u + l_v.
    method='grid' forces the quadrature route on tori with d <= 3.
    '''
    if u.model != v.model:
        raise ModelMismatchError(f'cannot multiply fields on {u.model} and {v.model}')
    chosen = ProductMethod(method)
    if len(u) == 0 or len(v) == 0:
        return SpectralField.zero(u.model)

    if u.model.is_torus:
        if chosen is ProductMethod.GRID:
            return _grid_product(u, v)
        return _convolve(u, v)

    if chosen is ProductMethod.CONVOLUTION:
        raise PreconditionError('sphere products are computed on grids only')
    return _grid_product(u, v)


def constant(model: SpectralModel, value: complex = 1.0) -> SpectralField:
    '''The constant function `value` (on S^2 the constant mode Y_0^0 is 1/sqrt(4 pi)).'''
    zero = (0,) * model.label_width
    return SpectralField.mode(model, zero, value * math.sqrt(model.total_measure))


def power(f: SpectralField, exponent: int) -> SpectralField:
    '''f multiplied by itself exponent times (exponent >= 0), by binary powering.'''
    if exponent < 0:
        raise PreconditionError(f'exponent must be >= 0, got {exponent}')
    result = constant(f.model)
    base = f
    while exponent:
        if exponent & 1:
            result = multiply(result, base)
        exponent >>= 1
        if exponent:
            base = multiply(base, base)
    return result
