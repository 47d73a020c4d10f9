# -*- coding: utf-8 -*-
# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

'''
Quadrature grids and the transforms between coefficients and samples.

A grid is described by its exact degree D: it integrates exactly every trigonometric
polynomial (torus) or spherical polynomial (sphere) of degree <= D.

- Torus T^d (d <= 3): D + 1 uniform nodes per axis, weight 1/(D + 1) per axis.
- Sphere S^2: D // 2 + 1 Gauss-Legendre nodes in cos(theta), D + 1 uniform nodes in phi.
'''

from __future__ import annotations

# System imports
import logging
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Tuple

# Third-party imports
import numpy as np
from scipy.special import roots_legendre

# Local imports
from qlab.errors import BandwidthError, ModelMismatchError, PreconditionError, ResourceError
from qlab.fields.field import SpectralField
from qlab.fields.legendre import legendre_column
from qlab.spectra import SpectralModel, enumerate_modes


_logger = logging.getLogger(__name__)

MAX_GRID_DIMENSION = 3


@dataclass(frozen=True)
class GridSpec:
    model: SpectralModel
    degree: int

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise PreconditionError(f'grid degree must be >= 0, got {self.degree}')
        if self.model.is_torus and self.model.dimension > MAX_GRID_DIMENSION:
            raise ResourceError(
                f'grids exist for T^d with d <= {MAX_GRID_DIMENSION} only, got {self.model}')
        size = math.prod(self.shape)
        if size > self.model.limits.grid_point_cap:
            raise ResourceError(
                f'grid of degree {self.degree} on {self.model} has {size} points, '
                f'cap is {self.model.limits.grid_point_cap}')

    @property
    def shape(self) -> Tuple[int, ...]:
        if self.model.is_torus:
            return (self.degree + 1,) * self.model.dimension
        return (self.degree // 2 + 1, self.degree + 1)

    @cached_property
    def _gauss(self) -> Tuple[np.ndarray, np.ndarray]:
        x, w = roots_legendre(self.shape[0])
        return np.asarray(x, dtype=float), np.asarray(w, dtype=float)

    def nodes(self, axis: int) -> np.ndarray:
        '''Node coordinates along one axis (for the sphere: axis 0 is theta, axis 1 phi).'''
        count = self.shape[axis]
        if self.model.is_torus or axis == 1:
            return 2.0 * math.pi * np.arange(count) / count
        return np.arccos(self._gauss[0])

    @property
    def cos_theta(self) -> np.ndarray:
        return self._gauss[0]

    @property
    def gauss_weights(self) -> np.ndarray:
        return self._gauss[1]

    @property
    def weights(self) -> np.ndarray:
        '''Quadrature weights with the grid's shape; they sum to the model's total measure.'''
        if self.model.is_torus:
            return np.full(self.shape, 1.0 / math.prod(self.shape))
        count = self.shape[1]
        return np.outer(self._gauss[1], np.full(count, 2.0 * math.pi / count))


@dataclass(frozen=True, eq=False)
class GridField:
    spec: GridSpec
    samples: np.ndarray

    def __post_init__(self) -> None:
        if self.samples.shape != self.spec.shape:
            raise PreconditionError(
                f'samples of shape {self.samples.shape} on a grid of shape {self.spec.shape}')

    @property
    def model(self) -> SpectralModel:
        return self.spec.model

    def __mul__(self, other: GridField) -> GridField:
        if self.spec != other.spec:
            raise ModelMismatchError('pointwise products need identical grids')
        return GridField(self.spec, self.samples * other.samples)


def _check_sphere_band(model: SpectralModel, band: int) -> None:
    if band > model.limits.sphere_degree_cap:
        raise ResourceError(
            f'sphere degree {band} exceeds the cap of {model.limits.sphere_degree_cap}')


def synthesize(f: SpectralField, spec: GridSpec) -> GridField:
    '''Samples of sum_k c_k e_k on the grid.'''
    if f.model != spec.model:
        raise ModelMismatchError(f'field on {f.model}, grid on {spec.model}')
    band = f.bandwidth
    if spec.degree < band:
        raise BandwidthError(f'grid degree {spec.degree} below field band {band}')

    if spec.model.is_torus:
        size = spec.shape[0]
        table = np.zeros(spec.shape, dtype=np.complex128)
        # e^{ikx} and e^{i(k mod N)x} agree on the nodes.
        np.add.at(table, tuple((f.labels % size).T), f.coeffs)
        samples = np.fft.ifftn(table) * table.size
        return GridField(spec, samples)

    _check_sphere_band(spec.model, band)
    count = spec.shape[1]
    table = np.zeros(spec.shape, dtype=np.complex128)
    x = spec.cos_theta
    for order in np.unique(f.labels[:, 1]):
        members = f.labels[:, 1] == order
        ells = f.labels[members, 0]
        column = legendre_column(int(order), int(ells.max()), x)
        table[:, int(order) % count] += f.coeffs[members] @ column[ells - abs(int(order))]
    samples = np.fft.ifft(table, axis=1) * count
    _logger.debug('Synthesized %d modes on a %s grid', len(f), spec.shape)
    return GridField(spec, samples)


def analyze(g: GridField, max_frequency: float) -> SpectralField:
    '''Coefficients <g, e_k> of every mode with frequency <= max_frequency.'''
    spec, model = g.spec, g.model
    table = enumerate_modes(model, max_frequency)
    labels = table.labels
    band = int(model.degrees(labels).max()) if len(table) else 0
    if spec.degree < 2 * band:
        raise BandwidthError(
            f'analysis up to degree {band} needs grid degree {2 * band}, got {spec.degree}')

    if model.is_torus:
        spectrum = np.fft.fftn(g.samples) / g.samples.size
        coeffs = spectrum[tuple((labels % spec.shape[0]).T)]
        return SpectralField.from_unique(model, labels, coeffs)

    _check_sphere_band(model, band)
    count = spec.shape[1]
    x, w = spec.cos_theta, spec.gauss_weights
    rows = np.fft.fft(g.samples, axis=1) * (2.0 * math.pi / count)
    coeffs = np.zeros(labels.shape[0], dtype=np.complex128)
    for order in range(-band, band + 1):
        members = np.nonzero(labels[:, 1] == order)[0]
        if members.size == 0:
            continue
        column = legendre_column(order, band, x)
        ells = labels[members, 0]
        coeffs[members] = column[ells - abs(order)] @ (w * rows[:, order % count])
    return SpectralField.from_unique(model, labels, coeffs)


def grid_lp_norm(g: GridField, p: float) -> float:
    '''Quadrature value of (integral |g|^p)^(1/p), or the grid maximum for p = inf.'''
    if p < 1:
        raise PreconditionError(f'p must be >= 1, got {p}')
    magnitudes = np.abs(g.samples)
    if math.isinf(p):
        return float(magnitudes.max())
    total = float(np.sum(g.spec.weights * magnitudes ** p))
    return total ** (1.0 / p)


def analysis_frequency(model: SpectralModel, degree: int) -> float:
    '''Largest frequency a grid of the given degree can analyze exactly.'''
    band = degree // 2
    if model.is_torus:
        return float(band)
    return math.sqrt(band * (band + 1))

