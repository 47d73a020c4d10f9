# -*- coding: utf-8 -*-
# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

'''
Constructors of quasimode families.

The nominal frequency of a window or cap family is the left end of its window, and every
constructed field has unit L2 norm.
'''

from __future__ import annotations

# System imports
import logging
import math
from enum import Enum
from typing import List, Optional, Set, Tuple, Union

# Third-party imports
import numpy as np

# Local imports
from qlab.errors import EmptyWindowError, ModelMismatchError, PreconditionError, ResourceError
from qlab.fields import SpectralField
from qlab.quasimodes.quasimode import Family, Quasimode
from qlab.spectra import (
    Label, SpectralModel, canonical_order, eigen_range, enumerate_window, lattice_shell,
    window_count,
)
from qlab.spectra.lattice import ceil_sqrt_array, isqrt_array


_logger = logging.getLogger(__name__)

# Sampling rounds before a sparse cluster gives up.
_MAX_SAMPLING_ROUNDS = 256

# Slack on the cap angle test.
_ANGLE_TOL = 1e-12


class Weights(Enum):
    UNIFORM = 'uniform'
    RANDOM = 'random'


def generator(seed: int) -> np.random.Generator:
    '''The seeded 64-bit generator behind every random family.'''
    return np.random.Generator(np.random.PCG64(seed))


def _unit_field(
    model: SpectralModel,
    labels: np.ndarray,
    weights: Weights,
    rng: Optional[np.random.Generator],
) -> SpectralField:
    if weights is Weights.RANDOM:
        assert rng is not None
        size = labels.shape[0]
        coeffs = rng.standard_normal(size) + 1j * rng.standard_normal(size)
    else:
        coeffs = np.ones(labels.shape[0], dtype=np.complex128)
    return SpectralField.from_unique(model, labels, coeffs).normalized()


def eigenfunction(model: SpectralModel, label: Label) -> Quasimode:
    '''The single mode e_label, an exact eigenfunction (label must not be the constant).'''
    field = SpectralField.mode(model, label)
    return Quasimode.build(field, field.max_frequency, Family.EIGENFUNCTION)


def _sample_window(
    model: SpectralModel,
    low: float,
    high: float,
    count: int,
    rng: np.random.Generator,
) -> np.ndarray:
    '''count distinct lattice points with low <= |k| < high, drawn at random.'''
    e_lo, e_hi = eigen_range(low, high)
    assert e_hi is not None
    d = model.dimension
    batch = max(4 * count, 1024)
    found: List[np.ndarray] = []
    seen: Set[Tuple[int, ...]] = set()
    for _ in range(_MAX_SAMPLING_ROUNDS):
        directions = rng.standard_normal((batch, d))
        directions /= np.linalg.norm(directions, axis=1, keepdims=True)
        radii = rng.uniform(low, high, size=batch)
        points = np.rint(directions * radii[:, None]).astype(np.int64)
        norms = np.einsum('ij,ij->i', points, points)
        for point in points[(norms >= e_lo) & (norms <= e_hi)]:
            key = tuple(int(x) for x in point)
            if key not in seen:
                seen.add(key)
                found.append(point)
                if len(found) == count:
                    return np.asarray(found, dtype=np.int64)
    raise ResourceError(f'could not draw {count} distinct modes in [{low}, {high}) of {model}')


def cluster_quasimode(
    model: SpectralModel,
    frequency: float,
    width: float,
    weights: Union[Weights, str] = Weights.UNIFORM,
    seed: Optional[int] = None,
    max_modes: Optional[int] = None,
) -> Quasimode:
    '''
    Unit field on the modes with frequency in [frequency, frequency + width).

    When the window holds more than max_modes modes, max_modes of them are drawn at random
    (a sparse cluster), which needs a seed like random weights do.
    '''
    chosen = Weights(weights)
    if frequency < 1:
        raise PreconditionError(f'cluster frequency must be >= 1, got {frequency}')
    if not width > 0:
        raise PreconditionError(f'cluster width must be > 0, got {width}')
    if max_modes is not None and max_modes < 1:
        raise PreconditionError(f'max_modes must be >= 1, got {max_modes}')

    high = frequency + width
    count = window_count(model, frequency, high)
    if count == 0:
        raise EmptyWindowError(f'no mode of {model} with frequency in [{frequency}, {high})')

    sampled = max_modes is not None and count > max_modes
    needs_rng = sampled or chosen is Weights.RANDOM
    if needs_rng and seed is None:
        raise PreconditionError('random weights and sparse clusters need a seed')
    rng = generator(seed) if needs_rng and seed is not None else None

    if sampled:
        assert rng is not None and max_modes is not None
        if model.is_torus:
            labels = _sample_window(model, frequency, high, max_modes, rng)
        else:
            window = enumerate_window(model, frequency, high)
            labels = window[np.sort(rng.choice(window.shape[0], max_modes, replace=False))]
        labels = labels[canonical_order(model.eigenvalues(labels), labels)]
        _logger.warning('Cluster of %s at %g holds %d modes, sampled %d', model, frequency,
                        count, max_modes)
    else:
        labels = enumerate_window(model, frequency, high)

    field = _unit_field(model, labels, chosen, rng)
    return Quasimode.build(field, frequency, Family.CLUSTER, seed if needs_rng else None)


def sphere_extremal(
    kind: Union[Family, str],
    degree: int,
    model: Optional[SpectralModel] = None,
) -> Quasimode:
    '''Sectoral Y_l^l or zonal Y_l^0 at frequency sqrt(l(l + 1)).'''
    family = Family(kind)
    model = model or SpectralModel.sphere()
    if model.is_torus:
        raise ModelMismatchError(f'extremal harmonics live on S^2, not {model}')
    if family not in (Family.SECTORAL, Family.ZONAL):
        raise PreconditionError(f'extremal families are sectoral or zonal, got {family.value}')
    if degree < 1:
        raise PreconditionError(f'degree must be >= 1, got {degree}')
    if degree > model.limits.sphere_degree_cap:
        raise ResourceError(
            f'degree {degree} exceeds the cap of {model.limits.sphere_degree_cap}')
    order = degree if family is Family.SECTORAL else 0
    field = SpectralField.mode(model, (degree, order))
    return Quasimode.build(field, math.sqrt(degree * (degree + 1)), family)


def _narrow_cap_labels(
    model: SpectralModel,
    e_lo: int,
    e_hi: int,
    cap_width: float,
) -> np.ndarray:
    '''Lattice points with e_lo <= |k|^2 <= e_hi and k_1 > 0, transverse part bounded by
    the cap (cap_width < pi / 2).'''
    transverse_sq = int(math.floor(e_hi * math.sin(cap_width) ** 2 + 1e-9))
    head = lattice_shell(model.dimension - 1, 0, transverse_sq, model.mode_cap)
    norms = np.einsum('ij,ij->i', head, head)
    hi = isqrt_array(np.maximum(e_hi - norms, 0))
    lo = np.maximum(ceil_sqrt_array(e_lo - norms), 1)
    lengths = np.where(hi >= lo, hi - lo + 1, 0)
    size = int(lengths.sum())
    offsets = np.repeat(np.cumsum(lengths) - lengths, lengths)
    first = np.repeat(lo, lengths) + (np.arange(size, dtype=np.int64) - offsets)
    labels = np.empty((size, model.dimension), dtype=np.int64)
    labels[:, 0] = first
    labels[:, 1:] = np.repeat(head, lengths, axis=0)
    return labels


def lattice_cap(model: SpectralModel, frequency: float, cap_width: float) -> Quasimode:
    '''
    Uniform unit field on the modes with |k| in [frequency, frequency + 1) whose direction
    makes an angle <= cap_width with the first axis.
    '''
    if not model.is_torus:
        raise ModelMismatchError(f'lattice caps live on tori, not {model}')
    if frequency < 1:
        raise PreconditionError(f'cap frequency must be >= 1, got {frequency}')
    if cap_width < 0:
        raise PreconditionError(f'cap width must be >= 0, got {cap_width}')

    e_lo, e_hi = eigen_range(frequency, frequency + 1)
    assert e_hi is not None
    if cap_width < math.pi / 2:
        labels = _narrow_cap_labels(model, e_lo, e_hi, cap_width)
    else:
        labels = enumerate_window(model, frequency, frequency + 1)

    norms = np.sqrt(model.eigenvalues(labels).astype(float))
    inside = labels[:, 0] >= norms * (math.cos(min(cap_width, math.pi)) - _ANGLE_TOL)
    labels = labels[inside]
    if labels.shape[0] == 0:
        raise EmptyWindowError(
            f'no mode of {model} with |k| in [{frequency}, {frequency + 1}) within angle '
            f'{cap_width} of the axis')
    labels = labels[canonical_order(model.eigenvalues(labels), labels)]
    field = _unit_field(model, labels, Weights.UNIFORM, None)
    _logger.debug('Lattice cap at %g, width %g: %d modes', frequency, cap_width, len(field))
    return Quasimode.build(field, frequency, Family.LATTICE_CAP)


def tail_label(model: SpectralModel, frequency: float) -> Label:
    '''The first mode on the first axis with frequency >= the given one.'''
    if model.is_torus:
        return (int(math.ceil(frequency - 1e-9)),) + (0,) * (model.dimension - 1)
    degree = max(0, int(math.ceil((-1.0 + math.sqrt(1.0 + 4.0 * frequency ** 2)) / 2.0 - 1e-9)))
    while degree * (degree + 1) < frequency ** 2 * (1.0 - 1e-12):
        degree += 1
    return (degree, 0)


def with_tail(quasimode: Quasimode, factor: float, amplitude: float) -> Quasimode:
    '''Adds amplitude * e_k for a mode k at frequency about factor * lambda.'''
    if factor <= 0:
        raise PreconditionError(f'tail factor must be > 0, got {factor}')
    model = quasimode.model
    label = tail_label(model, factor * quasimode.frequency)
    tail = SpectralField.mode(model, label, amplitude)
    return quasimode.with_field(quasimode.field + tail)
