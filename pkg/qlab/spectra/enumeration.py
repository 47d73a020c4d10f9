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

# Third-party imports
import numpy as np

# Local imports
from qlab.errors import PreconditionError, ResourceError
from qlab.spectra.lattice import (
    canonical_order, count_between, cumulative_counts, eigen_ceiling, eigen_range,
    lattice_shell, lexicographic_keys, representation_counts,
)
from qlab.spectra.models import Mode, ModeTable, SpectralModel


_logger = logging.getLogger(__name__)


def _sphere_degree_ceiling(e_max: int) -> int:
    '''Largest l with l(l + 1) <= e_max, or -1.'''
    if e_max < 0:
        return -1
    ell = math.isqrt(e_max)
    while ell * (ell + 1) > e_max:
        ell -= 1
    return ell


def _sphere_labels(ell_lo: int, ell_hi: int) -> np.ndarray:
    if ell_hi < ell_lo:
        return np.zeros((0, 2), dtype=np.int64)
    ells = np.arange(ell_lo, ell_hi + 1, dtype=np.int64)
    sizes = 2 * ells + 1
    ell_column = np.repeat(ells, sizes)
    offsets = np.repeat(np.cumsum(sizes) - sizes, sizes)
    m_column = np.arange(int(sizes.sum()), dtype=np.int64) - offsets - ell_column
    return np.stack([ell_column, m_column], axis=1)


def _sorted(model: SpectralModel, labels: np.ndarray) -> np.ndarray:
    return labels[canonical_order(model.eigenvalues(labels), labels)]


def weyl_count(model: SpectralModel, frequency: float) -> int:
    '''Exact number of modes with frequency <= the given one, multiplicity included.'''
    if frequency < 0:
        raise PreconditionError(f'frequency must be >= 0, got {frequency}')
    e_max = eigen_ceiling(frequency)
    if model.is_torus:
        return int(cumulative_counts(model.dimension, e_max)[-1])
    return (_sphere_degree_ceiling(e_max) + 1) ** 2


def enumerate_modes(model: SpectralModel, max_frequency: float) -> ModeTable:
    '''All modes with frequency <= max_frequency, canonically ordered, ranks from 0.'''
    if max_frequency < 0:
        raise PreconditionError(f'max_frequency must be >= 0, got {max_frequency}')
    count = weyl_count(model, max_frequency)
    if count > model.mode_cap:
        raise ResourceError(
            f'{count} modes of {model} up to frequency {max_frequency} '
            f'exceed the mode cap of {model.mode_cap}')

    e_max = eigen_ceiling(max_frequency)
    if model.is_torus:
        labels = _sorted(model, lattice_shell(model.dimension, 0, e_max, model.mode_cap))
    else:
        labels = _sphere_labels(0, _sphere_degree_ceiling(e_max))
    _logger.debug('Enumerated %d modes of %s up to %g', count, model, max_frequency)
    return ModeTable(model, labels)


def enumerate_window(model: SpectralModel, low: float, high: float) -> np.ndarray:
    '''Labels of all modes with frequency in [low, high), canonically ordered.'''
    if not 0 <= low <= high:
        raise PreconditionError(f'window needs 0 <= low <= high, got [{low}, {high})')
    if math.isinf(high):
        raise PreconditionError('cannot enumerate an unbounded window')
    e_lo, e_hi = eigen_range(low, high)
    assert e_hi is not None
    if model.is_torus:
        shell = lattice_shell(model.dimension, e_lo, e_hi, model.mode_cap)
        return _sorted(model, shell)

    ell_lo = _sphere_degree_ceiling(e_lo - 1) + 1
    ell_hi = _sphere_degree_ceiling(e_hi)
    labels = _sphere_labels(ell_lo, ell_hi)
    if labels.shape[0] > model.mode_cap:
        raise ResourceError(f'{labels.shape[0]} modes exceed the mode cap of {model.mode_cap}')
    return labels


def window_count(model: SpectralModel, low: float, high: float) -> int:
    '''Number of modes with frequency in [low, high), without enumerating them.'''
    e_lo, e_hi = eigen_range(low, high)
    if e_hi is None:
        raise PreconditionError('cannot count an unbounded window')
    if model.is_torus:
        return count_between(model.dimension, e_lo, e_hi)
    ell_lo = _sphere_degree_ceiling(e_lo - 1) + 1
    ell_hi = _sphere_degree_ceiling(e_hi)
    return max(0, (ell_hi + 1) ** 2 - ell_lo ** 2)


def level_of_rank(model: SpectralModel, rank: int) -> tuple[int, int]:
    '''(eigenvalue, number of modes below that level) of the mode with the given rank.'''
    if not model.is_torus:
        ell = math.isqrt(rank)
        return ell * (ell + 1), ell * ell

    d = model.dimension
    e_max = max(4, int(math.ceil(rank ** (2.0 / d))) + 4)
    while True:
        cumulative = cumulative_counts(d, e_max)
        if cumulative[-1] > rank:
            break
        e_max *= 2
    level = int(np.searchsorted(cumulative, rank, side='right'))
    below = int(cumulative[level - 1]) if level > 0 else 0
    return level, below


def frequency_of_rank(model: SpectralModel, rank: int) -> float:
    '''Frequency of the rank-th mode in canonical order (generalized inverse of weyl_count).'''
    if rank < 0:
        raise PreconditionError(f'rank must be >= 0, got {rank}')
    return math.sqrt(level_of_rank(model, rank)[0])


def _torus_level(model: SpectralModel, eigenvalue: int) -> np.ndarray:
    shell = lattice_shell(model.dimension, eigenvalue, eigenvalue, model.mode_cap)
    radius = math.isqrt(eigenvalue)
    return shell[np.argsort(lexicographic_keys(shell, radius), kind='stable')]


def mode_of_rank(model: SpectralModel, rank: int) -> Mode:
    if rank < 0:
        raise PreconditionError(f'rank must be >= 0, got {rank}')
    eigenvalue, below = level_of_rank(model, rank)
    position = rank - below
    if model.is_torus:
        label = tuple(int(x) for x in _torus_level(model, eigenvalue)[position])
    else:
        ell = math.isqrt(rank)
        label = (ell, position - ell)
    return Mode(label=label, eigenvalue=eigenvalue, rank=rank)


def rank_of(model: SpectralModel, labels: np.ndarray) -> np.ndarray:
    '''Canonical ranks of arbitrary labels: modes in lower levels plus position in the level.'''
    labels = model.check_labels(labels)
    if labels.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    if not model.is_torus:
        ell, m = labels[:, 0], labels[:, 1]
        return ell * ell + m + ell

    eigenvalues = model.eigenvalues(labels)
    cumulative = cumulative_counts(model.dimension, int(eigenvalues.max()))
    below = np.where(eigenvalues > 0, cumulative[np.maximum(eigenvalues - 1, 0)], 0)
    ranks = np.empty(labels.shape[0], dtype=np.int64)
    for eigenvalue in np.unique(eigenvalues):
        members = np.nonzero(eigenvalues == eigenvalue)[0]
        radius = math.isqrt(int(eigenvalue))
        level_keys = lexicographic_keys(_torus_level(model, int(eigenvalue)), radius)
        positions = np.searchsorted(level_keys, lexicographic_keys(labels[members], radius))
        ranks[members] = below[members] + positions
    return ranks


def level_sizes(model: SpectralModel, e_max: int) -> np.ndarray:
    '''Multiplicity of every integer eigenvalue 0..e_max (zero for non-eigenvalues).'''
    if model.is_torus:
        return np.array(representation_counts(model.dimension, e_max))
    sizes = np.zeros(e_max + 1, dtype=np.int64)
    ell = np.arange(_sphere_degree_ceiling(e_max) + 1)
    sizes[ell * (ell + 1)] = 2 * ell + 1
    return sizes
