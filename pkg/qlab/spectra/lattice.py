# -*- coding: utf-8 -*-
# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

'''
Integer lattice helpers: representation counts r_d(E) = #{k in Z^d : |k|^2 = E}, shell
enumeration and lexicographic keys.
'''

from __future__ import annotations

# System imports
import logging
import math
from functools import lru_cache
from typing import Optional

# Third-party imports
import numpy as np

# Local imports
from qlab.errors import ResourceError


_logger = logging.getLogger(__name__)

# Relative slack used when turning float frequencies into integer eigenvalue bounds.
EIGEN_TOL = 1e-9


def isqrt_array(values: np.ndarray) -> np.ndarray:
    '''Elementwise floor(sqrt(values)) for nonnegative int64 values, exact.'''
    root = np.floor(np.sqrt(values.astype(float))).astype(np.int64)
    root += ((root + 1) * (root + 1) <= values)
    root -= (root * root > values)
    return root


def ceil_sqrt_array(values: np.ndarray) -> np.ndarray:
    root = isqrt_array(np.maximum(values, 0))
    return root + (root * root < values)


def eigen_ceiling(frequency: float) -> int:
    '''Largest integer eigenvalue E with sqrt(E) <= frequency.'''
    square = frequency * frequency
    return int(math.floor(square + EIGEN_TOL * max(1.0, square)))


def eigen_range(low: float, high: float) -> tuple[int, Optional[int]]:
    '''Inclusive integer eigenvalue range of the half-open frequency window [low, high).

    The upper end is None for an unbounded window.
    '''
    square = low * low
    e_lo = max(0, int(math.ceil(square - EIGEN_TOL * max(1.0, square))))
    if math.isinf(high):
        return e_lo, None
    square = high * high
    return e_lo, int(math.ceil(square - EIGEN_TOL * max(1.0, square))) - 1


@lru_cache(maxsize=64)
def _cached_counts(dimension: int, e_max: int) -> np.ndarray:
    counts = np.zeros(e_max + 1, dtype=np.int64)
    counts[0] = 1
    squares = [j * j for j in range(1, math.isqrt(e_max) + 1)]
    for _ in range(dimension):
        nxt = counts.copy()
        for sq in squares:
            nxt[sq:] += 2 * counts[:e_max + 1 - sq]
        counts = nxt
    counts.flags.writeable = False
    return counts


def representation_counts(dimension: int, e_max: int) -> np.ndarray:
    '''r_d(E) for E = 0..e_max, by repeated convolution with the 1-D theta series.'''
    if e_max < 0:
        return np.zeros(0, dtype=np.int64)
    # Tables are cached by power-of-two size so growing sweeps reuse them.
    size = 1 << max(e_max, 1).bit_length()
    return _cached_counts(dimension, size - 1)[:e_max + 1]


def cumulative_counts(dimension: int, e_max: int) -> np.ndarray:
    '''N(E) = #{k : |k|^2 <= E} for E = 0..e_max.'''
    return np.cumsum(representation_counts(dimension, e_max))


def count_between(dimension: int, e_lo: int, e_hi: int) -> int:
    if e_hi < e_lo or e_hi < 0:
        return 0
    counts = representation_counts(dimension, e_hi)
    return int(counts[max(e_lo, 0):].sum())


def lattice_shell(dimension: int, e_lo: int, e_hi: int, cap: int) -> np.ndarray:
    '''
    All k in Z^dimension with e_lo <= |k|^2 <= e_hi, in no particular order.

    The last coordinate is solved for row by row, so a thin shell never materializes the
    full ball of that dimension (only the ball one dimension lower). Raises ResourceError
    when either the shell or that lower ball holds more than cap points.
    '''
    e_lo = max(e_lo, 0)
    if e_hi < e_lo:
        return np.zeros((0, dimension), dtype=np.int64)

    total = count_between(dimension, e_lo, e_hi)
    if total > cap:
        raise ResourceError(
            f'{total} lattice points in Z^{dimension} with {e_lo} <= |k|^2 <= {e_hi} '
            f'exceed the cap of {cap}')

    if dimension == 1:
        radius = math.isqrt(e_hi)
        column = np.arange(-radius, radius + 1, dtype=np.int64)
        return column[column * column >= e_lo].reshape(-1, 1)

    head = lattice_shell(dimension - 1, 0, e_hi, cap=max(cap, 8 * total))
    norms = np.einsum('ij,ij->i', head, head)
    hi = isqrt_array(e_hi - norms)
    lo = ceil_sqrt_array(e_lo - norms)
    valid = hi >= lo

    # Values of the last coordinate: [-hi, hi] when lo == 0, else [-hi, -lo] and [lo, hi].
    full = valid & (lo == 0)
    split = valid & (lo > 0)
    rows = np.concatenate([np.nonzero(full)[0], np.nonzero(split)[0], np.nonzero(split)[0]])
    starts = np.concatenate([-hi[full], -hi[split], lo[split]])
    lengths = np.concatenate([2 * hi[full] + 1, hi[split] - lo[split] + 1,
                              hi[split] - lo[split] + 1])

    size = int(lengths.sum())
    offsets = np.repeat(np.cumsum(lengths) - lengths, lengths)
    last = np.repeat(starts, lengths) + (np.arange(size, dtype=np.int64) - offsets)
    shell = np.empty((size, dimension), dtype=np.int64)
    shell[:, :-1] = head[np.repeat(rows, lengths)]
    shell[:, -1] = last
    _logger.debug('Enumerated %d points of Z^%d in [%d, %d]', size, dimension, e_lo, e_hi)
    return shell


def lexicographic_keys(labels: np.ndarray, radius: int) -> np.ndarray:
    '''Integer keys ordered like the rows of labels lexicographically, for |k_i| <= radius.'''
    base = 2 * radius + 1
    keys = np.zeros(labels.shape[0], dtype=np.int64)
    for column in range(labels.shape[1]):
        keys = keys * base + (labels[:, column] + radius)
    return keys


def canonical_order(eigenvalues: np.ndarray, labels: np.ndarray) -> np.ndarray:
    '''Permutation sorting by eigenvalue, then lexicographically by label.'''
    keys = tuple(labels[:, c] for c in reversed(range(labels.shape[1])))
    return np.lexsort(keys + (eigenvalues,))


def ball_volume(dimension: int) -> float:
    '''Volume of the unit ball of R^dimension.'''
    from scipy.special import gammaln

    return math.exp(0.5 * dimension * math.log(math.pi) - gammaln(0.5 * dimension + 1.0))
