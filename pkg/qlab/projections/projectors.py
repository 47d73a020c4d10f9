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
from typing import Tuple, Union

# Third-party imports
import numpy as np

# Local imports
from qlab.errors import PreconditionError
from qlab.fields import SpectralField
from qlab.projections.cutoffs import DEFAULT_PROFILE, CutoffProfile
from qlab.spectra import eigen_range, level_of_rank, level_sizes, rank_of


_logger = logging.getLogger(__name__)


class ToleranceNorm(Enum):
    H_MINUS_ONE = 'H-1'
    L2 = 'L2'


def project_rank(f: SpectralField, rank: int) -> Tuple[SpectralField, SpectralField]:
    '''
    (E f, R f) where E keeps the modes of canonical rank 0..rank inclusive and R = I - E.

    Only the eigenvalue level holding `rank` needs ranking; it is split by canonical order.
    '''
    if rank < 0:
        raise PreconditionError(f'rank must be >= 0, got {rank}')
    if len(f) == 0:
        return f, f
    level, _ = level_of_rank(f.model, rank)
    eigenvalues = f.eigenvalues
    keep = eigenvalues < level
    on_level = np.nonzero(eigenvalues == level)[0]
    if on_level.size:
        keep[on_level] = rank_of(f.model, f.labels[on_level]) <= rank
    return f.restrict(keep), f.restrict(~keep)


def project_window(f: SpectralField, low: float, high: float = math.inf) -> SpectralField:
    '''Modes with frequency in the half-open window [low, high); high may be infinite.'''
    if not 0 <= low <= high:
        raise PreconditionError(f'window needs 0 <= low <= high, got [{low}, {high})')
    e_lo, e_hi = eigen_range(low, high)
    eigenvalues = f.eigenvalues
    keep = eigenvalues >= e_lo
    if e_hi is not None:
        keep &= eigenvalues <= e_hi
    return f.restrict(keep)


def cluster_block(f: SpectralField, k: int) -> SpectralField:
    '''chi_k f: the unit frequency window [k, k + 1).'''
    return project_window(f, k, k + 1)


def tail_block(f: SpectralField, frequency: float) -> SpectralField:
    '''R f for the window [2 frequency, inf).'''
    return project_window(f, 2.0 * frequency)


def smooth_split(
    f: SpectralField,
    frequency: float,
    profile: CutoffProfile = DEFAULT_PROFILE,
) -> Tuple[SpectralField, SpectralField]:
    '''(L f, H f) with multipliers psi(lambda_k / frequency) and rho = 1 - psi.'''
    if frequency < 1:
        raise PreconditionError(f'split frequency must be >= 1, got {frequency}')
    low = profile.psi(f.frequencies / frequency)
    high_part = f.coeffs - f.coeffs * low
    return (f.weighted(low),
            SpectralField.from_unique(f.model, f.labels, high_part))


def lp_block(f: SpectralField, j: int, profile: CutoffProfile = DEFAULT_PROFILE) -> SpectralField:
    '''S_j f = beta(2^-j P) f.'''
    return f.weighted(profile.beta(f.frequencies / 2.0 ** j))


def lp_block_range(f: SpectralField) -> range:
    '''Dyadic indices j for which S_j f can be nonzero.'''
    frequencies = f.frequencies
    frequencies = frequencies[frequencies > 0]
    if frequencies.size == 0:
        return range(0)
    first = math.floor(math.log2(float(frequencies.min())))
    last = math.ceil(math.log2(float(frequencies.max())))
    return range(first, last + 1)


def _energies(h: SpectralField, norm: Union[ToleranceNorm, str]) -> np.ndarray:
    chosen = ToleranceNorm(norm)
    energies = np.abs(h.coeffs) ** 2
    if chosen is ToleranceNorm.H_MINUS_ONE:
        energies = energies / (1.0 + h.eigenvalues.astype(float))
    return energies


def _tails(energies: np.ndarray) -> np.ndarray:
    '''tails[i] = sum of energies[i:], with tails[n] = 0.'''
    tails = np.zeros(energies.shape[0] + 1)
    tails[:-1] = np.cumsum(energies[::-1])[::-1]
    return tails


def remainder_norm(
    h: SpectralField,
    rank: int,
    norm: Union[ToleranceNorm, str] = ToleranceNorm.H_MINUS_ONE,
) -> float:
    _, remainder = project_rank(h, rank)
    return math.sqrt(float(np.sum(_energies(remainder, norm))))


def min_rank_for_tolerance(
    h: SpectralField,
    tolerance: float,
    norm: Union[ToleranceNorm, str] = ToleranceNorm.H_MINUS_ONE,
) -> int:
    '''
    Smallest rank nu with |R_nu h| < tolerance in the chosen norm.

    The remainder only shrinks when nu passes the rank of a mode of h, so the answer is 0
    or the rank of one of h's modes; a finite field always reaches any tolerance > 0.
    '''
    if not tolerance > 0:
        raise PreconditionError(f'tolerance must be > 0, got {tolerance}')
    tails = np.sqrt(_tails(_energies(h, norm)))
    first = int(np.argmax(tails < tolerance))
    if first == 0:
        return 0
    last_kept = h.labels[first - 1]
    return int(rank_of(h.model, last_kept)[0])


@dataclass(frozen=True)
class RemainderProfile:
    '''
    Remainders of one field at every eigenvalue level up to its top.

    At level E the rank is nu = N(E) - 1 (all modes with eigenvalue <= E kept) and
    next_frequencies holds lambda_{nu + 1}, the frequency of the following level.
    '''

    eigenvalues: np.ndarray
    ranks: np.ndarray
    next_frequencies: np.ndarray
    h_minus_one: np.ndarray
    l2: np.ndarray


def remainder_profile(h: SpectralField) -> RemainderProfile:
    model = h.model
    top = int(h.eigenvalues.max()) if len(h) else 0
    # The next level after E is at most (isqrt(E) + 1)^2 on tori, (l + 1)(l + 2) on S^2.
    sizes = level_sizes(model, top + 2 * math.isqrt(top) + 3)
    levels = np.nonzero(sizes)[0]
    cumulative = np.cumsum(sizes)
    inside = levels[levels <= top]
    following = levels[np.searchsorted(levels, inside, side='right')]

    eigenvalues = h.eigenvalues
    cut = np.searchsorted(eigenvalues, inside, side='right')
    h_minus_one = np.sqrt(_tails(_energies(h, ToleranceNorm.H_MINUS_ONE))[cut])
    l2 = np.sqrt(_tails(_energies(h, ToleranceNorm.L2))[cut])
    return RemainderProfile(
        eigenvalues=inside,
        ranks=cumulative[inside] - 1,
        next_frequencies=np.sqrt(following.astype(float)),
        h_minus_one=h_minus_one,
        l2=l2,
    )
