# -*- coding: utf-8 -*-
# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from __future__ import annotations

# System imports
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Mapping, Optional, Tuple, Union, overload

# Third-party imports
import numpy as np

# Local imports
from qlab.errors import ModelMismatchError, PreconditionError


DEFAULT_MODE_CAP = 2_000_000
MAX_TORUS_DIMENSION = 6
MAX_SPHERE_DEGREE = 256

Label = Tuple[int, ...]


class Geometry(Enum):
    TORUS = 'torus'
    SPHERE = 'sphere'


class MeasureConvention(Enum):
    PROBABILITY = 'probability'
    SURFACE = 'surface'


@dataclass(frozen=True)
class Limits:
    '''Resource caps applied by every operation on a model (the "limits" settings).'''

    mode_cap: int = DEFAULT_MODE_CAP
    convolution_cap: int = 50_000_000
    grid_point_cap: int = 16_777_216
    sphere_degree_cap: int = MAX_SPHERE_DEGREE
    oversampling: int = 4

    def __post_init__(self) -> None:
        for name in ('mode_cap', 'convolution_cap', 'grid_point_cap', 'sphere_degree_cap',
                     'oversampling'):
            if getattr(self, name) < 1:
                raise PreconditionError(f'{name} must be positive, got {getattr(self, name)}')
        if self.sphere_degree_cap > MAX_SPHERE_DEGREE:
            raise PreconditionError(
                f'sphere_degree_cap is at most {MAX_SPHERE_DEGREE}, '
                f'got {self.sphere_degree_cap}')

    @classmethod
    def from_mapping(cls, values: Mapping[str, Any]) -> Limits:
        return cls(**{key: int(value) for key, value in values.items()})


@dataclass(frozen=True)
class SpectralModel:
    '''
    A model compact manifold whose Laplace spectrum is known in closed form.

    - Torus T^d = [0, 2pi)^d with the probability measure. Modes are lattice vectors k,
      e_k(x) = exp(i<k, x>), eigenvalue |k|^2.
    - Round sphere S^2 with the surface measure (total 4pi). Modes are pairs (l, m) with
      |m| <= l, orthonormal complex harmonics Y_l^m (Condon-Shortley phase), eigenvalue
      l(l + 1).

    limits bound every enumeration, product and grid built for the model; they do not take
    part in equality.
    '''

    geometry: Geometry
    dimension: int
    limits: Limits = field(default_factory=Limits, compare=False)

    def __post_init__(self) -> None:
        if self.geometry is Geometry.TORUS:
            if not 2 <= self.dimension <= MAX_TORUS_DIMENSION:
                raise PreconditionError(
                    f'Torus dimension must lie in [2, {MAX_TORUS_DIMENSION}], '
                    f'got {self.dimension}')
        elif self.dimension != 2:
            raise PreconditionError(f'Only the 2-sphere is modelled, got d={self.dimension}')

    @classmethod
    def torus(cls, dimension: int, limits: Optional[Limits] = None) -> SpectralModel:
        return cls(Geometry.TORUS, dimension, limits or Limits())

    @classmethod
    def sphere(cls, limits: Optional[Limits] = None) -> SpectralModel:
        return cls(Geometry.SPHERE, 2, limits or Limits())

    @property
    def mode_cap(self) -> int:
        return self.limits.mode_cap

    @property
    def is_torus(self) -> bool:
        return self.geometry is Geometry.TORUS

    @property
    def measure_convention(self) -> MeasureConvention:
        if self.is_torus:
            return MeasureConvention.PROBABILITY
        return MeasureConvention.SURFACE

    @property
    def total_measure(self) -> float:
        return 1.0 if self.is_torus else 4.0 * math.pi

    @property
    def label_width(self) -> int:
        '''Number of integers in a mode label.'''
        return self.dimension if self.is_torus else 2

    def check_labels(self, labels: np.ndarray) -> np.ndarray:
        '''Returns labels as an (n, label_width) int64 array, or raises if one is invalid.'''
        array = np.asarray(labels, dtype=np.int64)
        if array.ndim == 1 and array.size == self.label_width:
            array = array.reshape(1, -1)
        if array.ndim != 2 or array.shape[1] != self.label_width:
            raise ModelMismatchError(
                f'{self} expects labels of width {self.label_width}, got shape {array.shape}')
        if not self.is_torus and array.size:
            ell, m = array[:, 0], array[:, 1]
            if np.any(ell < 0) or np.any(np.abs(m) > ell):
                raise ModelMismatchError(f'{self} labels need 0 <= |m| <= l')
        return array

    def eigenvalues(self, labels: np.ndarray) -> np.ndarray:
        '''Exact integer eigenvalues of -Laplacian for an (n, width) label array.'''
        if self.is_torus:
            return np.einsum('ij,ij->i', labels, labels)
        ell = labels[:, 0]
        return ell * (ell + 1)

    def degrees(self, labels: np.ndarray) -> np.ndarray:
        '''Band measure of each label: max |k_i| on the torus, l on the sphere.

        Quadrature grids are sized from this, since it bounds the trigonometric (resp.
        spherical polynomial) degree of a mode.
        '''
        if labels.shape[0] == 0:
            return np.zeros(0, dtype=np.int64)
        if self.is_torus:
            return np.abs(labels).max(axis=1)
        return labels[:, 0].copy()

    def __str__(self) -> str:
        return f'T^{self.dimension}' if self.is_torus else 'S^2'


@dataclass(frozen=True)
class Mode:
    '''One eigenfunction: its label, its eigenvalue lambda^2 and its canonical rank.'''

    label: Label
    eigenvalue: int
    rank: int

    @property
    def frequency(self) -> float:
        return math.sqrt(self.eigenvalue)


class ModeTable(Sequence):
    '''Canonically ordered modes, ranks 0..n-1 (or starting at first_rank).

    Stores labels as one array and only builds Mode objects on access.
    '''

    def __init__(
        self,
        model: SpectralModel,
        labels: np.ndarray,
        first_rank: int = 0,
    ) -> None:
        self.model = model
        self.labels = labels
        self.eigenvalues = model.eigenvalues(labels)
        self.first_rank = first_rank

    def __len__(self) -> int:
        return int(self.labels.shape[0])

    @overload
    def __getitem__(self, index: int) -> Mode:
        ...  # pragma: no cover

    @overload
    def __getitem__(self, index: slice) -> Sequence[Mode]:
        ...  # pragma: no cover

    def __getitem__(self, index: Union[int, slice]) -> Union[Mode, Sequence[Mode]]:
        if isinstance(index, slice):
            return [self[i] for i in range(*index.indices(len(self)))]
        if index < 0:
            index += len(self)
        if not 0 <= index < len(self):
            raise IndexError(index)
        return Mode(
            label=tuple(int(x) for x in self.labels[index]),
            eigenvalue=int(self.eigenvalues[index]),
            rank=self.first_rank + index,
        )

    def __iter__(self) -> Iterator[Mode]:
        for i in range(len(self)):
            yield self[i]

    @property
    def frequencies(self) -> np.ndarray:
        return np.sqrt(self.eigenvalues.astype(float))
