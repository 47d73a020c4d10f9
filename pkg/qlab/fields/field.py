# -*- coding: utf-8 -*-
# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from __future__ import annotations

# System imports
import logging
import numbers
from dataclasses import dataclass
from typing import Dict, Mapping, Optional

# Third-party imports
import numpy as np

# Local imports
from qlab.errors import ModelMismatchError, PreconditionError
from qlab.spectra import Label, SpectralModel, canonical_order


_logger = logging.getLogger(__name__)


def _frozen(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


def _canonical(
    model: SpectralModel,
    labels: np.ndarray,
    coeffs: np.ndarray,
    merge: bool = True,
) -> tuple[np.ndarray, np.ndarray]:
    if merge and labels.shape[0] > 1:
        unique, inverse = np.unique(labels, axis=0, return_inverse=True)
        inverse = inverse.reshape(-1)
        if unique.shape[0] != labels.shape[0]:
            size = unique.shape[0]
            coeffs = (np.bincount(inverse, weights=coeffs.real, minlength=size)
                      + 1j * np.bincount(inverse, weights=coeffs.imag, minlength=size))
            labels = unique

    keep = coeffs != 0
    labels, coeffs = labels[keep], coeffs[keep]
    order = canonical_order(model.eigenvalues(labels), labels)
    return labels[order], coeffs[order]


@dataclass(frozen=True, eq=False, init=False, repr=False)
class SpectralField:
    '''
    A function given by finitely many coefficients <f, e_k> on a SpectralModel.

    Labels are stored once, canonically ordered (eigenvalue, then label); duplicates given
    to the constructor are summed and exact zeros dropped. Both arrays are read-only.
    '''

    model: SpectralModel
    labels: np.ndarray
    coeffs: np.ndarray

    def __init__(
        self,
        model: SpectralModel,
        labels: np.ndarray,
        coeffs: np.ndarray,
    ) -> None:
        checked = model.check_labels(labels)
        values = np.asarray(coeffs, dtype=np.complex128).reshape(-1)
        if values.shape[0] != checked.shape[0]:
            raise PreconditionError(
                f'{checked.shape[0]} labels but {values.shape[0]} coefficients')
        checked, values = _canonical(model, checked, values)
        self._set(model, checked, values)

    def _set(self, model: SpectralModel, labels: np.ndarray, coeffs: np.ndarray) -> None:
        object.__setattr__(self, 'model', model)
        object.__setattr__(self, 'labels', _frozen(np.ascontiguousarray(labels)))
        object.__setattr__(self, 'coeffs', _frozen(np.ascontiguousarray(coeffs)))

    @classmethod
    def from_unique(
        cls,
        model: SpectralModel,
        labels: np.ndarray,
        coeffs: np.ndarray,
    ) -> SpectralField:
        '''Builds a field from labels known to be distinct (skips the merge pass).'''
        labels, coeffs = _canonical(model, labels, np.asarray(coeffs, dtype=np.complex128),
                                    merge=False)
        instance = cls.__new__(cls)
        instance._set(model, labels, coeffs)
        return instance

    @classmethod
    def zero(cls, model: SpectralModel) -> SpectralField:
        return cls(model, np.zeros((0, model.label_width), dtype=np.int64), np.zeros(0))

    @classmethod
    def mode(cls, model: SpectralModel, label: Label, coefficient: complex = 1.0) -> SpectralField:
        return cls(model, np.asarray([label], dtype=np.int64), np.asarray([coefficient]))

    @classmethod
    def from_modes(cls, model: SpectralModel, coeffs: Mapping[Label, complex]) -> SpectralField:
        labels = np.asarray(list(coeffs.keys()), dtype=np.int64)
        if labels.size == 0:
            return cls.zero(model)
        return cls(model, labels, np.asarray(list(coeffs.values()), dtype=np.complex128))

    def __len__(self) -> int:
        return int(self.labels.shape[0])

    @property
    def eigenvalues(self) -> np.ndarray:
        return self.model.eigenvalues(self.labels)

    @property
    def frequencies(self) -> np.ndarray:
        return np.sqrt(self.eigenvalues.astype(float))

    @property
    def bandwidth(self) -> int:
        '''Largest mode degree (max |k_i| on the torus, l on the sphere); 0 when empty.'''
        if len(self) == 0:
            return 0
        return int(self.model.degrees(self.labels).max())

    @property
    def max_frequency(self) -> float:
        if len(self) == 0:
            return 0.0
        return float(self.frequencies[-1])

    def energy(self) -> float:
        '''Sum of |c_k|^2, the squared L2 norm.'''
        return float(np.vdot(self.coeffs, self.coeffs).real)

    def coefficient(self, label: Label) -> complex:
        matches = np.nonzero(np.all(self.labels == np.asarray(label), axis=1))[0]
        if matches.size == 0:
            return 0j
        return complex(self.coeffs[matches[0]])

    def as_dict(self) -> Dict[Label, complex]:
        return {tuple(int(x) for x in label): complex(c)
                for label, c in zip(self.labels, self.coeffs)}

    def _check_same_model(self, other: SpectralField) -> None:
        if self.model != other.model:
            raise ModelMismatchError(f'fields live on {self.model} and {other.model}')

    def __add__(self, other: SpectralField) -> SpectralField:
        if not isinstance(other, SpectralField):
            return NotImplemented
        self._check_same_model(other)
        return SpectralField(self.model, np.concatenate([self.labels, other.labels]),
                             np.concatenate([self.coeffs, other.coeffs]))

    def __neg__(self) -> SpectralField:
        return self.scaled(-1.0)

    def __sub__(self, other: SpectralField) -> SpectralField:
        if not isinstance(other, SpectralField):
            return NotImplemented
        return self + (-other)

    def __mul__(self, factor: complex) -> SpectralField:
        if not isinstance(factor, numbers.Number):
            return NotImplemented
        return self.scaled(complex(factor))

    __rmul__ = __mul__

    def __truediv__(self, factor: complex) -> SpectralField:
        if not isinstance(factor, numbers.Number):
            return NotImplemented
        return self.scaled(1.0 / complex(factor))

    def scaled(self, factor: complex) -> SpectralField:
        return SpectralField.from_unique(self.model, self.labels, self.coeffs * factor)

    def weighted(self, weights: np.ndarray) -> SpectralField:
        '''Multiplies every coefficient by the matching entry of weights (a spectral
        multiplier); coefficients sent to 0 are dropped.'''
        return SpectralField.from_unique(self.model, self.labels, self.coeffs * weights)

    def restrict(self, mask: np.ndarray) -> SpectralField:
        return SpectralField.from_unique(self.model, self.labels[mask], self.coeffs[mask])

    def conj(self) -> SpectralField:
        '''Coefficients of the complex conjugate function.

        Torus: conj(e_k) = e_{-k}. Sphere: conj(Y_l^m) = (-1)^m Y_l^{-m}.
        '''
        if self.model.is_torus:
            return SpectralField.from_unique(self.model, -self.labels, np.conj(self.coeffs))
        m = self.labels[:, 1]
        signs = np.where(m % 2 == 0, 1.0, -1.0)
        labels = np.stack([self.labels[:, 0], -m], axis=1)
        return SpectralField.from_unique(self.model, labels, signs * np.conj(self.coeffs))

    def chop(self, tolerance: float = 0.0, relative: bool = False) -> SpectralField:
        '''Drops coefficients with |c| <= tolerance (times max |c| when relative).'''
        if len(self) == 0:
            return self
        magnitudes = np.abs(self.coeffs)
        threshold = tolerance * magnitudes.max() if relative else tolerance
        return self.restrict(magnitudes > threshold)

    def normalized(self, norm: Optional[float] = None) -> SpectralField:
        '''Rescaled to unit L2 norm.'''
        value = np.sqrt(self.energy()) if norm is None else norm
        if value == 0:
            raise PreconditionError('cannot normalize the zero field')
        return self.scaled(1.0 / value)

    def __repr__(self) -> str:
        return (f'SpectralField({self.model}, {len(self)} modes, '
                f'band {self.bandwidth}, |f|_2={np.sqrt(self.energy()):.6g})')
