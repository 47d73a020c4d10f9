# -*- coding: utf-8 -*-
# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

'''
Closed-form growth laws.

- Lambda(d, nu): bilinear growth; nu^(1/4) for d = 2, (nu log nu)^(1/2) for d = 3,
  nu^((d - 2)/2) for d >= 4.
- Omega(d, mu): rank budget of a product; mu^(1/2), (mu log mu)^(3/2), mu^(d(d - 2)/2).
- sigma(p): L^p growth of eigenfunctions,
  max(d(1/2 - 1/p) - 1/2, (d - 1)/2 (1/2 - 1/p)).

Logarithms are natural and taken as max(log x, 1), so the d = 3 laws never decrease.
'''

from __future__ import annotations

# System imports
import logging
import math
from dataclasses import dataclass

# Third-party imports

# Local imports
from qlab.errors import PreconditionError


_logger = logging.getLogger(__name__)


def _check(d: int, x: float, name: str) -> None:
    if d < 2:
        raise PreconditionError(f'dimension must be >= 2, got {d}')
    if not x >= 1:
        raise PreconditionError(f'{name} must be >= 1, got {x}')


def _log(x: float) -> float:
    return max(math.log(x), 1.0)


def lambda_exponent(d: int, nu: float) -> float:
    _check(d, nu, 'nu')
    if d == 2:
        return nu ** 0.25
    if d == 3:
        return math.sqrt(nu * _log(nu))
    return nu ** ((d - 2) / 2.0)


def omega_exponent(d: int, mu: float) -> float:
    _check(d, mu, 'mu')
    if d == 2:
        return math.sqrt(mu)
    if d == 3:
        return (mu * _log(mu)) ** 1.5
    return mu ** (d * (d - 2) / 2.0)


def sigma_p(d: int, p: float) -> float:
    if d < 2:
        raise PreconditionError(f'dimension must be >= 2, got {d}')
    if not p >= 2:
        raise PreconditionError(f'p must be >= 2, got {p}')
    gap = 0.5 - 1.0 / p
    return max(d * gap - 0.5, (d - 1) / 2.0 * gap)


def critical_exponent(d: int) -> float:
    '''The p where both branches of sigma agree, 2(d + 1)/(d - 1).'''
    if d < 2:
        raise PreconditionError(f'dimension must be >= 2, got {d}')
    return 2.0 * (d + 1) / (d - 1)


def rank_budget(d: int, mu: float, tolerance: float) -> float:
    '''Omega(d, mu) * tolerance^-d, the rank that brings a product's H^-1 remainder below
    tolerance (up to a constant).'''
    if not tolerance > 0:
        raise PreconditionError(f'tolerance must be > 0, got {tolerance}')
    return omega_exponent(d, mu) * tolerance ** (-d)


def h1_product_exponent(d: int) -> float:
    '''Power of lambda_n in the H^1 bound of a product of quasimodes, 1 + 2 sigma(4).'''
    return 1.0 + 2.0 * sigma_p(d, 4)


def l2_remainder_law(d: int, n: float, nu: float) -> float:
    '''(n / nu)^(1/d) n^((2/d) sigma(4)): L2 decay of the remainder of a product whose
    higher factor has rank n, after projection on nu modes.'''
    _check(d, nu, 'nu')
    if not n >= 1:
        raise PreconditionError(f'n must be >= 1, got {n}')
    return (n / nu) ** (1.0 / d) * n ** (2.0 / d * sigma_p(d, 4))


@dataclass(frozen=True)
class ExponentLaw:
    '''The laws above bound to one dimension.'''

    d: int

    def __post_init__(self) -> None:
        if self.d < 2:
            raise PreconditionError(f'dimension must be >= 2, got {self.d}')

    def lambda_(self, nu: float) -> float:
        return lambda_exponent(self.d, nu)

    def omega(self, mu: float) -> float:
        return omega_exponent(self.d, mu)

    def sigma(self, p: float) -> float:
        return sigma_p(self.d, p)

    @property
    def critical_exponent(self) -> float:
        return critical_exponent(self.d)
