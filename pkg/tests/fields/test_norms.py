# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from __future__ import annotations

# System imports
import math

# Third-party imports
import numpy as np
import pytest

# Local imports
from qlab.errors import ModelMismatchError, PreconditionError, ResourceError
from qlab.fields import EstimateKind, SpectralField, inner, l2_norm, lp_norm, sobolev_norm
from qlab.spectra import SpectralModel


@pytest.mark.parametrize('model,label', [
    (SpectralModel.torus(2), (3, -4)),
    (SpectralModel.torus(3), (1, 2, 2)),
    (SpectralModel.torus(5), (0, 1, 0, 0, 7)),
])
@pytest.mark.parametrize('p', [1, 2, 3, 4, 7.5, math.inf])
def test_torus_modes_have_unit_norms(model: SpectralModel, label: tuple, p: float) -> None:
    norm = lp_norm(SpectralField.mode(model, label), p)
    assert norm == pytest.approx(1.0)
    assert norm.kind is EstimateKind.EXACT


def test_sphere_l4_closed_forms(s2: SpectralModel) -> None:
    zonal = lp_norm(SpectralField.mode(s2, (1, 0)), 4)
    assert zonal == pytest.approx((9.0 / (20.0 * math.pi)) ** 0.25, rel=1e-10)
    assert zonal.kind is EstimateKind.EXACT
    sectoral = lp_norm(SpectralField.mode(s2, (1, 1)), 4)
    assert sectoral == pytest.approx((3.0 / (10.0 * math.pi)) ** 0.25, rel=1e-10)


def test_sum_of_two_exponentials(t2: SpectralModel) -> None:
    # |e_a + e_b|^4 averages to 6 for a != b.
    f = SpectralField.from_modes(t2, {(3, 1): 1.0, (-2, 5): 1.0})
    assert lp_norm(f, 4) == pytest.approx(6.0 ** 0.25, rel=1e-12)
    high = SpectralField.from_modes(SpectralModel.torus(4), {(3, 1, 0, 0): 1.0,
                                                             (0, 0, -2, 5): 1.0})
    norm = lp_norm(high, 4)
    assert norm == pytest.approx(6.0 ** 0.25, rel=1e-12)
    assert norm.kind is EstimateKind.EXACT


def test_parseval(t3: SpectralModel, rng: np.random.Generator) -> None:
    labels = rng.integers(-4, 5, size=(20, 3))
    f = SpectralField(t3, labels, rng.standard_normal(20))
    assert lp_norm(f, 2) == pytest.approx(math.sqrt(np.sum(np.abs(f.coeffs) ** 2)), rel=1e-12)
    assert lp_norm(f, 2) == pytest.approx(l2_norm(f))


def test_estimate_kinds(t2: SpectralModel) -> None:
    f = SpectralField.from_modes(t2, {(1, 0): 1.0, (0, 2): 1.0})
    l2, l3, l4 = lp_norm(f, 2), lp_norm(f, 3), lp_norm(f, 4)
    assert l3.kind is EstimateKind.QUADRATURE
    assert l2 <= l3 <= l4
    sup = lp_norm(f, math.inf)
    assert sup.kind is EstimateKind.LOWER_BOUND
    # The maximum 2 is reached at the origin, a grid node.
    assert sup == pytest.approx(2.0)


def test_lp_norm_errors(t2: SpectralModel) -> None:
    with pytest.raises(PreconditionError):
        lp_norm(SpectralField.mode(t2, (1, 0)), 0.5)
    f = SpectralField.from_modes(SpectralModel.torus(4), {(1, 0, 0, 0): 1.0, (0, 1, 0, 0): 1.0})
    with pytest.raises(ResourceError):
        lp_norm(f, 3)
    assert lp_norm(SpectralField.zero(t2), 4) == 0.0


def test_sobolev_norm(t2: SpectralModel) -> None:
    f = SpectralField.mode(t2, (3, 4))
    assert sobolev_norm(f, -1) == pytest.approx(26 ** -0.5)
    assert sobolev_norm(f, -1) == pytest.approx(0.19612, abs=1e-5)
    assert sobolev_norm(f, 1) == pytest.approx(26 ** 0.5)
    g = SpectralField.from_modes(t2, {(1, 1): 2.0, (0, 3): 1j})
    assert sobolev_norm(g, 0) == pytest.approx(lp_norm(g, 2))


def test_inner(t2: SpectralModel, s2: SpectralModel) -> None:
    a = SpectralField.mode(t2, (1, 2))
    b = SpectralField.mode(t2, (2, 1))
    assert inner(a, a) == 1
    assert inner(a, b) == 0
    f = SpectralField.from_modes(t2, {(1, 2): 1 + 1j, (0, 0): 2.0, (3, 3): -1j})
    g = SpectralField.from_modes(t2, {(1, 2): 2.0, (3, 3): 1.0})
    assert inner(f, f) == pytest.approx(lp_norm(f, 2) ** 2, rel=1e-12)
    assert inner(f, g) == pytest.approx(2 + 1j)
    assert inner(g, f) == pytest.approx(2 - 1j)
    with pytest.raises(ModelMismatchError):
        inner(a, SpectralField.mode(s2, (1, 0)))
