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
from qlab.errors import PreconditionError
from qlab.fields import SpectralField, inner, l2_norm, multiply, sobolev_norm
from qlab.projections import (
    ToleranceNorm, cluster_block, lp_block, lp_block_range, min_rank_for_tolerance, project_rank,
    project_window, remainder_norm, remainder_profile, smooth_split, tail_block,
)
from qlab.spectra import (
    SpectralModel, enumerate_modes, enumerate_window, mode_of_rank, rank_of, weyl_count,
)


def random_field(model: SpectralModel, low: float, high: float, rng: np.random.Generator,
                 count: int = 10) -> SpectralField:
    window = enumerate_window(model, low, high)
    labels = window[rng.choice(window.shape[0], min(count, window.shape[0]), replace=False)]
    return SpectralField(model, labels, rng.standard_normal(len(labels))
                         + 1j * rng.standard_normal(len(labels)))


def max_difference(f: SpectralField, g: SpectralField) -> float:
    return float(np.max(np.abs((f - g).coeffs), initial=0.0))


@pytest.mark.parametrize('rank', [0, 3, 37, 200, 1000])
def test_rank_projection_partitions(t2: SpectralModel, rng: np.random.Generator,
                                    rank: int) -> None:
    f = random_field(t2, 0, 15, rng, count=40)
    low, high = project_rank(f, rank)
    assert (low + high).as_dict() == f.as_dict()
    assert np.all(rank_of(t2, low.labels) <= rank)
    assert np.all(rank_of(t2, high.labels) > rank)
    # |f - E f|_2^2 is the energy of the coefficients above the rank.
    ranks = rank_of(t2, f.labels)
    expected = float(np.sum(np.abs(f.coeffs[ranks > rank]) ** 2))
    assert l2_norm(f - low) ** 2 == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize('model,high', [
    (SpectralModel.torus(2), 12.0),
    (SpectralModel.torus(3), 5.0),
    (SpectralModel.sphere(), 12.0),
])
@pytest.mark.parametrize('rank', [0, 5, 60, 150])
def test_rank_projections_are_orthogonal(model: SpectralModel, high: float, rank: int,
                                         rng: np.random.Generator) -> None:
    f = random_field(model, 0, high, rng, count=30)
    g = random_field(model, 0, high, rng, count=30)
    ef, _ = project_rank(f, rank)
    _, rg = project_rank(g, rank)
    again, rest = project_rank(ef, rank)
    assert max_difference(again, ef) <= 1e-12
    assert len(rest) == 0
    assert len(project_rank(rg, rank)[0]) == 0
    assert abs(inner(ef, rg)) <= 1e-12


def test_rank_projection_splits_levels(t2: SpectralModel) -> None:
    units = SpectralField.from_modes(t2, {(1, 0): 1, (-1, 0): 1, (0, 1): 1, (0, -1): 1})
    low, high = project_rank(units, 2)
    assert set(low.as_dict()) == {(-1, 0), (0, -1)}
    assert set(high.as_dict()) == {(0, 1), (1, 0)}


def test_rank_projection_edge_cases(t2: SpectralModel, s2: SpectralModel) -> None:
    table = enumerate_modes(t2, 3)
    full = SpectralField(t2, table.labels, np.arange(1, len(table) + 1))
    _, rest = project_rank(full, len(table) - 1)
    assert len(rest) == 0

    nu = 20
    single = SpectralField.mode(s2, mode_of_rank(s2, nu + 1).label)
    low, high = project_rank(single, nu)
    assert len(low) == 0
    assert high.as_dict() == single.as_dict()
    with pytest.raises(PreconditionError):
        project_rank(single, -1)


def test_windows(t2: SpectralModel, rng: np.random.Generator) -> None:
    f = SpectralField.mode(t2, (3, 4))
    assert project_window(f, 5, 6).as_dict() == f.as_dict()
    assert len(project_window(f, 4, 5)) == 0
    assert cluster_block(f, 5).as_dict() == f.as_dict()

    g = random_field(t2, 0, 12, rng, count=60)
    total = SpectralField.zero(t2)
    for k in range(13):
        total = total + cluster_block(g, k)
    assert max_difference(total, g) <= 1e-15
    assert len(tail_block(g, 6.01)) == 0
    assert len(tail_block(g, 2.0)) > 0
    with pytest.raises(PreconditionError):
        project_window(g, 3, 2)


def test_smooth_split(t2: SpectralModel, rng: np.random.Generator) -> None:
    f = SpectralField.mode(t2, (3, 4))
    low, high = smooth_split(f, 3.0)
    assert low.as_dict() == f.as_dict()
    assert len(high) == 0
    low, high = smooth_split(f, 1.0)
    assert len(low) == 0
    assert high.as_dict() == f.as_dict()

    g = random_field(t2, 0, 20, rng, count=80)
    low, high = smooth_split(g, 4.0)
    assert len(project_window(high, 0, 8)) == 0
    assert len(project_window(low, 16, math.inf)) == 0
    assert max_difference(low + high, g) <= 1e-14
    with pytest.raises(PreconditionError):
        smooth_split(g, 0.5)


def test_dyadic_blocks(t2: SpectralModel, rng: np.random.Generator) -> None:
    f = random_field(t2, 0, 30, rng, count=100) + SpectralField.mode(t2, (0, 0), 2.0)
    blocks = SpectralField.zero(t2)
    for j in lp_block_range(f):
        block = lp_block(f, j)
        assert l2_norm(block) <= l2_norm(f)
        blocks = blocks + block
    assert max_difference(blocks, f.restrict(f.eigenvalues > 0)) <= 1e-10

    mode = SpectralField.mode(t2, (3, 4))
    assert len(lp_block(mode, 1)) == 0
    assert len(lp_block(mode, 4)) == 0
    assert len(lp_block(mode, 2)) == 1
    assert lp_block_range(SpectralField.mode(t2, (0, 0))) == range(0)


def test_min_rank_for_tolerance(t2: SpectralModel, rng: np.random.Generator) -> None:
    h = multiply(random_field(t2, 6, 7, rng), random_field(t2, 2, 3, rng))
    size = sobolev_norm(h, -1)
    assert min_rank_for_tolerance(h, 1.01 * size) == 0

    for norm in (ToleranceNorm.H_MINUS_ONE, ToleranceNorm.L2):
        for tolerance in (0.5 * size, 0.1 * size, 0.01 * size):
            nu = min_rank_for_tolerance(h, tolerance, norm)
            assert remainder_norm(h, nu, norm) < tolerance
            if nu > 0:
                assert remainder_norm(h, nu - 1, norm) >= tolerance

    top = int(rank_of(t2, h.labels[-1:])[0])
    assert min_rank_for_tolerance(h, 1e-300) <= top
    with pytest.raises(PreconditionError):
        min_rank_for_tolerance(h, 0.0)


def test_sphere_product_is_band_limited(s2: SpectralModel, rng: np.random.Generator) -> None:
    degree = math.sqrt(8 * 9)
    u = random_field(s2, degree, degree + 0.1, rng, count=5)
    v = random_field(s2, degree, degree + 0.1, rng, count=5)
    h = multiply(u, v)
    nu = min_rank_for_tolerance(h, 1e-12)
    assert nu <= weyl_count(s2, math.sqrt(16 * 17)) - 1


def test_remainder_profile_levels(t2: SpectralModel) -> None:
    h = SpectralField.from_modes(t2, {(1, 0): 1.0, (2, 0): 0.5})
    profile = remainder_profile(h)
    assert profile.eigenvalues.tolist() == [0, 1, 2, 4]
    assert profile.ranks.tolist() == [0, 4, 8, 12]
    assert np.allclose(profile.next_frequencies, [1, math.sqrt(2), 2, math.sqrt(5)])
    assert np.allclose(profile.l2, [math.sqrt(1.25), 0.5, 0.5, 0.0])
    assert np.allclose(profile.h_minus_one, [math.sqrt(0.5 + 0.05), math.sqrt(0.05),
                                             math.sqrt(0.05), 0.0])


def test_remainder_inequalities_on_random_products(t2: SpectralModel,
                                                   rng: np.random.Generator) -> None:
    for trial in range(100):
        u = random_field(t2, 8, 9, rng, count=6)
        v = random_field(t2, 2, 4, rng, count=6)
        h = multiply(u, v)
        size, h1 = l2_norm(h), sobolev_norm(h, 1)
        profile = remainder_profile(h)
        following = profile.next_frequencies
        assert np.all(profile.h_minus_one <= size / np.sqrt(1.0 + following ** 2) * (1 + 1e-12))
        assert np.all(profile.l2 <= h1 / following * (1 + 1e-12))
        assert profile.l2[-1] == 0.0
        if trial % 25 == 0:
            for i in (0, len(profile.ranks) // 2):
                assert remainder_norm(h, int(profile.ranks[i]), 'L2') == pytest.approx(
                    float(profile.l2[i]), abs=1e-12)
