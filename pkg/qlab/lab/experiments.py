# -*- coding: utf-8 -*-
# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

'''
The experiment kinds.

Each kind registers its runner and its fixed CSV columns with Experiments.Registration.
A runner measures every sweep point through a SweepRunner, checks the literal inequalities
the measurements must satisfy (raising AuditViolation when one fails) and fits a power law
to the column the kind is about. run_experiment then compares the fit to the thresholds of
the configuration.
'''

from __future__ import annotations

# System imports
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

# Third-party imports
import numpy as np

# Local imports
from qlab.bounds import (
    ExponentLaw, HighDimTail, h1_product_exponent, l2_remainder_law, rank_budget,
    rhs_bilinear, tail_term,
)
from qlab.errors import AuditViolation, ConfigError
from qlab.fields import SpectralField, l2_norm, lp_norm, multiply, sobolev_norm
from qlab.lab.config import ExperimentConfig, ExperimentKind, FamilyKind
from qlab.lab.fitting import FitResult, fit_exponent
from qlab.lab.records import ExperimentRecord
from qlab.lab.runner import SweepRunner, derive_seed
from qlab.projections import (
    lp_block, lp_block_range, min_rank_for_tolerance, remainder_profile, smooth_split,
)
from qlab.quasimodes import (
    Quasimode, Weights, cluster_quasimode, eigenfunction, lattice_cap, sphere_extremal,
    tail_label, with_tail,
)
from qlab.spectra import (
    SpectralModel, ball_volume, enumerate_modes, frequency_of_rank, weyl_count,
)
from qlab.utils import registration_decorator


_logger = logging.getLogger(__name__)

# Relative slack of the audited inequalities; they hold exactly in exact arithmetic.
AUDIT_SLACK = 1e-9

# Identities (L + H = I, sum of dyadic blocks) must hold to this relative error.
RECONSTRUCTION_TOL = 1e-10

# Injected tail of split audits when the family does not set one.
DEFAULT_TAIL_FACTOR = 4.0
DEFAULT_TAIL_AMPLITUDE = 0.1

Runner = Callable[[ExperimentConfig, SweepRunner], 'Measurement']


@dataclass(frozen=True)
class Measurement:
    records: List[ExperimentRecord]
    fit: Optional[FitResult] = None
    spread: Optional[float] = None


@dataclass(frozen=True)
class ExperimentResult:
    kind: ExperimentKind
    columns: Tuple[str, ...]
    records: List[ExperimentRecord]
    fit: Optional[FitResult]
    spread: Optional[float]
    failures: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        '''The one-line verdict printed by the command line.'''
        parts = [self.kind.value]
        if self.fit is not None:
            parts.append(f'slope={self.fit.slope:.6g}')
            parts.append(f'residual={self.fit.max_abs_residual:.3g}')
            parts.append(f'points={self.fit.points_used}')
        else:
            parts.append(f'records={len(self.records)}')
        if self.spread is not None:
            parts.append(f'spread={self.spread:.6g}')
        parts.append('PASS' if self.passed else 'FAIL')
        if self.failures:
            parts.append('(' + '; '.join(self.failures) + ')')
        return ' '.join(parts)


@dataclass(frozen=True)
class _Entry:
    run: Runner
    columns: Tuple[str, ...]


class Experiments:
    '''Registry of experiment kinds.'''

    _registry: Dict[ExperimentKind, _Entry] = {}

    @staticmethod
    def Registration(kind: str, columns: Sequence[str]) -> Callable[[Runner], Runner]:
        chosen = ExperimentKind(kind)

        def register(run: Runner) -> None:
            Experiments._registry[chosen] = _Entry(run, tuple(columns))

        return registration_decorator(register)

    @classmethod
    def kinds(cls) -> List[ExperimentKind]:
        return list(cls._registry)

    @classmethod
    def columns(cls, kind: Union[ExperimentKind, str]) -> Tuple[str, ...]:
        return cls._entry(kind).columns

    @classmethod
    def runner(cls, kind: Union[ExperimentKind, str]) -> Runner:
        return cls._entry(kind).run

    @classmethod
    def _entry(cls, kind: Union[ExperimentKind, str]) -> _Entry:
        chosen = ExperimentKind(kind)
        if chosen not in cls._registry:
            raise ConfigError(f'no runner registered for {chosen.value}')
        return cls._registry[chosen]


def _audit(value: float, bound: float, what: str, where: str) -> None:
    if value > bound * (1.0 + AUDIT_SLACK):
        raise AuditViolation(f'{what} fails at {where}: {value!r} > {bound!r}')


def _fit(config: ExperimentConfig, points: Sequence[Tuple[float, float]]) -> Optional[FitResult]:
    if len(points) < 3:
        _logger.info('%d sweep points, no exponent fitted', len(points))
        return None
    result = fit_exponent(points, config.fit.log_correction)
    _logger.info('Fitted slope %.6g (max residual %.3g)', result.slope, result.max_abs_residual)
    return result


def _spread(values: Sequence[float]) -> Optional[float]:
    if not values or min(values) <= 0:
        return None
    return max(values) / min(values)


def _is_degree_family(config: ExperimentConfig) -> bool:
    return config.family.kind in (FamilyKind.SECTORAL, FamilyKind.ZONAL)


def _partner_value(config: ExperimentConfig, value: float) -> float:
    '''The higher sweep value paired with `value` (ratio times it, a degree when the family
    is indexed by degrees).'''
    scaled = config.sweep.ratio * value
    return float(round(scaled)) if _is_degree_family(config) else scaled


def sup_bound(f: SpectralField) -> float:
    '''Upper bound of sup |f|: sum_k |c_k| sup |e_k|.'''
    magnitudes = np.abs(f.coeffs)
    if f.model.is_torus:
        return float(magnitudes.sum())
    degrees = f.labels[:, 0].astype(float)
    return float(np.sum(magnitudes * np.sqrt((2.0 * degrees + 1.0) / (4.0 * math.pi))))


def build_quasimode(
    config: ExperimentConfig,
    model: SpectralModel,
    value: float,
    seed: Optional[int] = None,
    axis: int = 0,
) -> Quasimode:
    '''
    The family member at a sweep value: a frequency, or a degree for sectoral and zonal
    harmonics. Torus eigenfunctions sit on the given axis.
    '''
    family = config.family
    kind = family.kind
    if kind is FamilyKind.EIGENFUNCTION:
        label = tail_label(model, value)
        if model.is_torus:
            entries = [0] * model.dimension
            entries[axis % model.dimension] = label[0]
            label = tuple(entries)
        quasimode = eigenfunction(model, label)
    elif kind is FamilyKind.CLUSTER:
        quasimode = cluster_quasimode(model, value, family.width, family.weights, seed,
                                      family.max_modes)
    elif kind is FamilyKind.CAP:
        assert family.cap_width is not None
        quasimode = lattice_cap(model, value, family.cap_width)
    else:
        quasimode = sphere_extremal(kind.value, int(round(value)), model)

    if family.tail_factor is not None:
        amplitude = DEFAULT_TAIL_AMPLITUDE if family.tail_amplitude is None \
            else family.tail_amplitude
        quasimode = with_tail(quasimode, family.tail_factor, amplitude)
    return quasimode


@Experiments.Registration('bilinear-sweep', columns=(
    'd', 'lambda', 'mu', 'family', 'seed', 'modes_u', 'modes_v', 'uv_l2', 'q_u', 'q_v',
    'raw_ratio', 'growth', 'normalized_ratio', 'tail_term', 'rhs', 'bound_ratio',
))
def run_bilinear_sweep(config: ExperimentConfig, runner: SweepRunner) -> Measurement:
    '''|u v|_2 against q(u) q(v) for u at ratio * mu and v at mu.'''
    model = config.build_model()
    variant = config.variant.build()
    law = ExponentLaw(model.dimension)

    def point(mu: float, seed: Optional[int]) -> List[ExperimentRecord]:
        v = build_quasimode(config, model, mu, derive_seed(seed, 'v'), axis=1)
        u = build_quasimode(config, model, _partner_value(config, mu), derive_seed(seed, 'u'))
        uv = l2_norm(multiply(u.field, v.field))
        holder = min(l2_norm(u.field) * sup_bound(v.field), l2_norm(v.field) * sup_bound(u.field))
        _audit(uv, holder, 'Hoelder bound |uv|_2 <= |u|_2 sup|v|', f'mu={mu}')

        low = min(u.frequency, v.frequency)
        growth = law.lambda_(low)
        raw = uv / (u.quality * v.quality)
        tail = 0.0
        if isinstance(variant, HighDimTail):
            lower = v if v.frequency <= u.frequency else u
            tail = tail_term(lower.field, low, variant.N, variant.q)
        rhs = rhs_bilinear(u, v, variant)
        return [{
            'd': law.d, 'lambda': u.frequency, 'mu': v.frequency,
            'family': config.family.kind.value, 'seed': config.seed, 'modes_u': len(u.field),
            'modes_v': len(v.field), 'uv_l2': uv,
            'q_u': u.quality, 'q_v': v.quality, 'raw_ratio': raw, 'growth': growth,
            'normalized_ratio': raw / growth, 'tail_term': tail, 'rhs': rhs,
            'bound_ratio': uv / rhs,
        }]

    records = runner.run(config.sweep.values, point, config.seed)
    fit = _fit(config, [(r['mu'], r['raw_ratio']) for r in records])
    return Measurement(records, fit, _spread([r['normalized_ratio'] for r in records]))


@Experiments.Registration('l4-growth', columns=('ell', 'lambda', 'l4_norm', 'q', 'ratio'))
def run_l4_growth(config: ExperimentConfig, runner: SweepRunner) -> Measurement:
    '''|u|_4 / q(u) per degree (or frequency, for torus families).'''
    model = config.build_model()
    measure = model.total_measure

    def point(value: float, seed: Optional[int]) -> List[ExperimentRecord]:
        u = build_quasimode(config, model, value, derive_seed(seed, 'u'))
        l4 = float(lp_norm(u.field, 4))
        _audit(l2_norm(u.field), measure ** 0.25 * l4, 'Hoelder bound |u|_2 <= |M|^(1/4) |u|_4',
               f'value={value}')
        return [{
            'ell': int(round(value)) if _is_degree_family(config) else value,
            'lambda': u.frequency, 'l4_norm': l4, 'q': u.quality, 'ratio': l4 / u.quality,
        }]

    records = runner.run(config.sweep.values, point, config.seed)
    fit = _fit(config, [(r['lambda'], r['ratio']) for r in records])
    return Measurement(records, fit)


def _remainder_pair(config: ExperimentConfig) -> Tuple[float, float]:
    mu = config.pair.mu
    if mu is None:
        raise ConfigError('remainder-decay needs pair.mu')
    lam = config.pair.lambda_ if config.pair.lambda_ is not None \
        else _partner_value(config, mu)
    return lam, mu


@Experiments.Registration('remainder-decay', columns=(
    'row', 'lambda', 'mu', 'seed', 'eigenvalue', 'rank', 'next_frequency', 'hm1_norm',
    'hm1_bound', 'l2_norm', 'l2_bound', 'h1_norm', 'h1_law', 'l2_law', 'epsilon', 'nu_star',
    'rank_budget',
))
def run_remainder_decay(config: ExperimentConfig, runner: SweepRunner) -> Measurement:
    '''
    Remainders R_nu of the product of u (at lambda) and v (at mu), at every eigenvalue
    level, then the least rank meeting each tolerance of `epsilons`.
    '''
    model = config.build_model()
    d = model.dimension
    lam, mu = _remainder_pair(config)
    epsilons = sorted(config.epsilons, reverse=True)

    def point(key: float, seed: Optional[int]) -> List[ExperimentRecord]:
        u = build_quasimode(config, model, lam, derive_seed(seed, 'u'))
        v = build_quasimode(config, model, key, derive_seed(seed, 'v'), axis=1)
        h = multiply(u.field, v.field)
        high, low = max(u.frequency, v.frequency), min(u.frequency, v.frequency)
        size = l2_norm(h)
        h1 = sobolev_norm(h, 1)
        h1_law = high ** h1_product_exponent(d)
        n = max(weyl_count(model, high), 1)
        common: ExperimentRecord = {'lambda': u.frequency, 'mu': v.frequency, 'seed': config.seed}

        rows: List[ExperimentRecord] = []
        profile = remainder_profile(h)
        for i, eigenvalue in enumerate(profile.eigenvalues):
            following = float(profile.next_frequencies[i])
            hm1_bound = size / math.sqrt(1.0 + following * following)
            l2_bound = h1 / following
            where = f'level {int(eigenvalue)}'
            _audit(float(profile.h_minus_one[i]), hm1_bound, '|R h|_-1 <= |h|_2 / <lambda>',
                   where)
            _audit(float(profile.l2[i]), l2_bound, '|R h|_2 <= |h|_1 / lambda', where)
            rank = int(profile.ranks[i])
            rows.append(dict(
                row='level', **common, eigenvalue=int(eigenvalue), rank=rank,
                next_frequency=following, hm1_norm=float(profile.h_minus_one[i]),
                hm1_bound=hm1_bound, l2_norm=float(profile.l2[i]), l2_bound=l2_bound,
                h1_norm=h1, h1_law=h1_law, l2_law=l2_remainder_law(d, n, rank + 1),
                epsilon=None, nu_star=None, rank_budget=None,
            ))

        previous = 0
        for epsilon in epsilons:
            nu_star = min_rank_for_tolerance(h, epsilon, config.tolerance_norm)
            if nu_star < previous:
                raise AuditViolation(
                    f'least rank {nu_star} at tolerance {epsilon} is below {previous}')
            previous = nu_star
            rows.append(dict(
                row='epsilon', **common, eigenvalue=None, rank=None, next_frequency=None,
                hm1_norm=None, hm1_bound=None, l2_norm=None, l2_bound=None, h1_norm=h1,
                h1_law=h1_law, l2_law=None, epsilon=epsilon, nu_star=nu_star,
                rank_budget=rank_budget(d, max(low, 1.0), epsilon),
            ))
        return rows

    records = runner.run([mu], point, config.seed)
    points = [(r['epsilon'] ** (-d), r['nu_star'] + 1.0) for r in records if r['row'] == 'epsilon']
    return Measurement(records, _fit(config, points))


@Experiments.Registration('cluster-audit', columns=(
    'k', 'j', 'seed', 'trials', 'max_product_norm', 'mean_product_norm', 'min_triangle_slack',
    'growth', 'normalized_max',
))
def run_cluster_audit(config: ExperimentConfig, runner: SweepRunner) -> Measurement:
    '''
    Largest |chi_k u chi_j v|_2 over seeded random unit fields u, v in the windows of k and
    j, a lower estimate of the norm of the bilinear cluster form.
    '''
    model = config.build_model()
    law = ExponentLaw(model.dimension)
    family = config.family

    def draw(frequency: float, seed: Optional[int]) -> SpectralField:
        return cluster_quasimode(model, frequency, family.width, Weights.RANDOM, seed,
                                 family.max_modes).field

    def point(j: float, seed: Optional[int]) -> List[ExperimentRecord]:
        k = _partner_value(config, j)
        norms = []
        slack = math.inf
        for trial in range(config.trials):
            u = draw(k, derive_seed(seed, 'u', trial))
            v = draw(j, derive_seed(seed, 'v', trial))
            low, high = smooth_split(u, j)
            parts = l2_norm(multiply(v, low)) + l2_norm(multiply(v, high))
            uv = l2_norm(multiply(u, v))
            _audit(uv, parts, 'triangle bound |uv|_2 <= |v Lu|_2 + |v Hu|_2',
                   f'k={k}, j={j}, trial {trial}')
            norms.append(uv)
            slack = min(slack, parts - uv)
        growth = law.lambda_(min(k, j))
        largest = max(norms)
        return [{
            'k': k, 'j': j, 'seed': config.seed, 'trials': config.trials,
            'max_product_norm': largest, 'mean_product_norm': float(np.mean(norms)),
            'min_triangle_slack': max(slack, 0.0), 'growth': growth,
            'normalized_max': largest / growth,
        }]

    records = runner.run(config.sweep.values, point, config.seed)
    fit = _fit(config, [(r['j'], r['max_product_norm']) for r in records])
    return Measurement(records, fit, _spread([r['normalized_max'] for r in records]))


@Experiments.Registration('weyl-audit', columns=(
    'lambda', 'count', 'enumerated', 'top_frequency', 'weyl_main', 'normalized',
))
def run_weyl_audit(config: ExperimentConfig, runner: SweepRunner) -> Measurement:
    '''Mode counts against the leading Weyl term, checked against enumeration.'''
    model = config.build_model()
    d = model.dimension
    # Leading term of N(lambda): omega_d lambda^d on T^d, lambda^2 on S^2.
    constant = ball_volume(d) if model.is_torus else 1.0

    def point(lam: float, seed: Optional[int]) -> List[ExperimentRecord]:
        count = weyl_count(model, lam)
        enumerated = None
        if count <= model.mode_cap:
            enumerated = len(enumerate_modes(model, lam))
            if enumerated != count:
                raise AuditViolation(f'{enumerated} modes enumerated below {lam}, '
                                     f'{count} counted')
        top = frequency_of_rank(model, count - 1) if count else 0.0
        _audit(top, lam, 'frequency of the last counted mode', f'lambda={lam}')
        main = constant * lam ** d
        return [{
            'lambda': lam, 'count': count, 'enumerated': enumerated, 'top_frequency': top,
            'weyl_main': main, 'normalized': count / main,
        }]

    records = runner.run(config.sweep.values, point, config.seed)
    fit = _fit(config, [(r['lambda'], float(r['count'])) for r in records])
    return Measurement(records, fit, _spread([r['normalized'] for r in records]))


@Experiments.Registration('split-audit', columns=(
    'lambda', 'modes', 'l_norm', 'h_norm', 'defect', 'q', 'split_bound', 'h_ratio',
    'lp_error', 'split_error',
))
def run_split_audit(config: ExperimentConfig, runner: SweepRunner) -> Measurement:
    '''
    The smooth split L + H of a quasimode carrying a far tail: |H u|_2 against its defect
    bound, plus the reconstruction errors of L + H and of the dyadic blocks.
    '''
    model = config.build_model()
    family = config.family
    factor = DEFAULT_TAIL_FACTOR if family.tail_factor is None else family.tail_factor
    amplitude = DEFAULT_TAIL_AMPLITUDE if family.tail_amplitude is None \
        else family.tail_amplitude

    def point(value: float, seed: Optional[int]) -> List[ExperimentRecord]:
        u = build_quasimode(config, model, value, derive_seed(seed, 'u'))
        if family.tail_factor is None:
            u = with_tail(u, factor, amplitude)
        f = u.field
        lam = u.frequency
        low, high = smooth_split(f, lam)
        h_norm = l2_norm(high)
        bound = u.defect / (3.0 * lam * lam)
        _audit(h_norm, bound, '|H u|_2 <= |(-Delta - lambda^2) u|_2 / (3 lambda^2)',
               f'lambda={lam}')

        size = l2_norm(f)
        split_error = l2_norm(low + high - f)
        blocks = SpectralField.zero(model)
        for j in lp_block_range(f):
            blocks = blocks + lp_block(f, j)
        lp_error = l2_norm(blocks - f.restrict(f.eigenvalues > 0))
        for name, error in (('L + H', split_error), ('dyadic sum', lp_error)):
            _audit(error, RECONSTRUCTION_TOL * size, f'{name} reconstruction',
                   f'lambda={lam}')
        return [{
            'lambda': lam, 'modes': len(f), 'l_norm': l2_norm(low), 'h_norm': h_norm,
            'defect': u.defect, 'q': u.quality, 'split_bound': bound,
            'h_ratio': h_norm * lam / u.quality, 'lp_error': lp_error,
            'split_error': split_error,
        }]

    records = runner.run(config.sweep.values, point, config.seed)
    points = [(r['lambda'], r['h_ratio']) for r in records]
    if any(y <= 0 for _, y in points):
        _logger.warning('Some points have no high-frequency part, no exponent fitted')
        return Measurement(records)
    return Measurement(records, _fit(config, points))


def _verdict(config: ExperimentConfig, measurement: Measurement) -> Tuple[str, ...]:
    checks = config.fit
    failures = []
    fit = measurement.fit
    if checks.min_slope is not None or checks.max_slope is not None:
        if fit is None:
            failures.append('no slope to compare with the thresholds')
        else:
            if checks.min_slope is not None and fit.slope < checks.min_slope:
                failures.append(f'slope {fit.slope:.6g} < {checks.min_slope:g}')
            if checks.max_slope is not None and fit.slope > checks.max_slope:
                failures.append(f'slope {fit.slope:.6g} > {checks.max_slope:g}')
    if checks.max_spread is not None:
        spread = measurement.spread
        if spread is None:
            failures.append('no spread to compare with the threshold')
        elif spread > checks.max_spread:
            failures.append(f'spread {spread:.6g} > {checks.max_spread:g}')
    return tuple(failures)


def run_experiment(
    config: ExperimentConfig,
    runner: Optional[SweepRunner] = None,
) -> ExperimentResult:
    runner = runner or SweepRunner()
    _logger.info('Running %s on %s', config.experiment.value, config.build_model())
    measurement = Experiments.runner(config.experiment)(config, runner)
    failures = _verdict(config, measurement)
    for failure in failures:
        _logger.warning('Threshold violated: %s', failure)
    return ExperimentResult(
        kind=config.experiment,
        columns=Experiments.columns(config.experiment),
        records=measurement.records,
        fit=measurement.fit,
        spread=measurement.spread,
        failures=failures,
    )
