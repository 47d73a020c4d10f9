# -*- coding: utf-8 -*-
# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

'''
Experiment files.

An experiment file is a YAML mapping merged over the "experiment" section of the packaged
defaults (qlab/defaults.yaml); a key the defaults do not declare is an error. A minimal
file:

    experiment: l4-growth
    model: {geometry: sphere}
    family: {kind: sectoral}
    sweep: {values: [8, 16, 32, 64]}
    fit: {min_slope: 0.08, max_slope: 0.18}
'''

from __future__ import annotations

# System imports
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Mapping, Optional, Tuple, Union

# Third-party imports
import yaml

# Local imports
from qlab.bounds import HighDimTail, LowDim, Variant
from qlab.errors import ConfigError, PreconditionError
from qlab.projections import ToleranceNorm
from qlab.quasimodes import Weights
from qlab.spectra import Geometry, Limits, SpectralModel
from qlab.startup import LabApplication
from qlab.utils import RecursiveDict


_logger = logging.getLogger(__name__)


class ExperimentKind(Enum):
    BILINEAR_SWEEP = 'bilinear-sweep'
    L4_GROWTH = 'l4-growth'
    REMAINDER_DECAY = 'remainder-decay'
    CLUSTER_AUDIT = 'cluster-audit'
    WEYL_AUDIT = 'weyl-audit'
    SPLIT_AUDIT = 'split-audit'


class FamilyKind(Enum):
    EIGENFUNCTION = 'eigenfunction'
    CLUSTER = 'cluster'
    SECTORAL = 'sectoral'
    ZONAL = 'zonal'
    CAP = 'cap'


class LogCorrection(Enum):
    NONE = 'none'
    HALF_LOG = 'half_log'
    THREE_HALF_LOG = 'three_half_log'


@dataclass(frozen=True)
class ModelSpec:
    geometry: Geometry
    dimension: int

    def build(self, limits: Limits) -> SpectralModel:
        return SpectralModel(self.geometry, self.dimension, limits)


@dataclass(frozen=True)
class FamilySpec:
    kind: FamilyKind
    width: float = 1.0
    weights: Weights = Weights.UNIFORM
    max_modes: Optional[int] = None
    cap_width: Optional[float] = None
    tail_factor: Optional[float] = None
    tail_amplitude: Optional[float] = None

    @property
    def is_random(self) -> bool:
        return self.weights is Weights.RANDOM or self.max_modes is not None


@dataclass(frozen=True)
class SweepSpec:
    values: Tuple[float, ...]
    ratio: float = 1.0


@dataclass(frozen=True)
class PairSpec:
    lambda_: Optional[float] = None
    mu: Optional[float] = None


@dataclass(frozen=True)
class VariantSpec:
    kind: str = 'low-dim'
    N: Optional[float] = None
    q: Optional[float] = None

    def build(self) -> Variant:
        if self.kind == 'high-dim-tail':
            assert self.N is not None and self.q is not None
            return HighDimTail(N=self.N, q=self.q)
        return LowDim()


@dataclass(frozen=True)
class FitSpec:
    log_correction: LogCorrection = LogCorrection.NONE
    min_slope: Optional[float] = None
    max_slope: Optional[float] = None
    max_spread: Optional[float] = None


@dataclass(frozen=True)
class ExperimentConfig:
    experiment: ExperimentKind
    model: ModelSpec
    family: FamilySpec
    sweep: SweepSpec
    pair: PairSpec = field(default_factory=PairSpec)
    variant: VariantSpec = field(default_factory=VariantSpec)
    fit: FitSpec = field(default_factory=FitSpec)
    seed: Optional[int] = None
    trials: int = 32
    epsilons: Tuple[float, ...] = ()
    tolerance_norm: ToleranceNorm = ToleranceNorm.H_MINUS_ONE
    output: Optional[str] = None
    limits: Limits = field(default_factory=Limits)

    def build_model(self) -> SpectralModel:
        return self.model.build(self.limits)

    @property
    def uses_randomness(self) -> bool:
        return self.family.is_random or self.experiment is ExperimentKind.CLUSTER_AUDIT


def _optional(value: Any, kind: type) -> Any:
    return None if value is None else kind(value)


def _values(raw: Any) -> Tuple[float, ...]:
    if not isinstance(raw, (list, tuple)):
        raise ConfigError(f'expected a list, got {raw!r}')
    return tuple(float(v) for v in raw)


def _build(raw: Mapping[str, Any], limits: Limits, trials: int) -> ExperimentConfig:
    model = raw['model']
    family = raw['family']
    sweep = raw['sweep']
    pair = raw['pair']
    variant = raw['variant']
    fit = raw['fit']
    if raw['experiment'] is None:
        raise ConfigError('experiment kind is missing')
    return ExperimentConfig(
        experiment=ExperimentKind(raw['experiment']),
        model=ModelSpec(Geometry(model['geometry']), int(model['dimension'])),
        family=FamilySpec(
            kind=FamilyKind(family['kind']),
            width=float(family['width']),
            weights=Weights(family['weights']),
            max_modes=_optional(family['max_modes'], int),
            cap_width=_optional(family['cap_width'], float),
            tail_factor=_optional(family['tail_factor'], float),
            tail_amplitude=_optional(family['tail_amplitude'], float),
        ),
        sweep=SweepSpec(values=_values(sweep['values']), ratio=float(sweep['ratio'])),
        pair=PairSpec(lambda_=_optional(pair['lambda'], float), mu=_optional(pair['mu'], float)),
        variant=VariantSpec(kind=str(variant['kind']), N=_optional(variant['N'], float),
                            q=_optional(variant['q'], float)),
        fit=FitSpec(
            log_correction=LogCorrection(fit['log_correction']),
            min_slope=_optional(fit['min_slope'], float),
            max_slope=_optional(fit['max_slope'], float),
            max_spread=_optional(fit['max_spread'], float),
        ),
        seed=_optional(raw['seed'], int),
        trials=int(raw['trials']) if raw['trials'] is not None else trials,
        epsilons=_values(raw['epsilons']),
        tolerance_norm=ToleranceNorm(raw['tolerance_norm']),
        output=_optional(raw['output'], str),
        limits=limits,
    )


def _check_sweep(config: ExperimentConfig) -> None:
    values = config.sweep.values
    if any(b <= a for a, b in zip(values, values[1:])):
        raise ConfigError(f'sweep values must be strictly increasing, got {list(values)}')
    if any(not math.isfinite(v) or v <= 0 for v in values):
        raise ConfigError(f'sweep values must be positive, got {list(values)}')
    if not config.sweep.ratio >= 1:
        raise ConfigError(f'sweep ratio must be >= 1, got {config.sweep.ratio}')
    if config.experiment is ExperimentKind.REMAINDER_DECAY:
        if config.pair.mu is None:
            raise ConfigError('remainder-decay needs pair.mu')
    elif not values:
        raise ConfigError(f'{config.experiment.value} needs sweep values')


def _check_variant(config: ExperimentConfig) -> None:
    variant = config.variant
    if variant.kind not in ('low-dim', 'high-dim-tail'):
        raise ConfigError(f'unknown variant {variant.kind!r}')
    if variant.kind == 'low-dim':
        return
    if config.model.dimension < 6 or config.model.geometry is not Geometry.TORUS:
        raise ConfigError('the high-dim-tail variant applies to T^d with d >= 6')
    if variant.N is None or variant.q is None:
        raise ConfigError('the high-dim-tail variant needs N and q')
    if not variant.N > config.model.dimension / 2:
        raise ConfigError(f'N must exceed d/2, got {variant.N}')


def _check_family(config: ExperimentConfig) -> None:
    family = config.family
    geometry = config.model.geometry
    if family.kind in (FamilyKind.SECTORAL, FamilyKind.ZONAL):
        if geometry is not Geometry.SPHERE:
            raise ConfigError(f'{family.kind.value} harmonics live on the sphere')
        if any(not v.is_integer() for v in config.sweep.values):
            raise ConfigError(
                f'{family.kind.value} sweeps run over degrees, got {list(config.sweep.values)}')
    if family.kind is FamilyKind.CAP:
        if geometry is not Geometry.TORUS:
            raise ConfigError('lattice caps live on tori')
        if family.cap_width is None:
            raise ConfigError('the cap family needs family.cap_width')
    if config.uses_randomness and config.seed is None:
        raise ConfigError(f'{config.experiment.value} with this family needs a seed')


def validate(config: ExperimentConfig) -> ExperimentConfig:
    '''Checks the cross-field rules of an experiment; returns it unchanged.'''
    try:
        config.build_model()
    except PreconditionError as e:
        raise ConfigError(str(e)) from e
    _check_sweep(config)
    _check_variant(config)
    _check_family(config)
    if config.trials < 1:
        raise ConfigError(f'trials must be >= 1, got {config.trials}')
    if any(not e > 0 for e in config.epsilons):
        raise ConfigError(f'epsilons must be positive, got {list(config.epsilons)}')
    return config


def from_mapping(
    values: Mapping[str, Any],
    seed: Optional[int] = None,
    output: Optional[str] = None,
    experiment: Optional[str] = None,
) -> ExperimentConfig:
    '''
    Merges values over the packaged experiment defaults and freezes the result.

    seed and output replace the values of the file; experiment fills in the kind and must
    agree with the file when it names one.
    '''
    settings = LabApplication().config
    merged = RecursiveDict().merge(settings['experiment'])
    try:
        merged.merge(values, strict=True)
    except KeyError as e:
        raise ConfigError(f'unknown configuration key {e.args[0]!r}') from e
    if seed is not None:
        merged['seed'] = seed
    if output is not None:
        merged['output'] = output
    if experiment is not None:
        if merged['experiment'] not in (None, experiment):
            raise ConfigError(
                f'the file describes a {merged["experiment"]} run, not {experiment}')
        merged['experiment'] = experiment

    limits = RecursiveDict().merge(settings['limits'])
    try:
        limits.merge(merged['limits'] or {}, strict=True)
    except KeyError as e:
        raise ConfigError(f'unknown configuration key limits.{e.args[0]}') from e

    trials = int(settings.get_path('runner.trials'))
    try:
        config = _build(merged, Limits.from_mapping(limits), trials)
    except ConfigError:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise ConfigError(f'invalid experiment configuration: {e}') from e
    return validate(config)


def load_config(
    path: Union[str, Path],
    seed: Optional[int] = None,
    output: Optional[str] = None,
    experiment: Optional[str] = None,
) -> ExperimentConfig:
    text = Path(path).read_text(encoding='utf-8')
    values = yaml.safe_load(text)
    if values is None:
        values = {}
    if not isinstance(values, Mapping):
        raise ConfigError(f'{path}: an experiment file holds a mapping')
    _logger.debug('Loaded experiment file %s', path)
    return from_mapping(values, seed=seed, output=output, experiment=experiment)
