# -*- coding: utf-8 -*-
# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from __future__ import annotations

# System imports
import logging
import os
import sys
from importlib import resources

# Third-party imports
import yaml

# Local imports
from qlab.errors import ConfigError
from qlab.utils import SingletonMeta, RecursiveDict

_logger = logging.getLogger(__name__)

THREADS_ENV = 'QLAB_THREADS'


class LabApplication(metaclass=SingletonMeta):
    '''Process-wide settings: packaged defaults plus environment overrides.'''

    def __init__(self) -> None:
        self._logging_ready = False
        self._load_config()

    def setup_logger(self, verbose: bool = False) -> None:
        level = logging.DEBUG if verbose else logging.INFO
        logger = logging.getLogger()
        logger.setLevel(level)
        if self._logging_ready:
            return
        for handler in list(logger.handlers):
            logger.removeHandler(handler)

        formatter = logging.Formatter(
            fmt='{levelname:<7}: {threadName}: {name}: {message}', style='{')
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(formatter)
        logger.addHandler(handler)
        self._logging_ready = True

    def _load_config(self) -> None:
        self._config = RecursiveDict()
        text = resources.files('qlab').joinpath('defaults.yaml').read_text(encoding='utf-8')
        self._config.merge(yaml.safe_load(text))

        threads = os.environ.get(THREADS_ENV)
        if threads is not None:
            try:
                value = int(threads)
            except ValueError:
                raise ConfigError(f'{THREADS_ENV} must be an integer, got {threads!r}')
            if value < 0:
                raise ConfigError(f'{THREADS_ENV} must be >= 0, got {value}')
            _logger.debug('Thread cap from environment: %d', value)
            self._config['runner']['threads'] = value

    @property
    def config(self) -> RecursiveDict:
        return self._config

    @property
    def threads(self) -> int:
        '''Worker count for sweeps; 0 in the settings means one per CPU.'''
        value = int(self._config['runner']['threads'])
        if value == 0:
            return os.cpu_count() or 1
        return value
