# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from __future__ import annotations

# System imports
import logging
from collections.abc import Generator

# Third-party imports
import numpy as np
import pytest

# Local imports
from qlab.spectra import SpectralModel
from qlab.startup import LabApplication


@pytest.fixture
def t2() -> SpectralModel:
    return SpectralModel.torus(2)


@pytest.fixture
def t3() -> SpectralModel:
    return SpectralModel.torus(3)


@pytest.fixture
def s2() -> SpectralModel:
    return SpectralModel.sphere()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20261017)


@pytest.fixture
def fresh_application() -> Generator[None, None, None]:
    '''Rebuilds the settings singleton around a test and restores the root log handlers.'''
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    LabApplication.forget()
    yield
    LabApplication.forget()
    for handler in list(root.handlers):
        if handler not in handlers:
            root.removeHandler(handler)
    for handler in handlers:
        if handler not in root.handlers:
            root.addHandler(handler)
    root.setLevel(level)
