# -*- coding: utf-8 -*-
# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from __future__ import annotations

# System imports

# Third-party imports

# Local imports


class QLabError(Exception):
    '''Base class of every error raised on purpose by qlab.'''


class BandwidthError(QLabError, ValueError):
    '''A quadrature grid is too coarse for the band limit of a field.'''


class ResourceError(QLabError, RuntimeError):
    '''An enumeration, convolution or grid would exceed a configured cap.'''


class ModelMismatchError(QLabError, ValueError):
    '''Two fields (or a field and a label set) live on different models.'''


class EmptyWindowError(QLabError, ValueError):
    '''A frequency window or lattice cap holds no mode.'''


class PreconditionError(QLabError, ValueError):
    '''An argument violates the documented precondition of an operation.'''


class DegenerateFitError(QLabError, ValueError):
    '''Not enough (or non-positive) points to fit a power law.'''


class ConfigError(QLabError, ValueError):
    '''An experiment configuration is malformed, incomplete or has unknown keys.'''


class AuditViolation(QLabError, RuntimeError):
    '''A literal inequality failed on computed norms.

    This points at a numerical defect of the implementation, never at the mathematics,
    so experiment runs are aborted when it happens.
    '''
