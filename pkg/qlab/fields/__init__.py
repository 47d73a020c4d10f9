# -*- coding: utf-8 -*-
# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

# System imports

# Third-party imports

# Local imports
from .field import SpectralField  # noqa: F401
from .grids import GridField, GridSpec, analyze, grid_lp_norm, synthesize  # noqa: F401
from .products import ProductMethod, constant, multiply, power  # noqa: F401
from .norms import Estimate, EstimateKind, inner, l2_norm, lp_norm, sobolev_norm  # noqa: F401
