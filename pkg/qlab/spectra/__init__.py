# -*- coding: utf-8 -*-
# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

# System imports

# Third-party imports

# Local imports
from .models import (  # noqa: F401
    DEFAULT_MODE_CAP, MAX_SPHERE_DEGREE, Geometry, Label, Limits, MeasureConvention, Mode,
    ModeTable, SpectralModel,
)
from .lattice import (  # noqa: F401
    EIGEN_TOL, ball_volume, canonical_order, cumulative_counts, eigen_ceiling, eigen_range,
    lattice_shell, representation_counts,
)
from .enumeration import (  # noqa: F401
    enumerate_modes, enumerate_window, frequency_of_rank, level_of_rank, level_sizes,
    mode_of_rank, rank_of, weyl_count, window_count,
)
