# -*- coding: utf-8 -*-
# Copyright (c) 2026 Contributors as noted in the AUTHORS file
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

# System imports

# Third-party imports

# Local imports
from .cutoffs import DEFAULT_PROFILE, CutoffProfile, smooth_step  # noqa: F401
from .projectors import (  # noqa: F401
    RemainderProfile, ToleranceNorm, cluster_block, lp_block, lp_block_range,
    min_rank_for_tolerance, project_rank, project_window, remainder_norm, remainder_profile,
    smooth_split, tail_block,
)
